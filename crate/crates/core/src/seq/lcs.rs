//! Plain and weighted longest common subsequence, and the two exemplar-LCS
//! algorithms built on them for the per-gene special case.

use std::collections::HashMap;

use crate::error::ZedError;
use crate::model::{Alphabet, GeneFamily, Genome, SeqGenome, SignedGene};

/// Per-family weights for [`weighted_lcs`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightAssignment {
    weight_of: HashMap<GeneFamily, u64>,
    /// Weight given to mandatory families when built by [`WeightAssignment::for_elcs`].
    pub mandatory_weight: Option<u64>,
}

impl WeightAssignment {
    pub fn new(weight_of: HashMap<GeneFamily, u64>) -> Self {
        WeightAssignment {
            weight_of,
            mandatory_weight: None,
        }
    }

    /// Weight `w` on mandatory families, 1 on everything else present in `a`
    /// or `b`.
    pub fn for_elcs(a: &SeqGenome, b: &SeqGenome, alphabet: &Alphabet, w: u64) -> Self {
        let weight_of = a
            .families()
            .union(&b.families())
            .chain(alphabet.mandatory())
            .map(|&f| (f, if alphabet.is_mandatory(f) { w } else { 1 }))
            .collect();
        WeightAssignment {
            weight_of,
            mandatory_weight: Some(w),
        }
    }

    pub fn uniform(a: &SeqGenome, b: &SeqGenome, weight: u64) -> Self {
        let weight_of = a
            .families()
            .union(&b.families())
            .map(|&f| (f, weight))
            .collect();
        WeightAssignment::new(weight_of)
    }

    pub fn weight(&self, family: GeneFamily) -> Option<u64> {
        self.weight_of.get(&family).copied()
    }

    pub fn total(&self, seq: &SeqGenome) -> Result<u64, ZedError> {
        seq.genes()
            .iter()
            .map(|g| {
                self.weight(g.family)
                    .ok_or(ZedError::MissingWeight(g.family))
            })
            .sum()
    }
}

const DIAG: u8 = 0;
const UP: u8 = 1;
const LEFT: u8 = 2;

/// Maximum-weight common subsequence over exact signed-gene equality.
///
/// Scores live in two rolling rows; the traceback is a byte matrix filled
/// with the canonical preference diagonal > up > left, so the output is
/// deterministic among equal-weight optima.
fn max_weight_common<F>(a: &[SignedGene], b: &[SignedGene], weight: F) -> (Vec<SignedGene>, u64)
where
    F: Fn(GeneFamily) -> u64,
{
    let (n, m) = (a.len(), b.len());
    let cols = m + 1;
    let mut prev = vec![0u64; cols];
    let mut cur = vec![0u64; cols];
    let mut dir = vec![LEFT; (n + 1) * cols];
    for i in 1..=n {
        cur[0] = 0;
        dir[i * cols] = UP;
        let ai = a[i - 1];
        let wi = weight(ai.family);
        for j in 1..=m {
            let up = prev[j];
            let left = cur[j - 1];
            let (mut best, mut d) = if up >= left { (up, UP) } else { (left, LEFT) };
            if ai == b[j - 1] {
                let diag = prev[j - 1] + wi;
                if diag >= best {
                    best = diag;
                    d = DIAG;
                }
            }
            cur[j] = best;
            dir[i * cols + j] = d;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let total = prev[m];

    let mut out = Vec::new();
    let (mut i, mut j) = (n, m);
    while i > 0 && j > 0 {
        match dir[i * cols + j] {
            DIAG => {
                out.push(a[i - 1]);
                i -= 1;
                j -= 1;
            }
            UP => i -= 1,
            _ => j -= 1,
        }
    }
    out.reverse();
    (out, total)
}

/// A longest common subsequence of `a` and `b`; O(|a|·|b|) time.
pub fn lcs(a: &SeqGenome, b: &SeqGenome) -> SeqGenome {
    SeqGenome::new(max_weight_common(a.genes(), b.genes(), |_| 1).0)
}

/// A common subsequence of maximum total weight. With unit weights this is
/// an LCS.
pub fn weighted_lcs(
    a: &SeqGenome,
    b: &SeqGenome,
    weights: &WeightAssignment,
) -> Result<SeqGenome, ZedError> {
    for g in a.genes().iter().chain(b.genes()) {
        if weights.weight(g.family).is_none() {
            return Err(ZedError::MissingWeight(g.family));
        }
    }
    let (seq, _) = max_weight_common(a.genes(), b.genes(), |f| {
        weights.weight(f).unwrap_or_default()
    });
    Ok(SeqGenome::new(seq))
}

/// Fails unless every mandatory family occurs at most once in `a` or in `b`.
pub(crate) fn check_mandatory_special(
    a: &SeqGenome,
    b: &SeqGenome,
    alphabet: &Alphabet,
) -> Result<(), ZedError> {
    let pa = a.occurrence_profile();
    let pb = b.occurrence_profile();
    for &f in alphabet.mandatory() {
        let (ca, cb) = (pa.count(f), pb.count(f));
        if ca >= 2 && cb >= 2 {
            return Err(ZedError::precondition(format!(
                "mandatory family {f} occurs {ca} times in the first sequence and {cb} times in the second"
            )));
        }
    }
    Ok(())
}

fn contains_all_mandatory(seq: &SeqGenome, alphabet: &Alphabet) -> bool {
    let families = seq.families();
    alphabet.mandatory().iter().all(|f| families.contains(f))
}

/// Decides whether `a` and `b` have a common subsequence containing every
/// mandatory family: drop the optional symbols, take an LCS of what is left,
/// and check it for all mandatory families.
pub fn algorithm1_feasibility(
    a: &SeqGenome,
    b: &SeqGenome,
    alphabet: &Alphabet,
) -> Result<bool, ZedError> {
    check_mandatory_special(a, b, alphabet)?;
    let a_mand = a.retain_families(|f| alphabet.is_mandatory(f));
    let b_mand = b.retain_families(|f| alphabet.is_mandatory(f));
    Ok(contains_all_mandatory(&lcs(&a_mand, &b_mand), alphabet))
}

/// Exemplar LCS in the per-gene special case. Mandatory families weigh
/// `min(|a|, |b|) + 1`, optional ones weigh 1; the maximum-weight common
/// subsequence is the answer if it holds every mandatory family.
pub fn algorithm2_elcs(
    a: &SeqGenome,
    b: &SeqGenome,
    alphabet: &Alphabet,
) -> Result<Option<SeqGenome>, ZedError> {
    let w = a.len().min(b.len()) as u64 + 1;
    elcs_with_mandatory_weight(a, b, alphabet, w)
}

pub(crate) fn elcs_with_mandatory_weight(
    a: &SeqGenome,
    b: &SeqGenome,
    alphabet: &Alphabet,
    w: u64,
) -> Result<Option<SeqGenome>, ZedError> {
    check_mandatory_special(a, b, alphabet)?;
    let weights = WeightAssignment::for_elcs(a, b, alphabet, w);
    let best = weighted_lcs(a, b, &weights)?;
    Ok(contains_all_mandatory(&best, alphabet).then_some(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn s(v: &[i64]) -> SeqGenome {
        SeqGenome::from_signed(v)
    }

    fn fams(ids: &[u32]) -> BTreeSet<GeneFamily> {
        ids.iter().map(|&i| GeneFamily::of(i)).collect()
    }

    fn elcs_pair() -> (SeqGenome, SeqGenome, Alphabet) {
        let a = s(&[1, 2, 4, 2, 3, 5, 4, 5]);
        let b = s(&[1, 1, 4, 2, 4, 4, 3, 5, 5, 5]);
        let alpha = Alphabet::new(fams(&[1, 2, 3]), fams(&[4, 5])).unwrap();
        (a, b, alpha)
    }

    /// Maximum total weight over every subsequence of `a` that also embeds in `b`.
    fn brute_max_weight(a: &SeqGenome, b: &SeqGenome, w: &WeightAssignment) -> u64 {
        let n = a.len();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter_map(|mask| {
                let sub: SeqGenome = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| a.genes()[i])
                    .collect();
                crate::seq::is_subsequence(&sub, b).then(|| w.total(&sub).unwrap())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn lcs_examples() {
        let got = lcs(&s(&[1, 2, 2, 3]), &s(&[1, 1, 2, 3]));
        assert_eq!(got, s(&[1, 2, 3]));
        assert_eq!(lcs(&s(&[1, 2, 3]), &s(&[3, 2, 1])).len(), 1);
        let x = s(&[4, -1, 2, 2, -7]);
        assert_eq!(lcs(&x, &x), x);
        assert!(lcs(&SeqGenome::default(), &x).is_empty());
    }

    #[test]
    fn lcs_respects_sign() {
        assert!(lcs(&s(&[1, 2]), &s(&[-1, -2])).is_empty());
    }

    #[test]
    fn lcs_tie_break_is_canonical() {
        // Both <1> and <2> are optimal; diagonal-first traceback from the
        // bottom-right corner keeps the later match.
        assert_eq!(lcs(&s(&[1, 2]), &s(&[2, 1])), s(&[1]));
        assert_eq!(lcs(&s(&[2, 1]), &s(&[1, 2])), s(&[2]));
    }

    #[test]
    fn weighted_lcs_on_elcs_pair() {
        let (a, b, alpha) = elcs_pair();
        let w = WeightAssignment::for_elcs(&a, &b, &alpha, 9);
        // brute force over all 2^8 subsequences of a
        assert_eq!(brute_max_weight(&a, &b, &w), 30);
        let best = weighted_lcs(&a, &b, &w).unwrap();
        assert_eq!(w.total(&best).unwrap(), 30);
        assert!(crate::seq::is_subsequence(&best, &a));
        assert!(crate::seq::is_subsequence(&best, &b));
        // the other maximum-weight answer
        assert_eq!(w.total(&s(&[1, 2, 4, 3, 5, 5])).unwrap(), 30);
    }

    #[test]
    fn weighted_lcs_degenerate_cases() {
        let a = s(&[1]);
        let b = s(&[2]);
        let w = WeightAssignment::uniform(&a, &b, 1);
        assert!(weighted_lcs(&a, &b, &w).unwrap().is_empty());

        let (a, b, _) = elcs_pair();
        let w = WeightAssignment::uniform(&a, &b, 1);
        let got = weighted_lcs(&a, &b, &w).unwrap();
        assert_eq!(w.total(&got).unwrap(), lcs(&a, &b).len() as u64);
    }

    #[test]
    fn weighted_lcs_missing_weight() {
        let a = s(&[1, 2]);
        let w = WeightAssignment::new([(GeneFamily::of(1), 1)].into());
        assert_eq!(
            weighted_lcs(&a, &a, &w),
            Err(ZedError::MissingWeight(GeneFamily::of(2)))
        );
    }

    #[test]
    fn algorithm1_examples() {
        let (a, b, alpha) = elcs_pair();
        assert!(algorithm1_feasibility(&a, &b, &alpha).unwrap());

        let empty = Alphabet::from_mandatory([], &a, &b);
        assert!(algorithm1_feasibility(&a, &b, &empty).unwrap());

        let (a, b) = (s(&[1, 2]), s(&[2, 2, 1]));
        let alpha = Alphabet::new(fams(&[1, 2]), BTreeSet::new()).unwrap();
        assert!(!algorithm1_feasibility(&a, &b, &alpha).unwrap());
    }

    #[test]
    fn algorithm1_rejects_general_mandatory() {
        let (a, b) = (s(&[1, 1]), s(&[1, 1]));
        let alpha = Alphabet::new(fams(&[1]), BTreeSet::new()).unwrap();
        assert!(matches!(
            algorithm1_feasibility(&a, &b, &alpha),
            Err(ZedError::PreconditionViolated(_))
        ));
        assert!(algorithm2_elcs(&a, &b, &alpha).is_err());
    }

    #[test]
    fn algorithm2_examples() {
        let (a, b, alpha) = elcs_pair();
        let c = algorithm2_elcs(&a, &b, &alpha).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        let p = c.occurrence_profile();
        for f in [1, 2, 3] {
            assert_eq!(p.count(GeneFamily::of(f)), 1);
        }

        let x = s(&[1, 2, 3]);
        let alpha = Alphabet::new(fams(&[1, 2, 3]), BTreeSet::new()).unwrap();
        assert_eq!(algorithm2_elcs(&x, &x, &alpha).unwrap(), Some(x.clone()));

        let (a, b) = (s(&[1, 2]), s(&[2, 2, 1]));
        let alpha = Alphabet::new(fams(&[1, 2]), BTreeSet::new()).unwrap();
        assert_eq!(algorithm2_elcs(&a, &b, &alpha).unwrap(), None);
    }

    #[test]
    fn algorithm2_with_no_mandatory_is_plain_lcs() {
        let (a, b, _) = elcs_pair();
        let alpha = Alphabet::from_mandatory([], &a, &b);
        let got = algorithm2_elcs(&a, &b, &alpha).unwrap().unwrap();
        assert_eq!(got.len(), lcs(&a, &b).len());
    }
}

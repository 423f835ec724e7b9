//! Permutation scan, exact for any occurrence counts, O(k!·n²) in the
//! chromosome count k.

use rayon::prelude::*;

use crate::error::ZedError;
use crate::model::{check_same_universe, GeneFamily, Genome, SetChromosome, SetGenome};

use super::{pad_to_equal_k, SetDecision};

pub const DEFAULT_K_CAP: usize = 10;

/// Fixed-width bitset over the dense family index.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(words: usize) -> Self {
        Bits(vec![0; words])
    }

    fn set(&mut self, bit: usize) {
        self.0[bit / 64] |= 1 << (bit % 64);
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn union(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.union_with(other);
        out
    }
}

struct Scan {
    k: usize,
    /// `cover[i * k + j]` is `A_i ∩ B_j` as a bitset.
    cover: Vec<Bits>,
    /// `reachable[i]` is the union of `A_i, ..., A_{k-1}`.
    reachable: Vec<Bits>,
    full: Bits,
}

impl Scan {
    /// Lexicographically first completion of `prefix` whose matched
    /// intersections cover every family.
    fn search(&self, prefix: &mut Vec<usize>, used: &mut [bool], acc: &Bits) -> bool {
        let row = prefix.len();
        if row == self.k {
            return *acc == self.full;
        }
        if acc.union(&self.reachable[row]) != self.full {
            return false;
        }
        for col in 0..self.k {
            if used[col] {
                continue;
            }
            used[col] = true;
            prefix.push(col);
            let next = acc.union(&self.cover[row * self.k + col]);
            if self.search(prefix, used, &next) {
                return true;
            }
            prefix.pop();
            used[col] = false;
        }
        false
    }
}

pub fn algorithm4_fpt(g1: &SetGenome, g2: &SetGenome) -> Result<SetDecision, ZedError> {
    algorithm4_fpt_with_cap(g1, g2, DEFAULT_K_CAP)
}

/// Pads both genomes to k = max(k1, k2) chromosomes and scans permutations
/// π of the second genome's chromosomes for one where the sets
/// `A_i ∩ B_π(i)` together contain every family. The reported π is the
/// lexicographically smallest such permutation, independent of how many
/// threads run the scan.
pub fn algorithm4_fpt_with_cap(
    g1: &SetGenome,
    g2: &SetGenome,
    cap: usize,
) -> Result<SetDecision, ZedError> {
    let k = g1.k().max(g2.k());
    if k > cap {
        return Err(ZedError::CapExceeded {
            what: "chromosome count k",
            actual: k,
            cap,
        });
    }
    if check_same_universe(&g1.occurrence_profile(), &g2.occurrence_profile()).is_err() {
        return Ok(SetDecision::no());
    }
    let (p1, p2) = pad_to_equal_k(g1, g2);
    let families: Vec<GeneFamily> = p1.ground_set().iter().copied().collect();
    let words = families.len().div_ceil(64).max(1);
    let to_bits = |c: &SetChromosome| {
        let mut bits = Bits::empty(words);
        for f in c.members() {
            if let Ok(idx) = families.binary_search(f) {
                bits.set(idx);
            }
        }
        bits
    };
    let mut full = Bits::empty(words);
    (0..families.len()).for_each(|b| full.set(b));

    let mut cover = Vec::with_capacity(k * k);
    for a in p1.chromosomes() {
        for b in p2.chromosomes() {
            cover.push(to_bits(&a.intersection(b)));
        }
    }
    let mut reachable = vec![Bits::empty(words); k + 1];
    for i in (0..k).rev() {
        reachable[i] = reachable[i + 1].union(&to_bits(&p1.chromosomes()[i]));
    }
    let scan = Scan {
        k,
        cover,
        reachable,
        full,
    };

    let found = if k == 0 {
        (families.is_empty()).then(Vec::new)
    } else {
        (0..k).into_par_iter().find_map_first(|first| {
            let mut used = vec![false; k];
            used[first] = true;
            let mut prefix = vec![first];
            let acc = scan.cover[first].clone();
            scan.search(&mut prefix, &mut used, &acc).then_some(prefix)
        })
    };
    let Some(permutation) = found else {
        return Ok(SetDecision::no());
    };

    // Keep each family only in the first matched pair that covers it.
    let mut taken = std::collections::BTreeSet::new();
    let mut blocks = Vec::new();
    for (i, &j) in permutation.iter().enumerate() {
        let block: SetChromosome = p1.chromosomes()[i]
            .intersection(&p2.chromosomes()[j])
            .members()
            .iter()
            .copied()
            .filter(|f| taken.insert(*f))
            .collect();
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    Ok(SetDecision {
        certificate: Some(SetGenome::new(blocks)),
        witness_matching: None,
        witness_permutation: Some(permutation),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::verify_set_certificate;

    fn g(c: &[&[u32]]) -> SetGenome {
        SetGenome::from_ids(c)
    }

    #[test]
    fn introduction_example() {
        let g1 = g(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]);
        let g2 = g(&[&[1, 2], &[2, 3, 4], &[3, 4, 5], &[1, 5]]);
        let d = algorithm4_fpt(&g1, &g2).unwrap();
        let cert = d.certificate.clone().unwrap();
        assert!(verify_set_certificate(&g1, &g2, &cert));
        assert!(verify_set_certificate(
            &g1,
            &g2,
            &g(&[&[1, 2], &[3], &[4, 5]])
        ));
        assert_eq!(d.witness_permutation.unwrap().len(), 4);
    }

    #[test]
    fn single_chromosome() {
        let x = g(&[&[1, 2]]);
        let d = algorithm4_fpt(&x, &x).unwrap();
        assert_eq!(d.witness_permutation, Some(vec![0]));
    }

    #[test]
    fn crossing_match() {
        let d = algorithm4_fpt(&g(&[&[1], &[2]]), &g(&[&[2], &[1]])).unwrap();
        assert_eq!(d.witness_permutation, Some(vec![1, 0]));
    }

    #[test]
    fn pigeonhole_no() {
        assert!(!algorithm4_fpt(&g(&[&[1, 2]]), &g(&[&[1], &[2]]))
            .unwrap()
            .is_yes());
    }

    #[test]
    fn smallest_permutation_is_reported() {
        // every permutation works; the identity must win
        let x = g(&[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]);
        let d = algorithm4_fpt(&x, &x).unwrap();
        assert_eq!(d.witness_permutation, Some(vec![0, 1, 2]));
        assert_eq!(d.certificate.unwrap(), g(&[&[1, 2, 3]]));
    }

    #[test]
    fn cap() {
        let x = g(&[&[1], &[2], &[3]]);
        assert!(matches!(
            algorithm4_fpt_with_cap(&x, &x, 2),
            Err(ZedError::CapExceeded { actual: 3, .. })
        ));
    }
}

//! Algorithms on ordered (monochromosomal) genomes.

mod elcs_oracle;
mod exact;
mod lcs;

pub use elcs_oracle::{elcs_exact_oracle, elcs_exact_oracle_with_cap, DEFAULT_MANDATORY_CAP};
pub use exact::{zed_seq_exact, zed_seq_exact_with_cap, DEFAULT_FAMILY_CAP};
pub use lcs::{algorithm1_feasibility, algorithm2_elcs, lcs, weighted_lcs, WeightAssignment};

pub(crate) use lcs::elcs_with_mandatory_weight;

use crate::error::ZedError;
use crate::model::{classify_instance, Genome, SeqGenome};

/// Yes/no answer for a sequence instance. The certificate is present exactly
/// when the answer is yes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqDecision {
    pub certificate: Option<SeqGenome>,
}

impl SeqDecision {
    pub fn yes(certificate: SeqGenome) -> Self {
        SeqDecision {
            certificate: Some(certificate),
        }
    }

    pub fn no() -> Self {
        SeqDecision { certificate: None }
    }

    pub fn is_yes(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Greedy left-to-right embedding test under exact signed equality.
pub fn is_subsequence(x: &SeqGenome, y: &SeqGenome) -> bool {
    let mut rest = y.genes().iter();
    x.genes().iter().all(|g| rest.any(|h| h == g))
}

/// Linear-time case: the duplicate-free side has to embed into the other.
pub fn zed_one_side_duplicate_free(
    exemplar_side: &SeqGenome,
    other: &SeqGenome,
) -> Result<SeqDecision, ZedError> {
    if !exemplar_side.occurrence_profile().is_exemplar() {
        return Err(ZedError::precondition(
            "the exemplar side contains a duplicated family",
        ));
    }
    Ok(if is_subsequence(exemplar_side, other) {
        SeqDecision::yes(exemplar_side.clone())
    } else {
        SeqDecision::no()
    })
}

/// Zero exemplar distance when every family occurs exactly once in at least
/// one of the genomes. Any common subsequence then holds each family at most
/// once, so the answer is yes iff an LCS covers every family.
pub fn zed_seq_special(g1: &SeqGenome, g2: &SeqGenome) -> Result<SeqDecision, ZedError> {
    let class = match classify_instance(g1, g2) {
        Ok(class) => class,
        Err(ZedError::FamilyMismatch { .. }) => return Ok(SeqDecision::no()),
        Err(e) => return Err(e),
    };
    if !class.is_special() {
        return Err(ZedError::precondition(
            "some family occurs at least twice in both genomes",
        ));
    }
    let common = lcs(g1, g2);
    Ok(if common.len() == g1.families().len() {
        SeqDecision::yes(common)
    } else {
        SeqDecision::no()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::verify_seq_certificate;

    fn s(v: &[i64]) -> SeqGenome {
        SeqGenome::from_signed(v)
    }

    #[test]
    fn subsequence_examples() {
        let g2 = s(&[-1, -4, 1, 2, -5, 3, -2, -6, 3]);
        assert!(is_subsequence(&s(&[-4, 1, 2, -5, 3, -6]), &g2));
        assert!(is_subsequence(&SeqGenome::default(), &g2));
        assert!(!is_subsequence(&s(&[1, 2]), &s(&[2, 1])));
        assert!(!is_subsequence(&s(&[1]), &s(&[-1])));
    }

    #[test]
    fn one_side_examples() {
        let d = zed_one_side_duplicate_free(&s(&[1, 2, 3]), &s(&[2, 1, 2, 3])).unwrap();
        assert_eq!(d.certificate, Some(s(&[1, 2, 3])));
        assert!(zed_one_side_duplicate_free(&s(&[1]), &s(&[1]))
            .unwrap()
            .is_yes());
        assert!(!zed_one_side_duplicate_free(&s(&[1, 2]), &s(&[2, 1]))
            .unwrap()
            .is_yes());
        assert!(zed_one_side_duplicate_free(&s(&[1, 1]), &s(&[1])).is_err());
    }

    #[test]
    fn special_examples() {
        let (a, b) = (s(&[1, 1, 2]), s(&[1, 2, 2]));
        let d = zed_seq_special(&a, &b).unwrap();
        assert_eq!(d.certificate, Some(s(&[1, 2])));
        assert!(verify_seq_certificate(&a, &b, &s(&[1, 2])));

        let ex = s(&[3, -1, 2]);
        assert_eq!(
            zed_seq_special(&ex, &ex).unwrap().certificate,
            Some(ex.clone())
        );

        assert!(!zed_seq_special(&s(&[1, 2]), &s(&[2, 1])).unwrap().is_yes());
        assert!(!zed_seq_special(&s(&[1, 2]), &s(&[1])).unwrap().is_yes());
    }

    #[test]
    fn special_rejects_general_instances() {
        let g1 = s(&[-4, 1, 2, 3, -5, 1, 2, 3, -6]);
        let g2 = s(&[-1, -4, 1, 2, -5, 3, -2, -6, 3]);
        assert!(matches!(
            zed_seq_special(&g1, &g2),
            Err(ZedError::PreconditionViolated(_))
        ));
    }
}

use thiserror::Error;

use crate::model::GeneFamily;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZedError {
    /// A family occurs in one genome but not in the other.
    #[error("family {family} occurs in only one genome")]
    FamilyMismatch { family: GeneFamily },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{what} is {actual}, above the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("no weight assigned to family {0}")]
    MissingWeight(GeneFamily),

    #[error("search exceeded its time budget of {budget_ms} ms")]
    Timeout { budget_ms: u128 },
}

impl ZedError {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        ZedError::PreconditionViolated(msg.into())
    }
}

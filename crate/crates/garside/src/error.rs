use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("atom index {index} out of range for braid index {n}")]
    AtomOutOfRange { index: usize, n: usize },

    #[error("word does not spell a simple element")]
    NotSimple,

    #[error("operand must be positive but has infimum {inf}")]
    NotPositive { inf: i64 },

    #[error("canonical form does not belong to this presentation")]
    PresentationMismatch,

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

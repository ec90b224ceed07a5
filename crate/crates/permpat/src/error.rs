use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate value at positions {0} and {1}")]
    DuplicateValue(usize, usize),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{perm} contains {pattern} at positions {positions:?}")]
    ContainsPattern {
        pattern: String,
        perm: String,
        positions: Vec<usize>,
    },

    #[error("invalid Dyck path: {0}")]
    DyckPath(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series: {0}")]
    Series(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("not a polynomial class: {0}")]
    NotPolynomial(String),

    #[error("set size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pi power mismatch: {0} vs {1}")]
    PiPowerMismatch(u32, u32),
    #[error("index error: {0}")]
    Index(String),
    #[error("order mismatch: expected {expected}, got {got}")]
    OrderMismatch { expected: String, got: usize },
    #[error("insufficient moments: need index {needed}, have {available}")]
    InsufficientMoments { needed: usize, available: usize },
    #[error("missing Toeplitz offset {0}")]
    MissingOffset(i64),
    #[error("odd size {0}")]
    OddSize(usize),
    #[error("degenerate moment sequence: zero norm at degree {0}")]
    Degenerate(usize),
    #[error("family is not orthogonal: <P_{0}, P_{1}> != 0")]
    NotOrthogonal(usize, usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("partition {0} has more than {1} parts")]
    PartitionTooLong(String, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

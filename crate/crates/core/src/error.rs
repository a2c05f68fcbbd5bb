use thiserror::Error;

/// Errors raised by constructors, bijections and enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid multipermutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid angulation: {0}")]
    InvalidAngulation(String),

    #[error("invalid parenthesization: {0}")]
    InvalidParenthesization(String),

    #[error("invalid parking data: {0}")]
    InvalidParking(String),

    /// The operation needs every signature entry to be at least 2.
    #[error("signature {0} has an entry smaller than 2")]
    Proviso(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("enumeration cap of {0} objects exceeded")]
    CapExceeded(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

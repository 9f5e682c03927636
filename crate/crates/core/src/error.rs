use thiserror::Error;

/// Errors raised by group computations and file parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cycle notation: {message} at `{token}`")]
    Parse { message: String, token: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("unsupported degree {0} (must be 1..=255)")]
    Degree(usize),

    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("element {index} does not lie in the parent group")]
    NotInGroup { index: usize },

    #[error("element {index} is the identity")]
    IdentityElement { index: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;

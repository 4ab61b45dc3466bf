use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} exceeds configured bound {bound}")]
    BoundExceeded { what: String, bound: usize },
    #[error("internal consistency violation: {0}")]
    Consistency(String),
    #[error("diagram is not %-avoiding")]
    NotPercentAvoiding,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, Error>;

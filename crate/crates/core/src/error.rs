use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operation requires gcd 1, semigroup has gcd {0}")]
    GcdNotOne(u64),

    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),

    #[error("ring mismatch: {left} vs {right} variables")]
    RingMismatch { left: usize, right: usize },

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("variable x{0} already occurs in the polynomial")]
    VariableOccurs(usize),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

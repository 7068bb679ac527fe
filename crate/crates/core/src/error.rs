use thiserror::Error;

/// Errors raised by the number and polynomial families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("index out of domain: {0}")]
    Domain(String),

    #[error("constant term is not invertible")]
    NotInvertible,

    #[error("exponential requires a zero constant term")]
    NonzeroConstantTerm,

    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

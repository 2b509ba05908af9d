use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation was applied outside its mathematical domain
    /// (inverting zero, a singular basis change, a zero argument to a cube-class relation).
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation needs a finite field but was handed the rationals.
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    /// A sweep or factorization would exceed the configured budget.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A computed result contradicts an established classification statement.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (shape mismatch, bad grammar, invalid table).
    #[error("invalid input: {0}")]
    Input(String),
    /// A chain complex whose differentials do not compose to zero or do not chain.
    #[error("invalid chain complex: {0}")]
    ComplexValidity(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A computation that would exceed the configured size budget.
    #[error("resource budget exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input does not match the expected shape (bad index, bad JSON, unknown name).
    #[error("invalid input: {0}")]
    Input(String),
    /// Size beyond what the bitmask representation or an enumeration can handle.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Well-formed input that violates a structural invariant.
    #[error("invalid structure: {0}")]
    Invalid(String),
    /// An operation's precondition does not hold.
    #[error("precondition failed: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

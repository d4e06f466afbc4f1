use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: out-of-range indices, mismatched shapes, caps.
    #[error("invalid input: {0}")]
    Input(String),
    /// The operation is not defined on the given class of series or forms.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computed result failed its own structural check.
    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

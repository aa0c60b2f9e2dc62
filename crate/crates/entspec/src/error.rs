use thiserror::Error;

/// Errors produced by state construction, file I/O, and sweep operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A state file failed validation; the message names the violated invariant.
    #[error("format error: {0}")]
    Format(String),

    /// The requested qubit count exceeds the cap for this operation.
    #[error("{operation} supports at most n = {cap} qubits, got n = {n}")]
    AboveCap {
        operation: &'static str,
        cap: u32,
        n: u32,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}

//! Shared error type for the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Closing the input pairs would require both (a, b) and (b, a).
    #[error("order contains a cycle: both ({0}, {1}) and ({1}, {0}) are implied")]
    OrderCycle(String, String),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not connected")]
    Disconnected,

    /// Guard against combinatorial explosion in the enumeration oracles.
    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A solver self-check failed; this indicates a bug, never bad user input.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

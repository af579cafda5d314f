use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` covers precondition violations on arguments. `Internal` signals a
/// broken mathematical invariant (a non-integral character sum, a census that
/// does not add up) and always indicates a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("truncation mismatch: degree {left} vs degree {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

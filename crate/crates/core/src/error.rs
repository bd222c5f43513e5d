use thiserror::Error;

/// Library-wide error type.
///
/// `InvalidInput` covers violated preconditions on user-supplied data
/// (unsupported family/rank, non-dominant weights, non-reduced words, ...).
/// `Internal` flags a broken kernel invariant and should never surface for
/// valid inputs; the CLI maps it to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

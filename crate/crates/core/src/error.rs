use thiserror::Error;

/// Errors surfaced by solvers, parsers and reductions.
///
/// `Internal` marks states that a correctness guarantee rules out; hitting one
/// means a guarantee was violated and the caller should surface it loudly
/// rather than degrade to a wrong answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

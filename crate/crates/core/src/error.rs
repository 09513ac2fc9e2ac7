use crate::quiver::Quiver;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A postcondition that the mathematics guarantees was violated.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("relations are not admissible: {0}")]
    NonAdmissible(String),
    #[error("mutation class exceeds cap of {cap} quivers ({} found so far)", partial.len())]
    ClassOverflow { cap: usize, partial: Vec<Quiver> },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}

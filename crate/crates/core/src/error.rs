use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("denominator vanishes at q = {0}")]
    PoleAtPoint(String),
    #[error("degenerate content: CT(L({i})) = CT(L({next})) = {value}")]
    DegenerateContent { i: usize, next: usize, value: String },
    #[error("matrix for {0} is not invertible")]
    NotInvertible(String),
    #[error("no coproduct convention intertwines the R-matrix")]
    ConventionNotFound,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

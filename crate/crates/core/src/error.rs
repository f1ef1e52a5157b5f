use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands were built over different fields.
    #[error("field parameters do not match")]
    ParamsMismatch,
    #[error("invalid field parameters: {0}")]
    InvalidParams(String),
    #[error("domain error: {0}")]
    Domain(String),
    /// A verifier or oracle refused to run because a hypothesis of the
    /// underlying theorem does not hold for the input.
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

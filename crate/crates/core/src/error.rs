use thiserror::Error;

/// Failure classes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EgcError {
    /// Malformed or inconsistent caller input.
    #[error("argument error: {0}")]
    Argument(String),
    /// Input is well formed but outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A denominator vanished at an evaluation point.
    #[error("evaluation error: {0}")]
    Evaluation(String),
    /// Broken internal invariant.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EgcError>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(EgcError::Argument(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(EgcError::Domain(msg.into()))
}

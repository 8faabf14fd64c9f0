use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    /// A caller passed arguments outside an operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A q-quantity that would require dividing by a vanishing quantum integer.
    #[error("degenerate parameter: {0}")]
    Degenerate(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("invalid module label: {0}")]
    InvalidLabel(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("singular matrix")]
    Singular,

    /// Two independent computations of the same quantity disagreed.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

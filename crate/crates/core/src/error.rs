use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The variants are coarse on purpose: the CLI maps them onto its exit codes
/// (usage, computation budget, invariant failure).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("group order {order} exceeds the limit of {limit}")]
    OrderOverflow { order: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("non-integral result: {0}")]
    NonIntegral(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 1 usage, 2 computation budget, 3 invariant failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameters(_) | Error::OrderOverflow { .. } | Error::Parse(_) | Error::Unsupported(_) => 1,
            Error::BudgetExceeded(_) => 2,
            Error::NonIntegral(_) | Error::Invariant(_) => 3,
        }
    }

    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

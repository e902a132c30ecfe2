use thiserror::Error;

/// Errors raised by construction, parsing and the verification machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochError {
    #[error("invalid arity: {0}")]
    InvalidArity(String),
    #[error("a leaf has no root decomposition")]
    NotDecomposable,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl HochError {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        HochError::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = HochError> = std::result::Result<T, E>;

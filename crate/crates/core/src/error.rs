use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("variable `{0}` has no binding")]
    UnboundVariable(&'static str),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("Gram matrix is not symmetric positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("invalid bracket: {0}")]
    InvalidBracket(String),

    #[error("the one-harmonic condition requires an orthonormal basis (identity Gram matrix)")]
    RequiresOrthonormalBasis,

    #[error("invalid parameters: {name} must be {required}")]
    InvalidParameters { name: String, required: String },

    #[error("unknown algebra type {0:?}")]
    UnknownType(String),

    #[error("sampling bound must be at least 1, got {0}")]
    InvalidBound(u64),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}

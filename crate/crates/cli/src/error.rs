use std::io;
use std::path::PathBuf;

use liefields_core::Error as CoreError;
use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    /// Malformed input file; `at` names the offending field.
    #[error("{at}: {message}")]
    Format { at: String, message: String },

    /// The input is well-formed but does not describe a valid metric Lie
    /// algebra (Jacobi identity, positive definiteness).
    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn format(at: impl Into<String>, message: impl ToString) -> Self {
        CliError::Format {
            at: at.into(),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => EXIT_FAILURE,
            CliError::Core(CoreError::NotPositiveDefinite(_)) => EXIT_FAILURE,
            CliError::Io { .. } | CliError::Format { .. } | CliError::Core(_) => EXIT_USAGE,
        }
    }
}

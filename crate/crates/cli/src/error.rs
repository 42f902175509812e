use std::path::PathBuf;

use thiserror::Error;

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid flag: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] normality_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => EXIT_PARSE,
            CliError::Core(normality_core::Error::InconsistencyDetected(_)) => EXIT_INCONSISTENT,
            CliError::Core(_) => EXIT_PRECONDITION,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

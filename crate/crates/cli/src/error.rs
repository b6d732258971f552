use std::path::PathBuf;

use framerep_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: malformed input: {source}", path.display())]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} verification check(s) failed")]
    SuiteFailed(usize),
}

/// Process exit codes.
pub mod exit {
    pub const OTHER: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const DIMENSION: u8 = 3;
    pub const NOT_A_FRAME: u8 = 4;
    pub const NOT_BIJECTIVE: u8 = 5;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) => exit::PARSE,
            CliError::Core(Error::DimensionMismatch { .. } | Error::BadShape { .. }) => exit::DIMENSION,
            CliError::Core(Error::NotAFrame { .. }) => exit::NOT_A_FRAME,
            CliError::Core(Error::NotBijective(_)) => exit::NOT_BIJECTIVE,
            _ => exit::OTHER,
        }
    }
}

use std::path::PathBuf;

use primepair_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DATA: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or flag combinations.
    #[error("{0}")]
    Usage(String),
    /// Valid flags that cannot be satisfied, such as a missing zeros file.
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Data { path: PathBuf, source: CoreError },
    #[error("{0}")]
    Cache(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{failed} of {total} checks failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config(_) => exit::USAGE,
            CliError::Io { .. } | CliError::Data { .. } | CliError::Cache(_) => exit::DATA,
            CliError::Core(e) => match e {
                CoreError::CorruptData(_) | CoreError::WrongFile { .. } | CoreError::Parse { .. } => exit::DATA,
                _ => exit::USAGE,
            },
            CliError::Verification { .. } => exit::VERIFICATION_FAILED,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

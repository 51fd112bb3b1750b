use std::path::PathBuf;

use quandle_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for bad input, 3 when a size cap stopped the computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::DegreeTooLarge { .. } | Error::SearchTooLarge { .. } | Error::TooLargeForBruteForce { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

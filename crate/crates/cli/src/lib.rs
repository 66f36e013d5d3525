//! Suites, result cache and output formats behind the `kirillov` binary.

pub mod cache;
pub mod output;
pub mod select;
pub mod suites;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{key}: {source}")]
    Internal { key: String, source: kirillov::Error },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn internal(key: impl Into<String>, source: kirillov::Error) -> Self {
        CliError::Internal {
            key: key.into(),
            source,
        }
    }

    /// 2 for bad selectors, 3 for everything the library or the filesystem raised.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("config error in `{field}`: {message}")]
    Config { field: String, message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Physics(#[from] bispinor_core::Error),
}

impl LabError {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        LabError::Config { field: field.into(), message: message.into() }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io { path: path.into(), source }
    }

    /// Process exit status: 2 for bad input, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Config { .. } | LabError::Physics(_) => 2,
            LabError::Io { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Core(#[from] tgl_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("failed to encode output: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// True for errors caused by the request rather than the data or system.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Usage(_)
                | Error::Core(
                    tgl_core::Error::InvalidParameter(_)
                        | tgl_core::Error::InvalidInterval { .. }
                        | tgl_core::Error::InvalidK { .. }
                        | tgl_core::Error::UnboundedInterval
                        | tgl_core::Error::UnknownDistanceType
                )
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

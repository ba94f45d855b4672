//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A caller passed something out of contract (bad vertex id, unsorted
    /// support, mismatched limits, ...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested computation would exceed a configured budget. `needed`
    /// is the projected requirement, `cap` the configured limit.
    #[error("resource limit exceeded: {message} (needs {needed}, cap {cap})")]
    Resource {
        message: String,
        needed: u128,
        cap: u128,
    },

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("structural invariant violated: {0}")]
    Structural(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }

    /// True for refusals that should map to a distinct process exit code.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

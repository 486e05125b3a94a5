//! Error type shared across the crate.

use std::path::PathBuf;

/// Errors produced by graph construction, simulation, optimization, and the
/// experiment runners.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A size limit would be exceeded (e.g. qubit counts beyond the dense
    /// statevector / brute-force range).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Rejection sampling ran out of retries.
    #[error("generation failed: {0}")]
    Generation(String),

    /// Every optimization restart failed.
    #[error("optimization failed: {0}")]
    Optimization(String),

    /// A computed quantity fell outside its mathematically valid range.
    #[error("numerical sanity check failed: {0}")]
    NumericalSanity(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    /// True for errors caused by bad caller input rather than a runtime
    /// failure. The CLI maps these to exit code 1, everything else to 2.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::InvalidInput(_) | Error::Capacity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

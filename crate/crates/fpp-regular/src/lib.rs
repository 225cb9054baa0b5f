//! Experiment runner and file formats for first-passage percolation on
//! random regular graphs.
//!
//! The numerical work lives in [`fpp_core`]; this crate adds configuration,
//! parallel trial dispatch, summaries, CSV/JSON output, graph dumps and
//! exploration-trace export.

pub mod harness;
pub mod io;
pub mod output;

pub use fpp_core;
pub use harness::{run, summarize, ExperimentConfig, Mode, TrialRecord};

/// Errors surfaced by the runner and the CLI.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A configuration field is invalid.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// Failure inside the numerical core.
    #[error(transparent)]
    Core(#[from] fpp_core::Error),
    /// Filesystem or stream failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    /// JSON encoding failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    /// Malformed input file.
    #[error("parse error at line {line}: {msg}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// What was wrong.
        msg: String,
    },
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, Error>;

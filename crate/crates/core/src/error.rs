use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is not in [1, {n}]")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("search budget exhausted in {context} after {used} nodes (limit {limit})")]
    Budget {
        context: &'static str,
        used: u64,
        limit: u64,
    },

    #[error("size guard exceeded: {context} supports n <= {guard}, got n = {n}")]
    Guard {
        context: &'static str,
        n: usize,
        guard: usize,
    },

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("malformed family spec `{input}`: {reason}")]
    FamilySpec { input: String, reason: String },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    /// A step of the constructive bound produced something its invariants
    /// rule out. The serialized trace is attached.
    #[error("internal inconsistency: {message}")]
    InternalInconsistency { message: String, trace: String },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error on {}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

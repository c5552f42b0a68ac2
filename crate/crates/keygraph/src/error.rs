//! Error type shared across the crate.

use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while loading inputs, training models,
/// building graphs, or scoring candidates.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: malformed vector entry: {message}")]
    VectorParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("vector dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unknown weighting function id {0} (valid ids are 1..=8)")]
    InvalidFunctionId(u8),

    #[error("document produced an empty vocabulary; nothing to train on")]
    EmptyVocabulary,

    #[error("graph has {nodes} nodes, above the {cap}-node cap for dense eigendecomposition")]
    GraphTooLarge { nodes: usize, cap: usize },

    #[error("tagger model {path}: {message}")]
    TaggerModel { path: PathBuf, message: String },

    #[error("config record line {line}: {message}")]
    ConfigParse { line: usize, message: String },

    #[error("{path}:{line}: malformed report row: {message}")]
    ReportParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Wraps an i/o error with the path it occurred on.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

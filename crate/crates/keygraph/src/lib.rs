//! Unsupervised keyphrase extraction via embedding-similarity graphs.
//!
//! A document is normalized, tagged, and mined for noun-phrase candidates.
//! Each candidate gets two vectors: one trained on the document alone and
//! one from a pretrained table. The candidates become nodes of a weighted
//! graph whose edge weights combine both similarity views, and a graph
//! centrality measure ranks them.
//!
//! The `examples/` directory is the front door; each example exercises one
//! stage end to end:
//!
//! - `candidates`: normalization, tagging, candidate spans, outlier filter
//! - `train_local`: per-document skip-gram and GloVe embeddings
//! - `global_vectors`: pretrained word vectors and coverage reporting
//! - `weighting_functions`: the eight edge-weight functions on one document
//! - `centralities`: the eight centrality measures on a fixed graph
//! - `extract`: the full pipeline on a single document
//! - `evaluate`: dataset scoring against tf-idf and co-occurrence baselines
//! - `sweep`: configuration sweeps and precision/recall curves
//! - `train_tagger`: training the averaged-perceptron tagger
//! - `build_fixture_vectors`: the generator behind the bundled vector table
//!
//! Run one with `cargo run --example extract`. The `keygraph` binary wraps
//! the same library behind `extract`, `evaluate`, `sweep`, and `dump-graph`
//! subcommands.

pub mod centrality;
pub mod config;
pub mod corpus;
pub mod embedding;
pub mod error;
pub mod eval;
pub mod graph;
pub mod pipeline;
pub mod text;
pub mod vector;

pub use config::ExtractionConfig;
pub use error::{Error, Result};
pub use pipeline::{ExtractionOutcome, PipelineContext};
pub use vector::DenseVector;

//! Text preparation: normalization, part-of-speech tagging, and candidate
//! phrase extraction.

mod candidates;
mod preprocess;
pub mod tagger;

pub use candidates::{extract_candidates, filter_outliers, Candidate, CandidateMode};
pub use preprocess::{preprocess, tokenize};
pub use tagger::{tokenize_and_tag, LexiconTagger, PerceptronTagger, TaggedToken, Tagger};

//! Part-of-speech tagging behind a small trait, with two implementations:
//! a trainable averaged perceptron and a dependency-free rule-based
//! fallback.

mod lexicon;
mod perceptron;

pub use lexicon::LexiconTagger;
pub use perceptron::{parse_tagged_corpus, PerceptronTagger};

use super::preprocess::tokenize;

/// Penn Treebank word-level tag inventory. Every tagger output is a member.
pub const TAG_INVENTORY: &[&str] = &[
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN", "NNP", "NNPS",
    "NNS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD",
    "VBG", "VBN", "VBP", "VBZ", "WDT", "WP", "WP$", "WRB",
];

/// A token with its position in the document and its part-of-speech tag.
#[derive(Debug, Clone, PartialEq)]
pub struct TaggedToken {
    pub word: String,
    pub tag: String,
    pub position: usize,
}

/// Assigns one tag per token.
pub trait Tagger: Send + Sync {
    fn tag_sequence(&self, words: &[String]) -> Vec<String>;
}

/// Tokenizes normalized text and tags every token.
pub fn tokenize_and_tag(text: &str, tagger: &dyn Tagger) -> Vec<TaggedToken> {
    let words = tokenize(text);
    let tags = tagger.tag_sequence(&words);
    debug_assert_eq!(words.len(), tags.len());
    debug_assert!(tags.iter().all(|t| TAG_INVENTORY.contains(&t.as_str())));
    words
        .into_iter()
        .zip(tags)
        .enumerate()
        .map(|(position, (word, tag))| TaggedToken {
            word,
            tag,
            position,
        })
        .collect()
}

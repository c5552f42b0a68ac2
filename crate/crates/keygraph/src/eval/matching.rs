//! Matching predicted phrases against gold phrases.

use rust_stemmers::{Algorithm, Stemmer};

use crate::config::MatchMode;

/// True/false positive and false negative counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub true_positives: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
}

impl Counts {
    pub fn new(true_positives: usize, false_positives: usize, false_negatives: usize) -> Self {
        Counts {
            true_positives,
            false_positives,
            false_negatives,
        }
    }

    pub fn add(&mut self, other: &Counts) {
        self.true_positives += other.true_positives;
        self.false_positives += other.false_positives;
        self.false_negatives += other.false_negatives;
    }
}

/// Stems every word of a phrase and rejoins with single spaces.
pub fn stem_phrase(phrase: &str) -> String {
    let stemmer = Stemmer::create(Algorithm::English);
    phrase
        .split_whitespace()
        .map(|w| stemmer.stem(w).into_owned())
        .collect::<Vec<String>>()
        .join(" ")
}

fn normalize(phrase: &str, mode: MatchMode) -> String {
    match mode {
        MatchMode::Exact => phrase.split_whitespace().collect::<Vec<&str>>().join(" "),
        MatchMode::Stemmed => stem_phrase(phrase),
    }
}

/// Compares predictions (in rank order) against gold phrases.
///
/// Equality is word-wise, after stemming in stemmed mode. Each gold phrase
/// matches at most one prediction; predictions claim gold phrases greedily
/// in rank order.
pub fn match_phrases(predicted: &[String], gold: &[String], mode: MatchMode) -> Counts {
    let gold_normed: Vec<String> = gold.iter().map(|g| normalize(g, mode)).collect();
    let mut claimed = vec![false; gold.len()];
    let mut counts = Counts::default();

    for prediction in predicted {
        let normed = normalize(prediction, mode);
        let hit = gold_normed
            .iter()
            .enumerate()
            .find(|(i, g)| !claimed[*i] && **g == normed);
        match hit {
            Some((i, _)) => {
                claimed[i] = true;
                counts.true_positives += 1;
            }
            None => counts.false_positives += 1,
        }
    }
    counts.false_negatives = claimed.iter().filter(|c| !**c).count();
    counts
}

/// True when the gold phrase occurs as a contiguous token sequence in the
/// document tokens, compared word-wise under the match mode.
pub fn gold_in_document(tokens: &[String], gold: &str, mode: MatchMode) -> bool {
    let gold_words: Vec<String> = gold
        .split_whitespace()
        .map(|w| normalize(w, mode))
        .collect();
    if gold_words.is_empty() || gold_words.len() > tokens.len() {
        return false;
    }
    let token_normed: Vec<String> = tokens.iter().map(|t| normalize(t, mode)).collect();
    token_normed
        .windows(gold_words.len())
        .any(|window| window == gold_words.as_slice())
}

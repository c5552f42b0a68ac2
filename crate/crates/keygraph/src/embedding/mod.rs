//! Word embeddings: per-document training (skip-gram or GloVe) and lookup
//! of pretrained global vectors, plus word-sum composition for phrases and
//! documents.

pub mod glove;
mod global;
mod local;
pub mod skipgram;

pub use global::{GlobalSource, OovReport, PhraseEncoder};
pub use local::{document_local_vector, phrase_local_vector, train_local, LocalModel, TrainingMeta};

use std::collections::HashMap;

use crate::vector::DenseVector;

/// Vocabulary in first-occurrence order plus the token stream as ids.
pub(crate) struct Vocab {
    pub words: Vec<String>,
    pub counts: Vec<usize>,
    pub token_ids: Vec<usize>,
}

pub(crate) fn build_vocab(tokens: &[String]) -> Vocab {
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut words = Vec::new();
    let mut counts = Vec::new();
    let mut token_ids = Vec::with_capacity(tokens.len());
    for token in tokens {
        let id = match index.get(token.as_str()) {
            Some(&id) => id,
            None => {
                let id = words.len();
                index.insert(token, id);
                words.push(token.clone());
                counts.push(0);
                id
            }
        };
        counts[id] += 1;
        token_ids.push(id);
    }
    Vocab {
        words,
        counts,
        token_ids,
    }
}

/// Raw output of an embedding trainer.
pub(crate) struct TrainedVectors {
    pub words: Vec<String>,
    pub vectors: Vec<Vec<f64>>,
    pub epoch_losses: Vec<f64>,
}

/// Sums the vectors of `words` found by `lookup`; returns the sum and how
/// many words were found.
pub(crate) fn sum_words<'a, F>(lookup: F, words: &[String], dimension: usize) -> (DenseVector, usize)
where
    F: Fn(&str) -> Option<&'a DenseVector>,
{
    let mut sum = DenseVector::zeros(dimension);
    let mut found = 0;
    for word in words {
        if let Some(v) = lookup(word) {
            sum.add_assign(v).expect("lookup vectors share the table dimension");
            found += 1;
        }
    }
    (sum, found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[&str]) -> Vec<String> {
        list.iter().map(|w| (*w).to_owned()).collect()
    }

    #[test]
    fn vocab_uses_first_occurrence_order() {
        let vocab = build_vocab(&words(&["b", "a", "b", "c", "a", "b"]));
        assert_eq!(vocab.words, vec!["b", "a", "c"]);
        assert_eq!(vocab.counts, vec![3, 2, 1]);
        assert_eq!(vocab.token_ids, vec![0, 1, 0, 2, 1, 0]);
    }

    #[test]
    fn sum_words_skips_missing_entries() {
        let mut table = std::collections::HashMap::new();
        table.insert("a".to_owned(), DenseVector::new(vec![1.0, 2.0]));
        table.insert("b".to_owned(), DenseVector::new(vec![3.0, 4.0]));
        let (sum, found) = sum_words(|w| table.get(w), &words(&["a", "b", "zz", "a"]), 2);
        assert_eq!(found, 3);
        assert_eq!(sum.as_slice(), &[5.0, 8.0]);
    }
}

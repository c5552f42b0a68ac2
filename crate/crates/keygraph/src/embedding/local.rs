//! Per-document ("local") embedding model: train on one document's token
//! stream and compose phrase and document vectors by word summation.

use crate::config::{LocalAlgorithm, TrainingParams};
use crate::corpus::VectorTable;
use crate::error::{Error, Result};
use crate::text::Candidate;
use crate::vector::DenseVector;

use super::{glove, skipgram, sum_words, TrainedVectors};

/// How a local model was trained.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingMeta {
    pub algorithm: LocalAlgorithm,
    pub dimension: usize,
    pub window: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    pub seed: u64,
}

/// Word vectors trained on a single document.
#[derive(Debug, Clone)]
pub struct LocalModel {
    pub meta: TrainingMeta,
    table: VectorTable,
    /// Training loss per epoch; see the trainer docs for each algorithm's
    /// exact definition.
    pub epoch_losses: Vec<f64>,
}

impl LocalModel {
    pub fn dimension(&self) -> usize {
        self.meta.dimension
    }

    pub fn vocab_size(&self) -> usize {
        self.table.len()
    }

    pub fn get(&self, word: &str) -> Option<&DenseVector> {
        self.table.get(word)
    }

    pub fn table(&self) -> &VectorTable {
        &self.table
    }
}

/// Trains a local model on the document's full token stream (stopwords
/// included). An empty stream is an error; a very short one only warns.
pub fn train_local(
    tokens: &[String],
    algorithm: LocalAlgorithm,
    params: &TrainingParams,
    seed: u64,
) -> Result<LocalModel> {
    if tokens.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    if tokens.len() <= params.window {
        log::warn!(
            "document has only {} tokens, below the context window {}",
            tokens.len(),
            params.window
        );
    }

    let TrainedVectors {
        words,
        vectors,
        epoch_losses,
    } = match algorithm {
        LocalAlgorithm::SkipGram => skipgram::train(tokens, params, seed),
        LocalAlgorithm::Glove => glove::train(tokens, params, seed),
    };

    let mut table = VectorTable::new(params.dimension);
    for (word, vector) in words.into_iter().zip(vectors) {
        table.insert(&word, DenseVector::new(vector))?;
    }

    Ok(LocalModel {
        meta: TrainingMeta {
            algorithm,
            dimension: params.dimension,
            window: params.window,
            epochs: params.epochs,
            learning_rate: params.learning_rate,
            seed,
        },
        table,
        epoch_losses,
    })
}

/// Candidate phrase vector: sum of its word vectors in the local model.
pub fn phrase_local_vector(model: &LocalModel, candidate: &Candidate) -> DenseVector {
    let (sum, _) = sum_words(|w| model.get(w), &candidate.words, model.dimension());
    sum
}

/// Document vector: sum of the vectors of the first `doc_words` tokens,
/// repeats included. The opening of a document (title, lead sentences)
/// stands in for the whole.
pub fn document_local_vector(
    model: &LocalModel,
    tokens: &[String],
    doc_words: usize,
) -> DenseVector {
    let head = &tokens[..doc_words.min(tokens.len())];
    let (sum, _) = sum_words(|w| model.get(w), head, model.dimension());
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tokens(text: &str) -> Vec<String> {
        text.split_whitespace().map(str::to_owned).collect()
    }

    fn params() -> TrainingParams {
        TrainingParams {
            dimension: 8,
            window: 2,
            epochs: 10,
            learning_rate: 0.025,
            negative_samples: 3,
        }
    }

    #[test]
    fn empty_stream_is_an_error() {
        let err = train_local(&[], LocalAlgorithm::SkipGram, &params(), 1).unwrap_err();
        assert!(matches!(err, Error::EmptyVocabulary));
    }

    #[test]
    fn every_token_gets_a_vector() {
        let toks = tokens("alpha beta gamma alpha beta alpha");
        for algorithm in LocalAlgorithm::ALL {
            let model = train_local(&toks, algorithm, &params(), 2).unwrap();
            assert_eq!(model.vocab_size(), 3);
            assert_eq!(model.dimension(), 8);
            for word in ["alpha", "beta", "gamma"] {
                assert!(model.get(word).is_some(), "{algorithm}: missing {word}");
            }
            assert_eq!(model.epoch_losses.len(), 10);
        }
    }

    #[test]
    fn phrase_vector_is_word_sum() {
        let toks = tokens("red apple red fruit");
        let model = train_local(&toks, LocalAlgorithm::SkipGram, &params(), 3).unwrap();
        let candidate = Candidate {
            words: vec!["red".to_owned(), "apple".to_owned()],
            count: 1,
            first_position: 0,
            positions: vec![0],
        };
        let v = phrase_local_vector(&model, &candidate);
        let mut expected = model.get("red").unwrap().clone();
        expected.add_assign(model.get("apple").unwrap()).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn document_vector_sums_the_leading_tokens() {
        let toks = tokens("a b a c b c");
        let model = train_local(&toks, LocalAlgorithm::Glove, &params(), 4).unwrap();
        let v = document_local_vector(&model, &toks, 3);
        // First three tokens are a, b, a: "a" contributes twice.
        let mut expected = model.get("a").unwrap().clone();
        expected.add_assign(model.get("b").unwrap()).unwrap();
        expected.add_assign(model.get("a").unwrap()).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn document_vector_truncates_to_the_whole_stream() {
        let toks = tokens("x y");
        let model = train_local(&toks, LocalAlgorithm::SkipGram, &params(), 5).unwrap();
        let all = document_local_vector(&model, &toks, 100);
        let mut expected = model.get("x").unwrap().clone();
        expected.add_assign(model.get("y").unwrap()).unwrap();
        assert_eq!(all, expected);
        let first = document_local_vector(&model, &toks, 1);
        assert_eq!(&first, model.get("x").unwrap());
    }
}

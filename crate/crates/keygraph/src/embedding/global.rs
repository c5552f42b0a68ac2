//! "Global" vectors: pretrained embeddings shared across documents.
//!
//! The default source is a word-vector table with word-sum composition for
//! phrases. Sentence- or document-level encoders can be plugged in through
//! [`PhraseEncoder`].

use crate::corpus::VectorTable;
use crate::text::Candidate;
use crate::vector::DenseVector;

use super::sum_words;

/// An external model that maps a word sequence straight to a vector.
pub trait PhraseEncoder: Send + Sync {
    fn dimension(&self) -> usize;
    fn encode(&self, words: &[String]) -> DenseVector;
}

/// Source of global vectors for phrases and documents.
pub enum GlobalSource {
    /// Pretrained word vectors; phrases are word sums.
    WordTable(VectorTable),
    /// Delegated encoder (for example a sentence-embedding model).
    Encoder(Box<dyn PhraseEncoder>),
}

/// Out-of-vocabulary summary over a candidate set.
#[derive(Debug, Clone, Default)]
pub struct OovReport {
    pub total_words: usize,
    pub oov_words: usize,
    /// Phrases in which no word was found in the vocabulary.
    pub fully_oov: Vec<String>,
}

impl OovReport {
    /// Fraction of candidate words that were out of vocabulary.
    pub fn fraction(&self) -> f64 {
        if self.total_words == 0 {
            0.0
        } else {
            self.oov_words as f64 / self.total_words as f64
        }
    }
}

impl GlobalSource {
    pub fn dimension(&self) -> usize {
        match self {
            GlobalSource::WordTable(table) => table.dimension(),
            GlobalSource::Encoder(encoder) => encoder.dimension(),
        }
    }

    /// Phrase vector plus a coverage flag. For a word table the flag is
    /// false iff no phrase word is in vocabulary (the vector is then zero);
    /// delegated encoders always report coverage.
    pub fn phrase_vector(&self, candidate: &Candidate) -> (DenseVector, bool) {
        match self {
            GlobalSource::WordTable(table) => {
                let (sum, found) =
                    sum_words(|w| table.get(w), &candidate.words, table.dimension());
                (sum, found > 0)
            }
            GlobalSource::Encoder(encoder) => (encoder.encode(&candidate.words), true),
        }
    }

    /// Document vector from the first `doc_words` tokens (repeats included):
    /// their word sum for a table, or a delegated encoding of the prefix.
    pub fn document_vector(&self, tokens: &[String], doc_words: usize) -> DenseVector {
        let head = &tokens[..doc_words.min(tokens.len())];
        match self {
            GlobalSource::WordTable(table) => {
                let (sum, _) = sum_words(|w| table.get(w), head, table.dimension());
                sum
            }
            GlobalSource::Encoder(encoder) => encoder.encode(head),
        }
    }

    /// Coverage statistics over a candidate set. Word tables report true
    /// out-of-vocabulary counts; delegated encoders report full coverage.
    pub fn oov_report(&self, candidates: &[Candidate]) -> OovReport {
        let mut report = OovReport::default();
        for candidate in candidates {
            match self {
                GlobalSource::WordTable(table) => {
                    let oov_here = candidate
                        .words
                        .iter()
                        .filter(|w| !table.contains(w))
                        .count();
                    report.total_words += candidate.words.len();
                    report.oov_words += oov_here;
                    if oov_here == candidate.words.len() {
                        report.fully_oov.push(candidate.phrase());
                    }
                }
                GlobalSource::Encoder(_) => {
                    report.total_words += candidate.words.len();
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> VectorTable {
        let mut t = VectorTable::new(2);
        t.insert("neural", DenseVector::new(vec![1.0, 0.0])).unwrap();
        t.insert("network", DenseVector::new(vec![0.0, 2.0])).unwrap();
        t.insert("the", DenseVector::new(vec![0.5, 0.5])).unwrap();
        t
    }

    fn candidate(words: &[&str]) -> Candidate {
        Candidate {
            words: words.iter().map(|w| (*w).to_owned()).collect(),
            count: 1,
            first_position: 0,
            positions: vec![0],
        }
    }

    #[test]
    fn phrase_vector_sums_known_words() {
        let source = GlobalSource::WordTable(table());
        let (v, covered) = source.phrase_vector(&candidate(&["neural", "network"]));
        assert!(covered);
        assert_eq!(v.as_slice(), &[1.0, 2.0]);
    }

    #[test]
    fn unknown_words_are_skipped_and_flagged() {
        let source = GlobalSource::WordTable(table());
        let (v, covered) = source.phrase_vector(&candidate(&["neural", "quux"]));
        assert!(covered);
        assert_eq!(v.as_slice(), &[1.0, 0.0]);

        let (v, covered) = source.phrase_vector(&candidate(&["quux", "zzyx"]));
        assert!(!covered);
        assert!(v.is_zero());
    }

    #[test]
    fn oov_report_counts_words_and_fully_oov_phrases() {
        let source = GlobalSource::WordTable(table());
        let cands = vec![
            candidate(&["neural", "network"]),
            candidate(&["neural", "quux"]),
            candidate(&["quux", "zzyx"]),
        ];
        let report = source.oov_report(&cands);
        assert_eq!(report.total_words, 6);
        assert_eq!(report.oov_words, 3);
        assert_eq!(report.fully_oov, vec!["quux zzyx".to_owned()]);
        assert!((report.fraction() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn document_vector_sums_the_leading_tokens() {
        let source = GlobalSource::WordTable(table());
        let tokens: Vec<String> = ["the", "quux", "neural", "network"]
            .iter()
            .map(|w| (*w).to_owned())
            .collect();
        // First three tokens; "quux" is out of vocabulary and skipped.
        let v = source.document_vector(&tokens, 3);
        assert_eq!(v.as_slice(), &[1.5, 0.5]);
        let whole = source.document_vector(&tokens, 100);
        assert_eq!(whole.as_slice(), &[1.5, 2.5]);
    }

    struct DoubleEncoder;
    impl PhraseEncoder for DoubleEncoder {
        fn dimension(&self) -> usize {
            1
        }
        fn encode(&self, words: &[String]) -> DenseVector {
            DenseVector::new(vec![2.0 * words.len() as f64])
        }
    }

    #[test]
    fn delegated_encoder_is_used_verbatim() {
        let source = GlobalSource::Encoder(Box::new(DoubleEncoder));
        assert_eq!(source.dimension(), 1);
        let (v, covered) = source.phrase_vector(&candidate(&["a", "b", "c"]));
        assert!(covered);
        assert_eq!(v.as_slice(), &[6.0]);
        let report = source.oov_report(&[candidate(&["a", "b"])]);
        assert_eq!(report.oov_words, 0);
        assert_eq!(report.total_words, 2);
    }
}

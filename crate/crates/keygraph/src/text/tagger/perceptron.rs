//! Averaged-perceptron tagger with train, save, and load support.
//!
//! Feature templates follow the standard greedy left-to-right design:
//! current/neighboring words, their suffixes, and the two previous
//! predicted tags.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Tagger, TAG_INVENTORY};

const START: [&str; 2] = ["-START-", "-START2-"];
const END: [&str; 2] = ["-END-", "-END2-"];

/// Words this frequent in training with a near-unambiguous tag bypass the
/// perceptron at inference time.
const TAGDICT_MIN_FREQ: usize = 5;
const TAGDICT_MIN_RATIO: f64 = 0.97;

#[derive(Debug, Serialize, Deserialize)]
struct Model {
    classes: Vec<String>,
    /// feature -> tag -> averaged weight.
    weights: BTreeMap<String, BTreeMap<String, f64>>,
    /// Unambiguous frequent words mapped straight to their tag.
    tagdict: BTreeMap<String, String>,
}

/// Trainable averaged-perceptron tagger.
#[derive(Debug)]
pub struct PerceptronTagger {
    model: Model,
}

fn suffix(word: &str, n: usize) -> &str {
    let count = word.chars().count();
    if count <= n {
        return word;
    }
    let (idx, _) = word.char_indices().nth(count - n).expect("count > n");
    &word[idx..]
}

fn prefix(word: &str, n: usize) -> &str {
    match word.char_indices().nth(n) {
        Some((idx, _)) => &word[..idx],
        None => word,
    }
}

fn padded_context(words: &[String]) -> Vec<String> {
    let mut context = Vec::with_capacity(words.len() + 4);
    context.extend(START.iter().map(|s| (*s).to_owned()));
    context.extend(words.iter().cloned());
    context.extend(END.iter().map(|s| (*s).to_owned()));
    context
}

/// Feature strings for the word at position `i` (unpadded index).
fn features(i: usize, context: &[String], prev: &str, prev2: &str) -> Vec<String> {
    let idx = i + START.len();
    let word = &context[idx];
    vec![
        "bias".to_owned(),
        format!("i suffix {}", suffix(word, 3)),
        format!("i pref1 {}", prefix(word, 1)),
        format!("i-1 tag {prev}"),
        format!("i-2 tag {prev2}"),
        format!("i tag+i-2 tag {prev} {prev2}"),
        format!("i word {word}"),
        format!("i-1 tag+i word {prev} {word}"),
        format!("i-1 word {}", context[idx - 1]),
        format!("i-1 suffix {}", suffix(&context[idx - 1], 3)),
        format!("i-2 word {}", context[idx - 2]),
        format!("i+1 word {}", context[idx + 1]),
        format!("i+1 suffix {}", suffix(&context[idx + 1], 3)),
        format!("i+2 word {}", context[idx + 2]),
    ]
}

/// Accumulators for weight averaging during training.
struct Trainer {
    weights: HashMap<String, HashMap<String, f64>>,
    totals: HashMap<(String, String), f64>,
    stamps: HashMap<(String, String), usize>,
    instances: usize,
    classes: Vec<String>,
}

impl Trainer {
    fn new(classes: Vec<String>) -> Self {
        Trainer {
            weights: HashMap::new(),
            totals: HashMap::new(),
            stamps: HashMap::new(),
            instances: 0,
            classes,
        }
    }

    fn predict(&self, feats: &[String]) -> String {
        let mut scores: HashMap<&str, f64> = HashMap::new();
        for feat in feats {
            if let Some(tag_weights) = self.weights.get(feat) {
                for (tag, weight) in tag_weights {
                    *scores.entry(tag).or_insert(0.0) += weight;
                }
            }
        }
        self.classes
            .iter()
            .map(|c| (scores.get(c.as_str()).copied().unwrap_or(0.0), c))
            .max_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(b.1)))
            .map(|(_, c)| c.clone())
            .expect("classes are non-empty")
    }

    fn bump(&mut self, feat: &str, tag: &str, delta: f64) {
        let key = (feat.to_owned(), tag.to_owned());
        let weight = self
            .weights
            .entry(feat.to_owned())
            .or_default()
            .entry(tag.to_owned())
            .or_insert(0.0);
        let stamp = self.stamps.get(&key).copied().unwrap_or(0);
        *self.totals.entry(key.clone()).or_insert(0.0) +=
            (self.instances - stamp) as f64 * *weight;
        self.stamps.insert(key, self.instances);
        *weight += delta;
    }

    fn update(&mut self, truth: &str, guess: &str, feats: &[String]) {
        self.instances += 1;
        if truth == guess {
            return;
        }
        for feat in feats {
            self.bump(feat, truth, 1.0);
            self.bump(feat, guess, -1.0);
        }
    }

    fn into_averaged_weights(mut self) -> BTreeMap<String, BTreeMap<String, f64>> {
        let mut averaged: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
        if self.instances == 0 {
            return averaged;
        }
        for (feat, tag_weights) in self.weights.drain() {
            for (tag, weight) in tag_weights {
                let key = (feat.clone(), tag.clone());
                let stamp = self.stamps.get(&key).copied().unwrap_or(0);
                let total = self.totals.get(&key).copied().unwrap_or(0.0)
                    + (self.instances - stamp) as f64 * weight;
                let avg = total / self.instances as f64;
                if avg != 0.0 {
                    averaged.entry(feat.clone()).or_default().insert(tag, avg);
                }
            }
        }
        averaged
    }
}

impl PerceptronTagger {
    /// Trains on tagged sentences of (word, tag) pairs. The sentence order
    /// is shuffled per epoch with a seeded generator, so identical inputs
    /// give identical models.
    pub fn train(sentences: &[Vec<(String, String)>], epochs: usize, seed: u64) -> Self {
        let mut tag_counts: HashMap<&str, HashMap<&str, usize>> = HashMap::new();
        let mut class_set: BTreeSet<&str> = BTreeSet::new();
        for sentence in sentences {
            for (word, tag) in sentence {
                class_set.insert(tag);
                *tag_counts
                    .entry(word)
                    .or_default()
                    .entry(tag)
                    .or_insert(0) += 1;
            }
        }

        let mut tagdict = BTreeMap::new();
        for (word, counts) in &tag_counts {
            let total: usize = counts.values().sum();
            let (best_tag, best_count) = counts
                .iter()
                .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
                .expect("counts are non-empty");
            if total >= TAGDICT_MIN_FREQ
                && (*best_count as f64) / (total as f64) >= TAGDICT_MIN_RATIO
            {
                tagdict.insert((*word).to_owned(), (*best_tag).to_owned());
            }
        }

        let classes: Vec<String> = class_set.iter().map(|c| (*c).to_owned()).collect();
        let mut trainer = Trainer::new(classes.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..sentences.len()).collect();

        for _ in 0..epochs {
            order.shuffle(&mut rng);
            for &sidx in &order {
                let sentence = &sentences[sidx];
                let words: Vec<String> = sentence.iter().map(|(w, _)| w.clone()).collect();
                let context = padded_context(&words);
                let mut prev = START[0].to_owned();
                let mut prev2 = START[1].to_owned();
                for (i, (word, truth)) in sentence.iter().enumerate() {
                    let guess = match tagdict.get(word) {
                        Some(tag) => tag.clone(),
                        None => {
                            let feats = features(i, &context, &prev, &prev2);
                            let guess = trainer.predict(&feats);
                            trainer.update(truth, &guess, &feats);
                            guess
                        }
                    };
                    prev2 = prev;
                    prev = guess;
                }
            }
        }

        PerceptronTagger {
            model: Model {
                classes,
                weights: trainer.into_averaged_weights(),
                tagdict,
            },
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string(&self.model).expect("model serializes");
        fs::write(path, json).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let json = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let model: Model = serde_json::from_str(&json).map_err(|e| Error::TaggerModel {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
        if model.classes.is_empty() {
            return Err(Error::TaggerModel {
                path: path.to_owned(),
                message: "model has no tag classes".to_owned(),
            });
        }
        for class in &model.classes {
            if !TAG_INVENTORY.contains(&class.as_str()) {
                return Err(Error::TaggerModel {
                    path: path.to_owned(),
                    message: format!("class '{class}' is not in the tag inventory"),
                });
            }
        }
        Ok(PerceptronTagger { model })
    }

    fn predict(&self, feats: &[String]) -> String {
        let mut scores: HashMap<&str, f64> = HashMap::new();
        for feat in feats {
            if let Some(tag_weights) = self.model.weights.get(feat) {
                for (tag, weight) in tag_weights {
                    *scores.entry(tag).or_insert(0.0) += weight;
                }
            }
        }
        self.model
            .classes
            .iter()
            .map(|c| (scores.get(c.as_str()).copied().unwrap_or(0.0), c))
            .max_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(b.1)))
            .map(|(_, c)| c.clone())
            .expect("classes are non-empty")
    }
}

impl Tagger for PerceptronTagger {
    fn tag_sequence(&self, words: &[String]) -> Vec<String> {
        let context = padded_context(words);
        let mut prev = START[0].to_owned();
        let mut prev2 = START[1].to_owned();
        let mut tags = Vec::with_capacity(words.len());
        for (i, word) in words.iter().enumerate() {
            let tag = match self.model.tagdict.get(word) {
                Some(tag) => tag.clone(),
                None => {
                    let feats = features(i, &context, &prev, &prev2);
                    self.predict(&feats)
                }
            };
            prev2 = prev;
            prev = tag.clone();
            tags.push(tag);
        }
        tags
    }
}

/// Parses a tagged corpus: one sentence per line, tokens as `word_TAG`.
/// Words are lowercased; blank lines are skipped.
pub fn parse_tagged_corpus(text: &str) -> Result<Vec<Vec<(String, String)>>> {
    let mut sentences = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut sentence = Vec::new();
        for token in line.split_whitespace() {
            let (word, tag) = token.rsplit_once('_').ok_or_else(|| {
                Error::InvalidInput(format!(
                    "line {}: token '{token}' is not in word_TAG form",
                    idx + 1
                ))
            })?;
            if word.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "line {}: token '{token}' has an empty word",
                    idx + 1
                )));
            }
            sentence.push((word.to_lowercase(), tag.to_uppercase()));
        }
        sentences.push(sentence);
    }
    Ok(sentences)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus() -> Vec<Vec<(String, String)>> {
        let text = "\
the_DT quick_JJ fox_NN jumps_VBZ
the_DT lazy_JJ dog_NN sleeps_VBZ
a_DT clever_JJ cat_NN runs_VBZ
the_DT quick_JJ cat_NN jumps_VBZ
a_DT lazy_JJ fox_NN sleeps_VBZ
the_DT clever_JJ dog_NN runs_VBZ
a_DT quick_JJ dog_NN barks_VBZ
the_DT lazy_JJ cat_NN barks_VBZ
";
        parse_tagged_corpus(text).unwrap()
    }

    #[test]
    fn parse_rejects_malformed_tokens() {
        assert!(parse_tagged_corpus("the_DT fox").is_err());
        assert!(parse_tagged_corpus("_DT").is_err());
        let parsed = parse_tagged_corpus("The_dt Fox_nn\n\n# comment\n").unwrap();
        assert_eq!(parsed, vec![vec![
            ("the".to_owned(), "DT".to_owned()),
            ("fox".to_owned(), "NN".to_owned()),
        ]]);
    }

    #[test]
    fn learns_seen_patterns() {
        let tagger = PerceptronTagger::train(&corpus(), 8, 1);
        let words: Vec<String> = ["the", "clever", "fox", "runs"]
            .iter()
            .map(|w| (*w).to_owned())
            .collect();
        assert_eq!(tagger.tag_sequence(&words), vec!["DT", "JJ", "NN", "VBZ"]);
    }

    #[test]
    fn training_is_deterministic() {
        let a = PerceptronTagger::train(&corpus(), 8, 7);
        let b = PerceptronTagger::train(&corpus(), 8, 7);
        assert_eq!(
            serde_json::to_string(&a.model).unwrap(),
            serde_json::to_string(&b.model).unwrap()
        );
    }

    #[test]
    fn save_load_round_trips() {
        let tagger = PerceptronTagger::train(&corpus(), 8, 1);
        let file = tempfile::NamedTempFile::new().unwrap();
        tagger.save(file.path()).unwrap();
        let loaded = PerceptronTagger::load(file.path()).unwrap();

        let words: Vec<String> = ["a", "quick", "fox", "sleeps"]
            .iter()
            .map(|w| (*w).to_owned())
            .collect();
        assert_eq!(tagger.tag_sequence(&words), loaded.tag_sequence(&words));
    }

    #[test]
    fn load_rejects_garbage_and_bad_classes() {
        let file = tempfile::NamedTempFile::new().unwrap();
        fs::write(file.path(), "not json").unwrap();
        assert!(PerceptronTagger::load(file.path()).is_err());

        fs::write(
            file.path(),
            r#"{"classes":["ZZ"],"weights":{},"tagdict":{}}"#,
        )
        .unwrap();
        let err = PerceptronTagger::load(file.path()).unwrap_err();
        assert!(err.to_string().contains("ZZ"), "{err}");
    }
}

//! Candidate phrase extraction over tagged tokens.
//!
//! A candidate is a token span matching `(NN.*|JJ.*|VBN|VBG)* (NN.*|VBG)`:
//! any run of noun-, adjective-, or participle-tagged words ending in a
//! noun-like word. By default only maximal matches are kept; sub-span
//! extraction is available behind [`CandidateMode::AllSubspans`].

use std::collections::HashMap;

use super::tagger::TaggedToken;

/// Tags allowed anywhere in a candidate.
fn inner_tag(tag: &str) -> bool {
    tag.starts_with("NN") || tag.starts_with("JJ") || tag == "VBN" || tag == "VBG"
}

/// Tags allowed in final position.
fn final_tag(tag: &str) -> bool {
    tag.starts_with("NN") || tag == "VBG"
}

/// Span selection strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateMode {
    /// Only spans not contained in any longer matching span.
    MaximalSpans,
    /// Every matching span, including sub-spans of longer matches.
    AllSubspans,
}

/// A distinct candidate phrase with all of its occurrences.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub words: Vec<String>,
    /// Number of occurrences in the document.
    pub count: usize,
    /// Token position of the earliest occurrence.
    pub first_position: usize,
    /// Token positions where occurrences start, ascending.
    pub positions: Vec<usize>,
}

impl Candidate {
    /// The phrase as a single space-joined string.
    pub fn phrase(&self) -> String {
        self.words.join(" ")
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Matching spans as (start, end) half-open token ranges.
fn matching_spans(tokens: &[TaggedToken], mode: CandidateMode) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut run_start = None;
    for idx in 0..=tokens.len() {
        let in_run = idx < tokens.len() && inner_tag(&tokens[idx].tag);
        match (run_start, in_run) {
            (None, true) => run_start = Some(idx),
            (Some(start), false) => {
                // Maximal match: from the run start to its last final-position tag.
                let last_final = (start..idx).rev().find(|&i| final_tag(&tokens[i].tag));
                if let Some(last) = last_final {
                    match mode {
                        CandidateMode::MaximalSpans => spans.push((start, last + 1)),
                        CandidateMode::AllSubspans => {
                            for s in start..idx {
                                for e in s..idx {
                                    if final_tag(&tokens[e].tag) {
                                        spans.push((s, e + 1));
                                    }
                                }
                            }
                        }
                    }
                }
                run_start = None;
            }
            _ => {}
        }
    }
    spans
}

/// Extracts candidate phrases from a tagged token sequence.
///
/// Occurrences with the same word sequence collapse into one candidate with
/// a count. Results are sorted by first occurrence, ties by phrase.
pub fn extract_candidates(tokens: &[TaggedToken], mode: CandidateMode) -> Vec<Candidate> {
    let spans = matching_spans(tokens, mode);
    let mut by_words: HashMap<Vec<String>, Candidate> = HashMap::new();
    for (start, end) in spans {
        let words: Vec<String> = tokens[start..end].iter().map(|t| t.word.clone()).collect();
        let position = tokens[start].position;
        by_words
            .entry(words.clone())
            .and_modify(|c| {
                c.count += 1;
                c.first_position = c.first_position.min(position);
                c.positions.push(position);
            })
            .or_insert(Candidate {
                words,
                count: 1,
                first_position: position,
                positions: vec![position],
            });
    }
    let mut candidates: Vec<Candidate> = by_words.into_values().collect();
    for c in &mut candidates {
        c.positions.sort_unstable();
    }
    candidates.sort_by(|a, b| {
        a.first_position
            .cmp(&b.first_position)
            .then_with(|| a.words.cmp(&b.words))
    });
    candidates
}

/// Drops infrequent long candidates: a candidate of n words survives only if
/// its count C satisfies C >= alpha / ((n - 1)^2 + 1).
pub fn filter_outliers(candidates: Vec<Candidate>, alpha: f64) -> Vec<Candidate> {
    candidates
        .into_iter()
        .filter(|c| {
            let n = c.len() as f64;
            (c.count as f64) >= alpha / ((n - 1.0).powi(2) + 1.0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tagged(pairs: &[(&str, &str)]) -> Vec<TaggedToken> {
        pairs
            .iter()
            .enumerate()
            .map(|(i, (word, tag))| TaggedToken {
                word: (*word).to_owned(),
                tag: (*tag).to_owned(),
                position: i,
            })
            .collect()
    }

    fn phrases(cands: &[Candidate]) -> Vec<String> {
        cands.iter().map(Candidate::phrase).collect()
    }

    #[test]
    fn maximal_span_ends_at_last_noun_like_tag() {
        // "deep JJ" "learning NN" "based VBN" -> trailing VBN is trimmed.
        let tokens = tagged(&[("deep", "JJ"), ("learning", "NN"), ("based", "VBN")]);
        let cands = extract_candidates(&tokens, CandidateMode::MaximalSpans);
        assert_eq!(phrases(&cands), vec!["deep learning"]);
    }

    #[test]
    fn run_with_no_final_tag_yields_nothing() {
        let tokens = tagged(&[("quick", "JJ"), ("based", "VBN")]);
        assert!(extract_candidates(&tokens, CandidateMode::MaximalSpans).is_empty());
    }

    #[test]
    fn runs_are_split_by_other_tags() {
        let tokens = tagged(&[
            ("neural", "JJ"),
            ("networks", "NNS"),
            ("are", "VBP"),
            ("universal", "JJ"),
            ("approximators", "NNS"),
        ]);
        let cands = extract_candidates(&tokens, CandidateMode::MaximalSpans);
        assert_eq!(
            phrases(&cands),
            vec!["neural networks", "universal approximators"]
        );
        assert_eq!(cands[0].first_position, 0);
        assert_eq!(cands[1].first_position, 3);
    }

    #[test]
    fn gerund_can_end_a_candidate() {
        let tokens = tagged(&[("machine", "NN"), ("learning", "VBG")]);
        let cands = extract_candidates(&tokens, CandidateMode::MaximalSpans);
        assert_eq!(phrases(&cands), vec!["machine learning"]);
    }

    #[test]
    fn repeated_phrases_collapse_with_counts_and_positions() {
        let tokens = tagged(&[
            ("graph", "NN"),
            ("of", "IN"),
            ("graph", "NN"),
            ("of", "IN"),
            ("graph", "NN"),
        ]);
        let cands = extract_candidates(&tokens, CandidateMode::MaximalSpans);
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].count, 3);
        assert_eq!(cands[0].first_position, 0);
        assert_eq!(cands[0].positions, vec![0, 2, 4]);
    }

    #[test]
    fn all_subspans_mode_emits_every_match() {
        let tokens = tagged(&[("deep", "JJ"), ("neural", "JJ"), ("network", "NN")]);
        let maximal = extract_candidates(&tokens, CandidateMode::MaximalSpans);
        assert_eq!(phrases(&maximal), vec!["deep neural network"]);

        let all = extract_candidates(&tokens, CandidateMode::AllSubspans);
        assert_eq!(
            phrases(&all),
            vec!["deep neural network", "neural network", "network"]
        );
    }

    #[test]
    fn filter_thresholds_at_alpha_seven() {
        let make = |words: &[&str], count: usize| Candidate {
            words: words.iter().map(|w| (*w).to_owned()).collect(),
            count,
            first_position: 0,
            positions: vec![0],
        };
        // Single word: needs count >= 7.
        let kept = filter_outliers(vec![make(&["a"], 7), make(&["b"], 6)], 7.0);
        assert_eq!(phrases(&kept), vec!["a"]);
        // Two words: threshold 3.5, so count 4 survives and 3 does not.
        let kept = filter_outliers(vec![make(&["a", "b"], 4), make(&["c", "d"], 3)], 7.0);
        assert_eq!(phrases(&kept), vec!["a b"]);
        // Four words: threshold 0.7, a single occurrence survives.
        let kept = filter_outliers(vec![make(&["a", "b", "c", "d"], 1)], 7.0);
        assert_eq!(kept.len(), 1);
    }
}

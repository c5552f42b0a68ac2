//! Reference baselines sharing the candidate pipeline: tf-idf scoring and
//! a co-occurrence-window graph ranked by the same centrality measures.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::centrality::{compute_centrality, rank_and_select};
use crate::config::{CentralityKind, TfidfMode};
use crate::corpus::DatasetEntry;
use crate::error::Result;
use crate::graph::KeyGraph;
use crate::pipeline::PipelineContext;
use crate::text::Candidate;

use super::run::{finish_report, score_predictions, EvalOptions, EvalReport};

/// Document frequencies over a corpus.
#[derive(Debug, Clone, Default)]
pub struct DfTable {
    n_docs: usize,
    df: HashMap<String, usize>,
}

impl DfTable {
    /// Counts, for every word, the number of token streams containing it.
    pub fn from_token_streams<'a, I>(docs: I) -> DfTable
    where
        I: IntoIterator<Item = &'a [String]>,
    {
        let mut table = DfTable::default();
        for tokens in docs {
            table.n_docs += 1;
            let mut seen: Vec<&String> = tokens.iter().collect();
            seen.sort_unstable();
            seen.dedup();
            for word in seen {
                *table.df.entry(word.clone()).or_insert(0) += 1;
            }
        }
        table
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    /// Document frequency of a word; unseen words count as 1 so their
    /// inverse document frequency stays finite.
    pub fn df(&self, word: &str) -> usize {
        self.df.get(word).copied().unwrap_or(1).max(1)
    }
}

/// Scores each candidate by tf-idf: for every word, the in-document term
/// frequency times ln(N / df); phrase scores aggregate by sum or mean.
pub fn tfidf_scores(
    tokens: &[String],
    candidates: &[Candidate],
    df: &DfTable,
    mode: TfidfMode,
) -> Vec<f64> {
    let mut tf: HashMap<&str, usize> = HashMap::new();
    for token in tokens {
        *tf.entry(token).or_insert(0) += 1;
    }
    let n = df.n_docs().max(1) as f64;
    candidates
        .iter()
        .map(|candidate| {
            let total: f64 = candidate
                .words
                .iter()
                .map(|word| {
                    let term_freq = tf.get(word.as_str()).copied().unwrap_or(0) as f64;
                    term_freq * (n / df.df(word) as f64).ln()
                })
                .sum();
            match mode {
                TfidfMode::Sum => total,
                TfidfMode::Mean => total / candidate.words.len() as f64,
            }
        })
        .collect()
}

/// Builds the co-occurrence graph: the weight of edge (i, j) is the number
/// of sliding token windows containing an occurrence of both candidates.
fn cooccurrence_graph(
    candidates: Vec<Candidate>,
    token_count: usize,
    window: usize,
) -> Result<KeyGraph> {
    let window = window.max(1);
    let window_count = token_count.saturating_sub(window) + 1;
    // in_window[c][w]: candidate c has an occurrence intersecting window w.
    let in_window: Vec<Vec<bool>> = candidates
        .iter()
        .map(|candidate| {
            let mut flags = vec![false; window_count];
            for &start in &candidate.positions {
                let end = start + candidate.words.len();
                // Windows [w, w + window) intersecting [start, end).
                let first = start.saturating_sub(window - 1);
                for w in first..end.min(window_count) {
                    flags[w] = true;
                }
            }
            flags
        })
        .collect();

    let mut edges = Vec::new();
    for i in 0..candidates.len() {
        for j in (i + 1)..candidates.len() {
            let shared = in_window[i]
                .iter()
                .zip(&in_window[j])
                .filter(|(a, b)| **a && **b)
                .count();
            if shared > 0 {
                edges.push((i, j, shared as f64));
            }
        }
    }
    KeyGraph::with_candidates(candidates, &edges)
}

/// Centrality scores on the co-occurrence graph. Personalized PageRank has
/// no embedding vectors here and falls back to plain PageRank.
pub fn cooccurrence_scores(
    candidates: Vec<Candidate>,
    token_count: usize,
    window: usize,
    ctx: &PipelineContext,
) -> Result<(KeyGraph, Vec<f64>)> {
    let graph = cooccurrence_graph(candidates, token_count, window)?;
    let mut kind = ctx.config().centrality;
    if kind == CentralityKind::PersonalizedPageRank {
        log::warn!("co-occurrence baseline has no embeddings; using plain pagerank");
        kind = CentralityKind::PageRank;
    }
    let scores = compute_centrality(&graph, kind, &ctx.centrality_options(), &[])?;
    Ok((graph, scores))
}

fn prepare_all(
    ctx: &PipelineContext,
    dataset: &[DatasetEntry],
) -> Vec<(Vec<String>, Vec<Candidate>)> {
    dataset
        .par_iter()
        .map(|entry| ctx.prepare(&entry.document.text))
        .collect()
}

/// Evaluates the tf-idf baseline over a dataset with the context's
/// candidate settings and top-N cutoff.
pub fn evaluate_tfidf_baseline(
    ctx: &PipelineContext,
    dataset: &[DatasetEntry],
    options: &EvalOptions,
    mode: TfidfMode,
) -> Result<EvalReport> {
    let prepared = prepare_all(ctx, dataset);
    let df = DfTable::from_token_streams(prepared.iter().map(|(tokens, _)| tokens.as_slice()));
    let top_n = ctx.config().top_n;

    let per_doc: Vec<(String, super::Counts)> = dataset
        .par_iter()
        .zip(prepared.par_iter())
        .map(|(entry, (tokens, candidates))| {
            let scores = tfidf_scores(tokens, candidates, &df, mode);
            let ranked = rank_and_select(candidates, &scores, top_n);
            let predicted: Vec<String> =
                ranked.iter().map(|s| s.candidate.phrase()).collect();
            let counts = score_predictions(&predicted, &entry.gold.phrases, tokens, options);
            (entry.document.id.clone(), counts)
        })
        .collect();

    Ok(finish_report(
        format!("tfidf-{mode}"),
        ctx.config(),
        options,
        per_doc,
    ))
}

/// Runs the tf-idf baseline in both aggregation modes and returns the one
/// with the higher F1.
pub fn best_tfidf_baseline(
    ctx: &PipelineContext,
    dataset: &[DatasetEntry],
    options: &EvalOptions,
) -> Result<(TfidfMode, EvalReport)> {
    let sum = evaluate_tfidf_baseline(ctx, dataset, options, TfidfMode::Sum)?;
    let mean = evaluate_tfidf_baseline(ctx, dataset, options, TfidfMode::Mean)?;
    if mean.metrics.f1 > sum.metrics.f1 {
        Ok((TfidfMode::Mean, mean))
    } else {
        Ok((TfidfMode::Sum, sum))
    }
}

/// Evaluates the co-occurrence-graph baseline over a dataset.
pub fn evaluate_cooccurrence_baseline(
    ctx: &PipelineContext,
    dataset: &[DatasetEntry],
    options: &EvalOptions,
    window: usize,
) -> Result<EvalReport> {
    let prepared = prepare_all(ctx, dataset);
    let top_n = ctx.config().top_n;

    let per_doc: Vec<Result<(String, super::Counts)>> = dataset
        .par_iter()
        .zip(prepared.into_par_iter())
        .map(|(entry, (tokens, candidates))| {
            let (graph, scores) =
                cooccurrence_scores(candidates, tokens.len(), window, ctx)?;
            let ranked = rank_and_select(graph.candidates(), &scores, top_n);
            let predicted: Vec<String> =
                ranked.iter().map(|s| s.candidate.phrase()).collect();
            let counts = score_predictions(&predicted, &entry.gold.phrases, &tokens, options);
            Ok((entry.document.id.clone(), counts))
        })
        .collect();
    let per_doc: Vec<(String, super::Counts)> =
        per_doc.into_iter().collect::<Result<_>>()?;

    Ok(finish_report(
        format!("cooccurrence-w{window}"),
        ctx.config(),
        options,
        per_doc,
    ))
}

//! Dataset-level evaluation: per-document counts, micro-averaged metrics,
//! configuration sweeps, and precision/recall curves over the cutoff N.

use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::centrality::rank_and_select;
use crate::config::{ExtractionConfig, MatchMode};
use crate::corpus::DatasetEntry;
use crate::error::{Error, Result};
use crate::pipeline::PipelineContext;

use super::matching::{gold_in_document, match_phrases, Counts};
use super::metrics::{micro_average, Metrics};

/// Scoring options shared by the extractor and the baselines.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub match_mode: MatchMode,
    /// Drop gold phrases that never occur in the document before scoring.
    pub drop_absent_gold: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            match_mode: MatchMode::Stemmed,
            drop_absent_gold: false,
        }
    }
}

/// Evaluation result for one system over one dataset.
#[derive(Debug, Clone)]
pub struct EvalReport {
    pub label: String,
    pub config_record: String,
    pub match_mode: MatchMode,
    pub drop_absent_gold: bool,
    pub per_doc: Vec<(String, Counts)>,
    pub totals: Counts,
    pub metrics: Metrics,
}

/// Counts one document's predictions against its gold set.
pub(crate) fn score_predictions(
    predicted: &[String],
    gold: &[String],
    tokens: &[String],
    options: &EvalOptions,
) -> Counts {
    if options.drop_absent_gold {
        let kept: Vec<String> = gold
            .iter()
            .filter(|phrase| gold_in_document(tokens, phrase, options.match_mode))
            .cloned()
            .collect();
        match_phrases(predicted, &kept, options.match_mode)
    } else {
        match_phrases(predicted, gold, options.match_mode)
    }
}

pub(crate) fn finish_report(
    label: String,
    config: &ExtractionConfig,
    options: &EvalOptions,
    per_doc: Vec<(String, Counts)>,
) -> EvalReport {
    let counts: Vec<Counts> = per_doc.iter().map(|(_, c)| *c).collect();
    let (totals, metrics) = micro_average(&counts);
    EvalReport {
        label,
        config_record: config.to_record(),
        match_mode: options.match_mode,
        drop_absent_gold: options.drop_absent_gold,
        per_doc,
        totals,
        metrics,
    }
}

/// Extracts keyphrases for every document and micro-averages the counts.
pub fn evaluate_dataset(
    ctx: &PipelineContext,
    dataset: &[DatasetEntry],
    options: &EvalOptions,
) -> Result<EvalReport> {
    let per_doc: Vec<Result<(String, Counts)>> = dataset
        .par_iter()
        .map(|entry| {
            let outcome = ctx.extract(&entry.document.text)?;
            let predicted: Vec<String> = outcome
                .keyphrases
                .iter()
                .map(|s| s.candidate.phrase())
                .collect();
            let counts =
                score_predictions(&predicted, &entry.gold.phrases, &outcome.tokens, options);
            Ok((entry.document.id.clone(), counts))
        })
        .collect();
    let per_doc: Vec<(String, Counts)> = per_doc.into_iter().collect::<Result<_>>()?;
    Ok(finish_report("extract".to_owned(), ctx.config(), options, per_doc))
}

/// One sweep row: the configuration record and its outcome. Failed runs
/// keep their error message so the rest of the sweep still reports.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub record: String,
    pub result: std::result::Result<Metrics, String>,
}

/// Evaluates each configuration over the dataset in order.
pub fn sweep(
    configs: &[ExtractionConfig],
    dataset: &[DatasetEntry],
    options: &EvalOptions,
) -> Vec<SweepRow> {
    configs
        .iter()
        .map(|config| {
            let record = config.to_record();
            let result = PipelineContext::new(config.clone())
                .and_then(|ctx| evaluate_dataset(&ctx, dataset, options))
                .map(|report| report.metrics)
                .map_err(|err| err.to_string());
            SweepRow { record, result }
        })
        .collect()
}

/// Micro-averaged metrics at each cutoff in `n_values`. Documents are
/// extracted once; every cutoff reuses a prefix of the full ranking.
pub fn pr_curve(
    ctx: &PipelineContext,
    dataset: &[DatasetEntry],
    options: &EvalOptions,
    n_values: &[usize],
) -> Result<Vec<(usize, Metrics)>> {
    let full: Vec<Result<(Vec<String>, Vec<String>, Vec<String>)>> = dataset
        .par_iter()
        .map(|entry| {
            let outcome = ctx.extract(&entry.document.text)?;
            let ranking = rank_and_select(outcome.graph.candidates(), &outcome.scores, usize::MAX);
            let phrases: Vec<String> = ranking.iter().map(|s| s.candidate.phrase()).collect();
            Ok((phrases, entry.gold.phrases.clone(), outcome.tokens))
        })
        .collect();
    let full: Vec<(Vec<String>, Vec<String>, Vec<String>)> =
        full.into_iter().collect::<Result<_>>()?;

    let mut curve = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let counts: Vec<Counts> = full
            .iter()
            .map(|(phrases, gold, tokens)| {
                let cut = &phrases[..n.min(phrases.len())];
                score_predictions(cut, gold, tokens, options)
            })
            .collect();
        let (_, metrics) = micro_average(&counts);
        curve.push((n, metrics));
    }
    Ok(curve)
}

/// The eval-report file format as a string.
pub fn render_eval_report(report: &EvalReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("label\t{}\n", report.label));
    out.push_str(&format!("config\t{}\n", report.config_record));
    out.push_str(&format!("match\t{}\n", report.match_mode.name()));
    out.push_str(&format!("drop_absent_gold\t{}\n", report.drop_absent_gold));
    for (id, c) in &report.per_doc {
        out.push_str(&format!(
            "doc\t{id}\t{}\t{}\t{}\n",
            c.true_positives, c.false_positives, c.false_negatives
        ));
    }
    out.push_str(&format!(
        "totals\t{}\t{}\t{}\n",
        report.totals.true_positives, report.totals.false_positives, report.totals.false_negatives
    ));
    out.push_str(&format!("precision\t{:.6}\n", report.metrics.precision));
    out.push_str(&format!("recall\t{:.6}\n", report.metrics.recall));
    out.push_str(&format!("f1\t{:.6}\n", report.metrics.f1));
    out
}

/// Writes a tab-separated report: header fields, per-document counts,
/// totals, and the micro-averaged metrics.
pub fn write_eval_report(path: &Path, report: &EvalReport) -> Result<()> {
    fs::write(path, render_eval_report(report)).map_err(|e| Error::io(path, e))
}

/// The sweep-table file format as a string.
pub fn render_sweep_table(rows: &[SweepRow]) -> String {
    let mut out = String::from("config\tprecision\trecall\tf1\n");
    for row in rows {
        match &row.result {
            Ok(m) => out.push_str(&format!(
                "{}\t{:.6}\t{:.6}\t{:.6}\n",
                row.record, m.precision, m.recall, m.f1
            )),
            Err(msg) => out.push_str(&format!("{}\tERROR\t{}\n", row.record, msg)),
        }
    }
    out
}

/// Writes sweep results as a tab-separated table, one row per configuration.
pub fn write_sweep_table(path: &Path, rows: &[SweepRow]) -> Result<()> {
    fs::write(path, render_sweep_table(rows)).map_err(|e| Error::io(path, e))
}

/// The precision/recall-curve file format as a string.
pub fn render_pr_curve(curve: &[(usize, Metrics)]) -> String {
    let mut out = String::from("top_n\tprecision\trecall\tf1\n");
    for (n, m) in curve {
        out.push_str(&format!(
            "{n}\t{:.6}\t{:.6}\t{:.6}\n",
            m.precision, m.recall, m.f1
        ));
    }
    out
}

/// Writes one metrics row per cutoff value.
pub fn write_pr_curve(path: &Path, curve: &[(usize, Metrics)]) -> Result<()> {
    fs::write(path, render_pr_curve(curve)).map_err(|e| Error::io(path, e))
}

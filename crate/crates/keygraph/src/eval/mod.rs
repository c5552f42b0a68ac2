//! Evaluation: phrase matching, micro-averaged metrics, reference
//! baselines, and configuration sweeps.

mod baselines;
mod matching;
mod metrics;
mod run;

pub use baselines::{
    best_tfidf_baseline, cooccurrence_scores, evaluate_cooccurrence_baseline,
    evaluate_tfidf_baseline, tfidf_scores, DfTable,
};
pub use matching::{gold_in_document, match_phrases, stem_phrase, Counts};
pub use metrics::{micro_average, precision_recall_f1, Metrics};
pub use run::{
    evaluate_dataset, pr_curve, render_eval_report, render_pr_curve, render_sweep_table, sweep,
    write_eval_report, write_pr_curve, write_sweep_table,
    EvalOptions, EvalReport, SweepRow,
};

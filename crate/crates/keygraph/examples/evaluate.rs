//! Scores the extractor against the tf-idf and co-occurrence baselines on
//! a labeled dataset. Defaults to the bundled fixture abstracts.
//!
//! Usage: cargo run --example evaluate [dataset-dir] [vectors.txt]

use std::path::PathBuf;

use keygraph::corpus::load_dataset;
use keygraph::eval::{
    best_tfidf_baseline, evaluate_cooccurrence_baseline, evaluate_dataset, EvalOptions,
};
use keygraph::{ExtractionConfig, PipelineContext};

fn main() -> keygraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let dataset_dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/abstracts"));
    let vector_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/vectors.txt"));

    let dataset = load_dataset(&dataset_dir)?;
    println!("{} documents in {}", dataset.len(), dataset_dir.display());

    let mut config = ExtractionConfig::default();
    config.global_vectors = Some(vector_path);
    let ctx = PipelineContext::new(config)?;
    let options = EvalOptions::default();

    let extract = evaluate_dataset(&ctx, &dataset, &options)?;
    let (mode, tfidf) = best_tfidf_baseline(&ctx, &dataset, &options)?;
    let cooc = evaluate_cooccurrence_baseline(&ctx, &dataset, &options, 10)?;

    println!("\nper-document counts (extract):");
    for (id, counts) in &extract.per_doc {
        println!(
            "  {:<6} tp {:>2}  fp {:>2}  fn {:>2}",
            id, counts.true_positives, counts.false_positives, counts.false_negatives
        );
    }

    println!("\nmicro-averaged scores:");
    for report in [&extract, &tfidf, &cooc] {
        println!(
            "  {:<18} precision {:.4}  recall {:.4}  f1 {:.4}",
            report.label, report.metrics.precision, report.metrics.recall, report.metrics.f1
        );
    }
    println!("\nbest tf-idf aggregation mode: {mode}");
    Ok(())
}

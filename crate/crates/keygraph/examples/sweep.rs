//! Sweeps edge-weight functions and centrality measures over a dataset,
//! then traces a precision/recall curve for the best configuration.
//!
//! Usage: cargo run --example sweep [dataset-dir] [vectors.txt]

use std::path::PathBuf;

use keygraph::config::CentralityKind;
use keygraph::corpus::load_dataset;
use keygraph::eval::{pr_curve, sweep, EvalOptions};
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
    let mut base = ExtractionConfig::default();
    base.global_vectors = Some(vector_path);

    // One axis at a time: weighting function, then centrality.
    let mut configs = Vec::new();
    for function_id in [2, 4, 6, 8] {
        let mut config = base.clone();
        config.function_id = function_id;
        configs.push(config);
    }
    for centrality in [CentralityKind::Degree, CentralityKind::PageRank] {
        let mut config = base.clone();
        config.centrality = centrality;
        configs.push(config);
    }

    let options = EvalOptions::default();
    println!("sweeping {} configurations over {} documents:", configs.len(), dataset.len());
    let mut best: Option<(f64, ExtractionConfig)> = None;
    for (row, config) in sweep(&configs, &dataset, &options).iter().zip(&configs) {
        match &row.result {
            Ok(metrics) => {
                println!(
                    "  function {}  centrality {:<12} f1 {:.4}",
                    config.function_id,
                    config.centrality.name(),
                    metrics.f1
                );
                if best.as_ref().map_or(true, |(f1, _)| metrics.f1 > *f1) {
                    best = Some((metrics.f1, config.clone()));
                }
            }
            Err(message) => println!("  failed: {message}"),
        }
    }

    let (f1, config) = best.expect("at least one configuration succeeded");
    println!(
        "\nprecision/recall curve for the best run (function {}, {}, f1 {:.4}):",
        config.function_id,
        config.centrality.name(),
        f1
    );
    let ctx = PipelineContext::new(config)?;
    for (n, metrics) in pr_curve(&ctx, &dataset, &options, &[5, 10, 15, 20, 25])? {
        println!(
            "  top {:>2}  precision {:.4}  recall {:.4}  f1 {:.4}",
            n, metrics.precision, metrics.recall, metrics.f1
        );
    }
    Ok(())
}

//! Runs the whole pipeline on one document through the library API and
//! prints everything the extraction produces: ranked phrases, the graph
//! shape, training diagnostics, and vocabulary coverage.
//!
//! Usage: cargo run --example extract [document.txt] [vectors.txt]

use std::path::PathBuf;

use keygraph::centrality::rank_and_select;
use keygraph::{ExtractionConfig, PipelineContext};

fn main() -> keygraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let doc_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/abstracts/01.txt"));
    let vector_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/vectors.txt"));

    let mut config = ExtractionConfig::default();
    config.global_vectors = Some(vector_path);
    println!("config: {}", config.to_record());

    let ctx = PipelineContext::new(config.clone())?;
    let text =
        std::fs::read_to_string(&doc_path).map_err(|e| keygraph::Error::io(&doc_path, e))?;
    let outcome = ctx.extract(&text)?;

    println!(
        "\n{} tokens -> {} candidates -> {} edges",
        outcome.tokens.len(),
        outcome.graph.node_count(),
        outcome.graph.edges().len()
    );
    if !outcome.training_losses.is_empty() {
        println!(
            "local training loss: {:.4} -> {:.4} over {} epochs",
            outcome.training_losses[0],
            outcome.training_losses[outcome.training_losses.len() - 1],
            outcome.training_losses.len()
        );
    }
    println!(
        "global coverage: {:.1}% of candidate words out of vocabulary",
        100.0 * outcome.oov.fraction()
    );

    println!("\ntop {} phrases:", config.top_n);
    for scored in &outcome.keyphrases {
        println!(
            "  {:>3}  {:<40} {:.6}",
            scored.rank,
            scored.candidate.phrase(),
            scored.score
        );
    }

    // The outcome keeps every candidate's score, so deeper cuts need no
    // second extraction.
    let full = rank_and_select(outcome.graph.candidates(), &outcome.scores, usize::MAX);
    if full.len() > outcome.keyphrases.len() {
        println!("\nnext phrases past the cutoff:");
        for scored in full.iter().skip(outcome.keyphrases.len()).take(5) {
            println!(
                "  {:>3}  {:<40} {:.6}",
                scored.rank,
                scored.candidate.phrase(),
                scored.score
            );
        }
    }
    Ok(())
}

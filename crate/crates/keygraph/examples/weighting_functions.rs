//! Shows how the eight edge-weighting functions treat one document.
//!
//! For every candidate the example prints the cosine of its vector against
//! the document representative in both embedding spaces, plus the node's
//! degree under the configured function. It then picks one candidate pair
//! and tabulates all eight weights so the plain and amplified variants can
//! be compared side by side.
//!
//! Usage: cargo run --example weighting_functions [document.txt] [vectors.txt]

use std::path::{Path, PathBuf};

use keygraph::graph::{cosine, edge_weight};
use keygraph::{ExtractionConfig, PipelineContext};

fn main() -> keygraph::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut args = std::env::args().skip(1);
    let doc_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/abstracts/03.txt"));
    let vector_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/vectors.txt"));

    let mut config = ExtractionConfig::default();
    config.global_vectors = Some(vector_path);
    let function_id = config.function_id;
    let ctx = PipelineContext::new(config)?;
    let text = std::fs::read_to_string(&doc_path)
        .map_err(|e| keygraph::Error::io(&doc_path, e))?;
    let outcome = ctx.extract(&text)?;

    let doc = outcome.graph.doc_vectors();
    println!("document: {}", doc_path.display());
    println!("function {function_id} governs the graph below");
    println!("{:<40} {:>9} {:>9} {:>7}", "candidate", "cos_loc", "cos_glob", "degree");
    for (i, candidate) in outcome.graph.candidates().iter().enumerate() {
        let v = &outcome.vectors[i];
        let local = cosine(&v.local, &doc.local)?;
        let global = cosine(&v.global, &doc.global)?;
        println!(
            "{:<40} {:>9.4} {:>9.4} {:>7}",
            candidate.phrase(),
            local,
            global,
            outcome.graph.degree(i)
        );
    }

    // The pair with the heaviest edge makes a good probe.
    let Some(edge) = outcome
        .graph
        .edges()
        .iter()
        .max_by(|a, b| a.weight.total_cmp(&b.weight))
    else {
        println!("graph has no edges");
        return Ok(());
    };
    let a = outcome.graph.candidate(edge.i).phrase();
    let b = outcome.graph.candidate(edge.j).phrase();
    println!("\nall eight weights for '{a}' and '{b}':");
    for id in 1..=8 {
        let weight = edge_weight(
            id,
            &outcome.vectors[edge.i],
            &outcome.vectors[edge.j],
            doc,
        )?;
        match weight {
            Some(w) => println!("  function {id}: {w:.6}"),
            None => println!("  function {id}: no edge"),
        }
    }
    Ok(())
}

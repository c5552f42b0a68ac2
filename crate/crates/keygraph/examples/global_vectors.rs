//! Loads a pretrained word-vector table and reports how well it covers a
//! document's candidate phrases.
//!
//! Usage: cargo run --example global_vectors [vectors.txt] [document.txt]

use std::path::PathBuf;

use keygraph::corpus::load_vector_table;
use keygraph::embedding::GlobalSource;
use keygraph::graph::cosine;
use keygraph::text::{
    extract_candidates, filter_outliers, preprocess, tokenize, tokenize_and_tag, CandidateMode,
    LexiconTagger,
};

fn main() -> keygraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let vector_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/vectors.txt"));
    let doc_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/abstracts/02.txt"));

    let table = load_vector_table(&vector_path, None)?;
    println!(
        "table: {} words, dimension {}",
        table.len(),
        table.dimension()
    );

    let text =
        std::fs::read_to_string(&doc_path).map_err(|e| keygraph::Error::io(&doc_path, e))?;
    let normalized = preprocess(&text);
    let tokens = tokenize(&normalized);
    let tagger = LexiconTagger::new();
    let candidates = filter_outliers(
        extract_candidates(&tokenize_and_tag(&normalized, &tagger), CandidateMode::MaximalSpans),
        7.0,
    );

    let source = GlobalSource::WordTable(table);
    let report = source.oov_report(&candidates);
    println!(
        "coverage: {} of {} candidate words in the table ({:.1}% out of vocabulary)",
        report.total_words - report.oov_words,
        report.total_words,
        100.0 * report.fraction()
    );
    for phrase in &report.fully_oov {
        println!("  fully out of vocabulary: {phrase}");
    }

    // A phrase vector is the sum of its word vectors; missing words
    // contribute nothing and are flagged instead.
    let doc = source.document_vector(&tokens, 250);
    println!("\nphrase vectors against the document vector:");
    for candidate in &candidates {
        let (vector, complete) = source.phrase_vector(candidate);
        let cos = cosine(&vector, &doc)?;
        println!(
            "  {:<36} {:+.4}{}",
            candidate.phrase(),
            cos,
            if complete { "" } else { "  [missing words]" }
        );
    }
    Ok(())
}

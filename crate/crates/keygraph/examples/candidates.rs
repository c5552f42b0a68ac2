//! Walks the candidate stage: normalization, tagging, phrase spans, and
//! the occurrence filter.
//!
//! Usage: cargo run --example candidates [document.txt] [tagger-model.json]

use std::path::{Path, PathBuf};

use keygraph::text::{
    extract_candidates, filter_outliers, preprocess, tokenize_and_tag, CandidateMode,
    LexiconTagger, PerceptronTagger, Tagger,
};

const SAMPLE: &str = "Community detection identifies dense groups in social networks. \
We present a scalable community detection algorithm based on random walks. \
The algorithm merges small clusters and preserves the community structure.";

fn main() -> keygraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => {
            let path = PathBuf::from(path);
            std::fs::read_to_string(&path).map_err(|e| keygraph::Error::io(&path, e))?
        }
        None => SAMPLE.to_owned(),
    };
    // Lexicon rules by default, same as the pipeline; pass a model path to
    // swap in the trained tagger.
    let tagger: Box<dyn Tagger> = match args.next() {
        Some(path) => Box::new(PerceptronTagger::load(Path::new(&path))?),
        None => Box::new(LexiconTagger::new()),
    };

    let normalized = preprocess(&text);
    let tagged = tokenize_and_tag(&normalized, tagger.as_ref());
    println!("tokens ({}):", tagged.len());
    let mut line = String::new();
    for token in &tagged {
        if line.len() + token.word.len() > 72 {
            println!("  {line}");
            line.clear();
        }
        line.push_str(&format!("{}_{} ", token.word, token.tag));
    }
    if !line.is_empty() {
        println!("  {line}");
    }

    let alpha = 7.0;
    let candidates = extract_candidates(&tagged, CandidateMode::MaximalSpans);
    let kept = filter_outliers(candidates.clone(), alpha);
    println!("\ncandidates ({} before filter, {} after):", candidates.len(), kept.len());
    for candidate in &candidates {
        let survives = kept.iter().any(|k| k.words == candidate.words);
        println!(
            "  {} x{} at {} {}",
            candidate.phrase(),
            candidate.count,
            candidate.first_position,
            if survives { "[kept]" } else { "[filtered]" }
        );
    }
    Ok(())
}

//! Trains the averaged-perceptron tagger from a hand-tagged corpus and
//! saves the model that ships in `assets/tagger/model.json`.
//!
//! Usage: cargo run --example train_tagger [corpus.pos] [model.json]

use std::path::{Path, PathBuf};

use keygraph::text::tagger::parse_tagged_corpus;
use keygraph::text::{PerceptronTagger, Tagger};

fn main() -> keygraph::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut args = std::env::args().skip(1);
    let corpus_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/tagger/train.pos"));
    let model_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/tagger/model.json"));

    let text = std::fs::read_to_string(&corpus_path)
        .map_err(|e| keygraph::Error::io(&corpus_path, e))?;
    let sentences = parse_tagged_corpus(&text)?;
    let tokens: usize = sentences.iter().map(Vec::len).sum();
    println!("corpus: {} sentences, {tokens} tokens", sentences.len());

    let tagger = PerceptronTagger::train(&sentences, 20, 42);

    // Resubstitution accuracy: how much of the training data the model
    // reproduces. A sanity check, not an evaluation.
    let mut correct = 0usize;
    for sentence in &sentences {
        let words: Vec<String> = sentence.iter().map(|(w, _)| w.clone()).collect();
        let predicted = tagger.tag_sequence(&words);
        correct += predicted
            .iter()
            .zip(sentence)
            .filter(|(p, (_, gold))| *p == gold)
            .count();
    }
    println!(
        "training-set accuracy: {:.1}% ({correct}/{tokens})",
        100.0 * correct as f64 / tokens as f64
    );

    tagger.save(&model_path)?;
    println!("model written to {}", model_path.display());
    Ok(())
}

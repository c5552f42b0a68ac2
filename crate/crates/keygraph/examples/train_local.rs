//! Trains both per-document embedding algorithms on the same text and
//! shows what each one learns: loss curves, vocabulary, and how phrase
//! vectors line up with the document vector.
//!
//! Usage: cargo run --example train_local [document.txt]

use std::path::PathBuf;

use keygraph::config::{LocalAlgorithm, TrainingParams};
use keygraph::embedding::{document_local_vector, phrase_local_vector, train_local};
use keygraph::graph::cosine;
use keygraph::text::{
    extract_candidates, filter_outliers, preprocess, tokenize, tokenize_and_tag, LexiconTagger,
};

const SAMPLE: &str = "Community detection is the study of dense groups in social \
networks. We build our community detection method on random walks. The random \
walks stay inside dense groups for a long time. These social networks contain \
many dense groups. Our random walks also visit every group at a stable \
frequency. The social networks grow but the dense groups stay stable.";

fn main() -> keygraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => {
            let path = PathBuf::from(path);
            std::fs::read_to_string(&path).map_err(|e| keygraph::Error::io(&path, e))?
        }
        None => SAMPLE.to_owned(),
    };

    let normalized = preprocess(&text);
    let tokens = tokenize(&normalized);
    let tagger = LexiconTagger::new();
    let tagged = tokenize_and_tag(&normalized, &tagger);
    let candidates = filter_outliers(
        extract_candidates(&tagged, keygraph::text::CandidateMode::MaximalSpans),
        2.0,
    );
    println!("{} tokens, {} candidate phrases", tokens.len(), candidates.len());

    let params = TrainingParams::default();
    for algorithm in LocalAlgorithm::ALL {
        let model = train_local(&tokens, algorithm, &params, 42)?;
        println!(
            "\n{}: vocabulary {} dimension {}",
            algorithm,
            model.vocab_size(),
            model.dimension()
        );
        let losses = &model.epoch_losses;
        // Loss definitions differ per algorithm, so compare shapes, not
        // magnitudes.
        println!(
            "  loss epoch 1 {:.4}  epoch {} {:.4}  epoch {} {:.4}",
            losses[0],
            losses.len() / 2,
            losses[losses.len() / 2 - 1],
            losses.len(),
            losses[losses.len() - 1],
        );

        let doc = document_local_vector(&model, &tokens, 10);
        println!("  phrase cosine to the document vector:");
        for candidate in &candidates {
            let phrase = phrase_local_vector(&model, candidate);
            println!(
                "    {:<24} {:+.4}",
                candidate.phrase(),
                cosine(&phrase, &doc)?
            );
        }
    }
    Ok(())
}

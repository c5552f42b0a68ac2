//! Regenerates the bundled word-vector file for the fixture abstracts.
//!
//! The vectors are count-based: weighted co-occurrences over the five
//! abstracts (window 5, weight 1/distance) become a positive pointwise
//! mutual information matrix, which a symmetric eigendecomposition reduces
//! to 20 components per word. Five more components hold the square roots of
//! the word's occurrence shares per abstract, so words from the same
//! abstract point the same way. Rows are unit length. The real vocabulary
//! comes first; deterministic pseudo-words pad the file to 10000 entries so
//! that lookups can miss and `global_limit` has something to cut.
//!
//! Usage: cargo run --example build_fixture_vectors [output.txt]

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use keygraph::corpus::{write_vector_table, VectorTable};
use keygraph::text::{preprocess, tokenize};
use keygraph::DenseVector;

const WINDOW: usize = 5;
const SVD_DIMS: usize = 20;
const DOC_DIMS: usize = 5;
// Damps the abstract-membership block so shared-document identity alone
// cannot dominate content similarity.
const MEMBER_SCALE: f64 = 0.4;
const DIMENSION: usize = SVD_DIMS + DOC_DIMS;
const TOTAL_WORDS: usize = 10_000;
const SEED: u64 = 42;

fn main() -> keygraph::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let fixture_dir = root.join("assets/fixtures/abstracts");
    let output = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("assets/fixtures/vectors.txt"));

    let mut docs = Vec::new();
    for id in ["01", "02", "03", "04", "05"] {
        let path = fixture_dir.join(format!("{id}.txt"));
        let text =
            std::fs::read_to_string(&path).map_err(|e| keygraph::Error::io(&path, e))?;
        docs.push(tokenize(&preprocess(&text)));
    }

    // Frequency-ranked vocabulary, ties broken alphabetically.
    let mut counts: HashMap<String, usize> = HashMap::new();
    for doc in &docs {
        for word in doc {
            *counts.entry(word.clone()).or_default() += 1;
        }
    }
    let mut vocab: Vec<(String, usize)> = counts.into_iter().collect();
    vocab.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let words: Vec<String> = vocab.into_iter().map(|(w, _)| w).collect();
    let index: HashMap<&str, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_str(), i))
        .collect();
    let n = words.len();

    // Symmetric co-occurrence with harmonic distance weights.
    let mut cooc = DMatrix::<f64>::zeros(n, n);
    for doc in &docs {
        for (i, left) in doc.iter().enumerate() {
            let li = index[left.as_str()];
            for d in 1..=WINDOW {
                let Some(right) = doc.get(i + d) else { break };
                let ri = index[right.as_str()];
                let w = 1.0 / d as f64;
                cooc[(li, ri)] += w;
                cooc[(ri, li)] += w;
            }
        }
    }

    // Positive PMI.
    let total: f64 = cooc.sum();
    let row_sums: Vec<f64> = (0..n).map(|i| cooc.row(i).sum()).collect();
    let mut ppmi = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let joint = cooc[(i, j)];
            if joint > 0.0 {
                let pmi = (joint * total / (row_sums[i] * row_sums[j])).ln();
                if pmi > 0.0 {
                    ppmi[(i, j)] = pmi;
                }
            }
        }
    }

    // Top eigenpairs of the symmetric PPMI matrix give the embedding.
    let eigen = ppmi.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[b].total_cmp(&eigen.eigenvalues[a]));
    let kept: Vec<usize> = order.into_iter().take(SVD_DIMS).collect();

    // Per-word occurrence share of each abstract.
    let mut doc_counts: HashMap<&str, [f64; DOC_DIMS]> = HashMap::new();
    for (d, doc) in docs.iter().enumerate() {
        for word in doc {
            doc_counts.entry(word.as_str()).or_default()[d] += 1.0;
        }
    }

    let mut table = VectorTable::new(DIMENSION);
    for (i, word) in words.iter().enumerate() {
        let mut components: Vec<f64> = kept
            .iter()
            .map(|&k| eigen.eigenvectors[(i, k)] * eigen.eigenvalues[k].max(0.0).sqrt())
            .collect();
        let norm = components.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 0.0 {
            for c in &mut components {
                *c /= norm;
            }
        }
        let shares = &doc_counts[word.as_str()];
        let total_count: f64 = shares.iter().sum();
        for d in 0..DOC_DIMS {
            components.push(MEMBER_SCALE * (shares[d] / total_count).sqrt());
        }
        let norm = components.iter().map(|c| c * c).sum::<f64>().sqrt();
        for c in &mut components {
            *c /= norm;
        }
        table.insert(word, DenseVector::new(components))?;
    }

    // Pad with pronounceable pseudo-words carrying random unit vectors.
    let syllables = [
        "ba", "be", "bi", "bo", "bu", "da", "de", "di", "do", "du", "ka", "ke",
        "ki", "ko", "ku", "la", "le", "li", "lo", "lu", "ma", "me", "mi", "mo",
        "mu", "na", "ne", "ni", "no", "nu", "pa", "pe", "pi", "po", "pu", "ra",
        "re", "ri", "ro", "ru", "sa", "se", "si", "so", "su", "ta", "te", "ti",
        "to", "tu", "va", "ve", "vi", "vo", "vu", "za", "ze", "zi", "zo", "zu",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut seen: HashSet<String> = words.iter().cloned().collect();
    while table.len() < TOTAL_WORDS {
        let parts = rng.gen_range(3..=4);
        let mut word = String::new();
        for _ in 0..parts {
            word.push_str(syllables[rng.gen_range(0..syllables.len())]);
        }
        if !seen.insert(word.clone()) {
            continue;
        }
        let mut components: Vec<f64> = (0..DIMENSION)
            .map(|_| rng.gen::<f64>() * 2.0 - 1.0)
            .collect();
        let norm = components.iter().map(|c| c * c).sum::<f64>().sqrt();
        for c in &mut components {
            *c /= norm;
        }
        table.insert(&word, DenseVector::new(components))?;
    }

    write_vector_table(&output, &table, true, 5)?;
    println!(
        "wrote {} vectors of dimension {} to {}",
        table.len(),
        DIMENSION,
        output.display()
    );
    println!("real vocabulary: {n} words");
    Ok(())
}

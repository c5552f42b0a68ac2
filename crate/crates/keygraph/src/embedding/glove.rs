//! GloVe trained on a single token stream: windowed co-occurrence counts
//! with 1/distance weighting, then AdaGrad on the weighted least-squares
//! objective. Co-occurrence records are iterated in sorted order, so
//! training is deterministic.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::TrainingParams;

use super::{build_vocab, TrainedVectors, Vocab};

/// Co-occurrence counts above this value get full weight.
const X_MAX: f64 = 10.0;
/// Exponent of the co-occurrence weighting function.
const WEIGHT_EXPONENT: f64 = 0.75;

/// Weighting function f(x): (x / X_MAX)^WEIGHT_EXPONENT, capped at 1.
pub fn cooccurrence_weight(x: f64) -> f64 {
    if x < X_MAX {
        (x / X_MAX).powf(WEIGHT_EXPONENT)
    } else {
        1.0
    }
}

/// Symmetric windowed co-occurrence with 1/distance weighting, keyed by
/// (center, context) id pairs in both directions.
fn cooccurrence_records(token_ids: &[usize], window: usize) -> Vec<(usize, usize, f64)> {
    let mut counts: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for i in 0..token_ids.len() {
        for distance in 1..=window {
            let Some(j) = i.checked_add(distance).filter(|&j| j < token_ids.len()) else {
                break;
            };
            let increment = 1.0 / distance as f64;
            *counts.entry((token_ids[i], token_ids[j])).or_insert(0.0) += increment;
            *counts.entry((token_ids[j], token_ids[i])).or_insert(0.0) += increment;
        }
    }
    counts
        .into_iter()
        .map(|((i, j), x)| (i, j, x))
        .collect()
}

/// Full-corpus objective at the current parameters:
/// sum over records of 0.5 f(x) (w_i . wt_j + b_i + bt_j - ln x)^2.
fn total_loss(
    records: &[(usize, usize, f64)],
    w: &[Vec<f64>],
    wt: &[Vec<f64>],
    b: &[f64],
    bt: &[f64],
) -> f64 {
    records
        .iter()
        .map(|&(i, j, x)| {
            let dot: f64 = w[i].iter().zip(&wt[j]).map(|(a, c)| a * c).sum();
            let diff = dot + b[i] + bt[j] - x.ln();
            0.5 * cooccurrence_weight(x) * diff * diff
        })
        .sum()
}

/// Trains GloVe vectors over one token stream. Exported vectors are the sum
/// of center and context vectors. `epoch_losses[e]` is the full objective
/// evaluated after epoch `e`'s updates.
pub(crate) fn train(tokens: &[String], params: &TrainingParams, seed: u64) -> TrainedVectors {
    let Vocab {
        words, token_ids, ..
    } = build_vocab(tokens);
    let vocab_size = words.len();
    let dim = params.dimension;
    let lr = params.learning_rate;

    let records = cooccurrence_records(&token_ids, params.window);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut init = || -> Vec<f64> {
        (0..dim)
            .map(|_| (rng.gen::<f64>() - 0.5) / (dim + 1) as f64)
            .collect()
    };
    let mut w: Vec<Vec<f64>> = (0..vocab_size).map(|_| init()).collect();
    let mut wt: Vec<Vec<f64>> = (0..vocab_size).map(|_| init()).collect();
    let mut b: Vec<f64> = (0..vocab_size).map(|_| (rng.gen::<f64>() - 0.5) / (dim + 1) as f64).collect();
    let mut bt: Vec<f64> = (0..vocab_size).map(|_| (rng.gen::<f64>() - 0.5) / (dim + 1) as f64).collect();

    let mut gradsq_w = vec![vec![1.0f64; dim]; vocab_size];
    let mut gradsq_wt = vec![vec![1.0f64; dim]; vocab_size];
    let mut gradsq_b = vec![1.0f64; vocab_size];
    let mut gradsq_bt = vec![1.0f64; vocab_size];

    let mut epoch_losses = Vec::with_capacity(params.epochs);
    for _ in 0..params.epochs {
        for &(i, j, x) in &records {
            let dot: f64 = w[i].iter().zip(&wt[j]).map(|(a, c)| a * c).sum();
            let diff = dot + b[i] + bt[j] - x.ln();
            let fdiff = cooccurrence_weight(x) * diff;

            for d in 0..dim {
                let grad_w = fdiff * wt[j][d];
                let grad_wt = fdiff * w[i][d];
                w[i][d] -= lr * grad_w / gradsq_w[i][d].sqrt();
                wt[j][d] -= lr * grad_wt / gradsq_wt[j][d].sqrt();
                gradsq_w[i][d] += grad_w * grad_w;
                gradsq_wt[j][d] += grad_wt * grad_wt;
            }
            b[i] -= lr * fdiff / gradsq_b[i].sqrt();
            bt[j] -= lr * fdiff / gradsq_bt[j].sqrt();
            gradsq_b[i] += fdiff * fdiff;
            gradsq_bt[j] += fdiff * fdiff;
        }
        epoch_losses.push(total_loss(&records, &w, &wt, &b, &bt));
    }

    let vectors: Vec<Vec<f64>> = (0..vocab_size)
        .map(|i| w[i].iter().zip(&wt[i]).map(|(a, c)| a + c).collect())
        .collect();

    TrainedVectors {
        words,
        vectors,
        epoch_losses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tokens(text: &str) -> Vec<String> {
        text.split_whitespace().map(str::to_owned).collect()
    }

    #[test]
    fn weight_function_caps_at_one() {
        assert_eq!(cooccurrence_weight(10.0), 1.0);
        assert_eq!(cooccurrence_weight(25.0), 1.0);
        let w = cooccurrence_weight(5.0);
        assert!((w - 0.5f64.powf(0.75)).abs() < 1e-12);
        assert!(cooccurrence_weight(0.5) < w);
    }

    #[test]
    fn cooccurrence_uses_inverse_distance_and_symmetry() {
        // Tokens: a b a; ids 0 1 0. Window 2.
        let records = cooccurrence_records(&[0, 1, 0], 2);
        let lookup = |i: usize, j: usize| -> f64 {
            records
                .iter()
                .find(|&&(a, b, _)| a == i && b == j)
                .map(|&(_, _, x)| x)
                .unwrap_or(0.0)
        };
        // (a,b): positions (0,1) distance 1 and (1,2) distance 1 -> 2.0.
        assert!((lookup(0, 1) - 2.0).abs() < 1e-12);
        assert!((lookup(1, 0) - 2.0).abs() < 1e-12);
        // (a,a): positions (0,2) distance 2 -> 0.5 in both directions.
        assert!((lookup(0, 0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn records_are_sorted() {
        let records = cooccurrence_records(&[2, 0, 1, 0], 3);
        let keys: Vec<(usize, usize)> = records.iter().map(|&(i, j, _)| (i, j)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn training_is_deterministic() {
        let toks = tokens("sun rises east sun sets west moon follows sun at night");
        let params = TrainingParams {
            dimension: 12,
            window: 4,
            epochs: 30,
            learning_rate: 0.025,
            negative_samples: 5,
        };
        let a = train(&toks, &params, 11);
        let b = train(&toks, &params, 11);
        assert_eq!(a.vectors, b.vectors);
        assert_eq!(a.epoch_losses, b.epoch_losses);
    }

    #[test]
    fn loss_is_nonincreasing_across_epochs() {
        let toks = tokens(
            "rivers carry water to the sea and rain returns water to the rivers \
             while lakes store water between the rain and the sea",
        );
        let params = TrainingParams {
            dimension: 10,
            window: 5,
            epochs: 50,
            learning_rate: 0.025,
            negative_samples: 5,
        };
        let result = train(&toks, &params, 5);
        for pair in result.epoch_losses.windows(2) {
            assert!(
                pair[1] <= pair[0] + 1e-12,
                "loss rose from {} to {}",
                pair[0],
                pair[1]
            );
        }
    }
}

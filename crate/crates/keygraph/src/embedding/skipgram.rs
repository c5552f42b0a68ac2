//! Skip-gram with negative sampling, trained on a single token stream.
//!
//! The per-pair loss and gradient functions are exposed so the analytic
//! gradients can be checked against finite differences of the loss; the
//! trainer applies exactly those gradients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::TrainingParams;

use super::{build_vocab, TrainedVectors, Vocab};

/// Exponent applied to unigram counts for the negative-sampling
/// distribution.
const NOISE_EXPONENT: f64 = 0.75;
/// The learning rate never decays below this fraction of its start value.
const MIN_LR_FRACTION: f64 = 1e-4;

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// ln(sigmoid(x)) computed without overflow for large |x|.
fn log_sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        -(-x).exp().ln_1p()
    } else {
        x - x.exp().ln_1p()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Negative-sampling loss for one (center, context) pair:
/// -ln s(c.v) - sum_k ln s(-c.n_k), where s is the logistic function, c is
/// the center input vector, v the context output vector, and n_k the
/// sampled negative output vectors.
pub fn pair_loss(center: &[f64], context: &[f64], negatives: &[&[f64]]) -> f64 {
    let mut loss = -log_sigmoid(dot(center, context));
    for neg in negatives {
        loss -= log_sigmoid(-dot(center, neg));
    }
    loss
}

/// Analytic gradients of [`pair_loss`] with respect to every parameter.
#[derive(Debug, Clone)]
pub struct PairGradients {
    pub center: Vec<f64>,
    pub context: Vec<f64>,
    pub negatives: Vec<Vec<f64>>,
}

/// Gradients of the pair loss; see [`pair_loss`] for the objective.
pub fn pair_gradients(center: &[f64], context: &[f64], negatives: &[&[f64]]) -> PairGradients {
    let dim = center.len();
    let pos_residual = sigmoid(dot(center, context)) - 1.0;

    let mut grad_center: Vec<f64> = context.iter().map(|v| pos_residual * v).collect();
    let grad_context: Vec<f64> = center.iter().map(|c| pos_residual * c).collect();

    let mut grad_negatives = Vec::with_capacity(negatives.len());
    for neg in negatives {
        let neg_residual = sigmoid(dot(center, neg));
        for d in 0..dim {
            grad_center[d] += neg_residual * neg[d];
        }
        grad_negatives.push(center.iter().map(|c| neg_residual * c).collect());
    }

    PairGradients {
        center: grad_center,
        context: grad_context,
        negatives: grad_negatives,
    }
}

/// Cumulative distribution over vocabulary ids proportional to
/// count^NOISE_EXPONENT.
struct NoiseTable {
    cumulative: Vec<f64>,
}

impl NoiseTable {
    fn new(counts: &[usize]) -> Self {
        let mut cumulative = Vec::with_capacity(counts.len());
        let mut total = 0.0;
        for &count in counts {
            total += (count as f64).powf(NOISE_EXPONENT);
            cumulative.push(total);
        }
        NoiseTable { cumulative }
    }

    fn sample(&self, rng: &mut impl Rng) -> usize {
        let total = *self.cumulative.last().expect("vocabulary is non-empty");
        let target = rng.gen::<f64>() * total;
        self.cumulative.partition_point(|&c| c <= target)
    }
}

/// Trains skip-gram vectors over one token stream. The window is fixed
/// (not sampled), the learning rate decays linearly per center token, and
/// all randomness comes from the seed. Returns input vectors.
pub(crate) fn train(tokens: &[String], params: &TrainingParams, seed: u64) -> TrainedVectors {
    let Vocab {
        words,
        counts,
        token_ids,
    } = build_vocab(tokens);
    let vocab_size = words.len();
    let dim = params.dimension;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut input: Vec<Vec<f64>> = (0..vocab_size)
        .map(|_| {
            (0..dim)
                .map(|_| (rng.gen::<f64>() - 0.5) / dim as f64)
                .collect()
        })
        .collect();
    let mut output: Vec<Vec<f64>> = vec![vec![0.0; dim]; vocab_size];

    let noise = NoiseTable::new(&counts);
    let total_steps = (params.epochs * token_ids.len()).max(1) as f64;
    let mut processed = 0usize;
    let mut epoch_losses = Vec::with_capacity(params.epochs);

    for _ in 0..params.epochs {
        let mut epoch_loss = 0.0;
        for i in 0..token_ids.len() {
            let lr = (params.learning_rate * (1.0 - processed as f64 / total_steps))
                .max(params.learning_rate * MIN_LR_FRACTION);
            processed += 1;

            let center = token_ids[i];
            let lo = i.saturating_sub(params.window);
            let hi = (i + params.window).min(token_ids.len() - 1);
            for j in lo..=hi {
                if j == i {
                    continue;
                }
                let context = token_ids[j];
                let mut negative_ids = Vec::with_capacity(params.negative_samples);
                for _ in 0..params.negative_samples {
                    let id = noise.sample(&mut rng);
                    if id != context {
                        negative_ids.push(id);
                    }
                }

                let neg_slices: Vec<&[f64]> =
                    negative_ids.iter().map(|&id| output[id].as_slice()).collect();
                epoch_loss += pair_loss(&input[center], &output[context], &neg_slices);
                let grads = pair_gradients(&input[center], &output[context], &neg_slices);

                for d in 0..dim {
                    input[center][d] -= lr * grads.center[d];
                }
                for d in 0..dim {
                    output[context][d] -= lr * grads.context[d];
                }
                for (k, &id) in negative_ids.iter().enumerate() {
                    for d in 0..dim {
                        output[id][d] -= lr * grads.negatives[k][d];
                    }
                }
            }
        }
        epoch_losses.push(epoch_loss);
    }

    TrainedVectors {
        words,
        vectors: input,
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
    fn log_sigmoid_is_stable_at_extremes() {
        assert!(log_sigmoid(1000.0).abs() < 1e-12);
        assert!((log_sigmoid(-1000.0) + 1000.0).abs() < 1e-9);
        assert!((log_sigmoid(0.0) + std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn pair_loss_matches_direct_formula() {
        let center = [0.3, -0.2];
        let context = [0.1, 0.4];
        let neg = [-0.5, 0.2];
        let negs: Vec<&[f64]> = vec![&neg];
        let s = |x: f64| 1.0 / (1.0 + (-x).exp());
        let expected = -(s(0.3 * 0.1 + -0.2 * 0.4)).ln() - (s(-(0.3 * -0.5 + -0.2 * 0.2))).ln();
        assert!((pair_loss(&center, &context, &negs) - expected).abs() < 1e-12);
    }

    #[test]
    fn gradients_match_finite_differences() {
        // Three-word vocabulary, dimension 2, one positive and two negatives.
        let center = vec![0.4, -0.1];
        let context = vec![-0.3, 0.25];
        let negs = [vec![0.2, 0.15], vec![-0.05, -0.4]];
        let h = 1e-5;

        let loss_at = |c: &[f64], ctx: &[f64], ns: &[Vec<f64>]| {
            let slices: Vec<&[f64]> = ns.iter().map(Vec::as_slice).collect();
            pair_loss(c, ctx, &slices)
        };
        let slices: Vec<&[f64]> = negs.iter().map(Vec::as_slice).collect();
        let grads = pair_gradients(&center, &context, &slices);

        let check = |analytic: f64, plus: f64, minus: f64| {
            let numeric = (plus - minus) / (2.0 * h);
            let rel = (analytic - numeric).abs() / analytic.abs().max(numeric.abs()).max(1e-12);
            assert!(rel < 1e-4, "analytic {analytic} vs numeric {numeric}");
        };

        for d in 0..2 {
            let mut up = center.clone();
            let mut down = center.clone();
            up[d] += h;
            down[d] -= h;
            check(
                grads.center[d],
                loss_at(&up, &context, &negs),
                loss_at(&down, &context, &negs),
            );

            let mut up = context.clone();
            let mut down = context.clone();
            up[d] += h;
            down[d] -= h;
            check(
                grads.context[d],
                loss_at(&center, &up, &negs),
                loss_at(&center, &down, &negs),
            );

            for k in 0..negs.len() {
                let mut up = negs.to_vec();
                let mut down = negs.to_vec();
                up[k][d] += h;
                down[k][d] -= h;
                check(
                    grads.negatives[k][d],
                    loss_at(&center, &context, &up),
                    loss_at(&center, &context, &down),
                );
            }
        }
    }

    #[test]
    fn training_is_deterministic() {
        let toks = tokens("the cat sat on the mat the cat ran to the mat");
        let params = TrainingParams {
            dimension: 16,
            window: 3,
            epochs: 20,
            learning_rate: 0.025,
            negative_samples: 5,
        };
        let a = train(&toks, &params, 9);
        let b = train(&toks, &params, 9);
        assert_eq!(a.words, b.words);
        assert_eq!(a.vectors, b.vectors);
        assert_eq!(a.epoch_losses, b.epoch_losses);

        let c = train(&toks, &params, 10);
        assert_ne!(a.vectors, c.vectors);
    }

    #[test]
    fn loss_decreases_over_training() {
        let toks = tokens(
            "graph nodes connect graph edges weight graph nodes rank graph edges score \
             graph nodes connect graph edges weight graph nodes rank graph edges score",
        );
        let params = TrainingParams {
            dimension: 8,
            window: 2,
            epochs: 60,
            learning_rate: 0.025,
            negative_samples: 3,
        };
        let result = train(&toks, &params, 3);
        let first = result.epoch_losses[0];
        let last = *result.epoch_losses.last().unwrap();
        assert!(
            last < first,
            "loss should fall over training: first {first}, last {last}"
        );
    }

    #[test]
    fn single_token_stream_trains_without_pairs() {
        let toks = tokens("solo");
        let params = TrainingParams::default();
        let result = train(&toks, &params, 1);
        assert_eq!(result.words, vec!["solo"]);
        assert_eq!(result.vectors.len(), 1);
        assert!(result.epoch_losses.iter().all(|&l| l == 0.0));
    }
}

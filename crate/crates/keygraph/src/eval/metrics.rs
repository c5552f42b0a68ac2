//! Precision, recall, and F1 from match counts.

use super::matching::Counts;

/// Precision/recall/F1 triple.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Metrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Metrics from one set of counts; zero denominators give zero values.
pub fn precision_recall_f1(counts: &Counts) -> Metrics {
    let tp = counts.true_positives as f64;
    let predicted = counts.true_positives + counts.false_positives;
    let relevant = counts.true_positives + counts.false_negatives;
    let precision = if predicted == 0 {
        0.0
    } else {
        tp / predicted as f64
    };
    let recall = if relevant == 0 { 0.0 } else { tp / relevant as f64 };
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    Metrics {
        precision,
        recall,
        f1,
    }
}

/// Micro-average: counts are summed over documents first, then metrics are
/// computed once from the totals.
pub fn micro_average(per_document: &[Counts]) -> (Counts, Metrics) {
    let mut totals = Counts::default();
    for counts in per_document {
        totals.add(counts);
    }
    let metrics = precision_recall_f1(&totals);
    (totals, metrics)
}

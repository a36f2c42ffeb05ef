//! Precision, recall and F1 of a result set against a ground-truth group.

use std::collections::BTreeSet;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scores {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Empty predictions score precision 0; F1 is 0 when both are 0.
pub fn metrics(predicted: &BTreeSet<String>, truth: &BTreeSet<String>) -> Scores {
    let hit = predicted.intersection(truth).count() as f64;
    let precision = if predicted.is_empty() {
        0.0
    } else {
        hit / predicted.len() as f64
    };
    let recall = if truth.is_empty() {
        0.0
    } else {
        hit / truth.len() as f64
    };
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    Scores { precision, recall, f1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ids: &[&str]) -> BTreeSet<String> {
        ids.iter().map(|i| i.to_string()).collect()
    }

    #[test]
    fn examples() {
        let t = s(&["a", "b", "c", "d"]);
        assert_eq!(
            metrics(&t, &t),
            Scores {
                precision: 1.0,
                recall: 1.0,
                f1: 1.0
            }
        );
        let m = metrics(&s(&["a", "b", "c", "d", "e"]), &t);
        assert_eq!((m.precision, m.recall), (0.8, 1.0));
        assert!((m.f1 - 1.6 / 1.8).abs() < 1e-12);
        assert_eq!(
            metrics(&s(&["x"]), &t),
            Scores {
                precision: 0.0,
                recall: 0.0,
                f1: 0.0
            }
        );
        assert_eq!(metrics(&s(&[]), &t).f1, 0.0);
    }
}

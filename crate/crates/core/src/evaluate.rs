//! Confusion matrix and per-class precision, recall and F1 against
//! rating-derived ground truth.
//!
//! Metrics with an empty denominator are `None` ("n/a"), never zero.

use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::corpus::Polarity;

/// Counts indexed `[gold][predicted]` in `Polarity::ALL` order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub cells: [[u64; 3]; 3],
}

impl ConfusionMatrix {
    pub fn get(&self, gold: Polarity, predicted: Polarity) -> u64 {
        self.cells[gold.index()][predicted.index()]
    }

    pub fn record(&mut self, gold: Polarity, predicted: Polarity) {
        self.cells[gold.index()][predicted.index()] += 1;
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().flatten().sum()
    }

    pub fn trace(&self) -> u64 {
        (0..3).map(|i| self.cells[i][i]).sum()
    }

    pub fn gold_total(&self, class: Polarity) -> u64 {
        self.cells[class.index()].iter().sum()
    }

    pub fn predicted_total(&self, class: Polarity) -> u64 {
        self.cells.iter().map(|row| row[class.index()]).sum()
    }
}

impl Add for ConfusionMatrix {
    type Output = ConfusionMatrix;

    fn add(mut self, rhs: ConfusionMatrix) -> ConfusionMatrix {
        for g in 0..3 {
            for p in 0..3 {
                self.cells[g][p] += rhs.cells[g][p];
            }
        }
        self
    }
}

pub fn confusion_matrix<I>(pairs: I) -> ConfusionMatrix
where
    I: IntoIterator<Item = (Polarity, Polarity)>,
{
    let mut m = ConfusionMatrix::default();
    for (gold, predicted) in pairs {
        m.record(gold, predicted);
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub class: Polarity,
    pub support: u64,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub total: u64,
    pub accuracy: Option<f64>,
    pub per_class: Vec<ClassMetrics>,
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

/// F1 is the harmonic mean when precision and recall are both defined; it is
/// 0 when both are 0 (no true positives).
fn f1(precision: Option<f64>, recall: Option<f64>) -> Option<f64> {
    let (p, r) = (precision?, recall?);
    Some(if p + r == 0.0 { 0.0 } else { 2.0 * p * r / (p + r) })
}

pub fn metrics(matrix: &ConfusionMatrix) -> Metrics {
    let per_class = Polarity::ALL
        .into_iter()
        .map(|c| {
            let tp = matrix.get(c, c);
            let precision = ratio(tp, matrix.predicted_total(c));
            let recall = ratio(tp, matrix.gold_total(c));
            ClassMetrics {
                class: c,
                support: matrix.gold_total(c),
                precision,
                recall,
                f1: f1(precision, recall),
            }
        })
        .collect();
    Metrics {
        total: matrix.total(),
        accuracy: ratio(matrix.trace(), matrix.total()),
        per_class,
    }
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.4}"))
}

/// Aligned text rendering of the matrix and metrics.
pub fn render_report(matrix: &ConfusionMatrix, m: &Metrics) -> String {
    let mut out = String::from("gold \\ predicted   Negative    Neutral   Positive\n");
    for g in Polarity::ALL {
        out.push_str(&format!("{:<16}", g.as_str()));
        for p in Polarity::ALL {
            out.push_str(&format!("{:>11}", matrix.get(g, p)));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "\n{:<10}{:>10}{:>10}{:>10}{:>10}\n",
        "class", "precision", "recall", "f1", "support"
    ));
    for c in &m.per_class {
        out.push_str(&format!(
            "{:<10}{:>10}{:>10}{:>10}{:>10}\n",
            c.class.as_str(),
            cell(c.precision),
            cell(c.recall),
            cell(c.f1),
            c.support
        ));
    }
    out.push_str(&format!("\naccuracy {} over {} reviews\n", cell(m.accuracy), m.total));
    out
}

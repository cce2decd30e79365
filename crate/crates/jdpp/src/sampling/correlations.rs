//! Empirical correlation moments of a sample batch against their
//! determinantal predictions.

use super::{SampleBatch, SamplingError};
use crate::opalg::OperatorMatrix;

/// First moment of the particle count in one index box.
#[derive(Debug, Clone)]
pub struct BoxMoment {
    pub nodes: Vec<usize>,
    /// Sum of the weighted kernel diagonal over the box.
    pub predicted: f64,
    pub empirical: f64,
    pub std_error: f64,
}

/// Joint moment of the counts in two disjoint boxes.
#[derive(Debug, Clone)]
pub struct PairMoment {
    /// Indices of the two boxes in the report's `boxes` list.
    pub first: usize,
    pub second: usize,
    /// Double sum of two-by-two minors of the weighted kernel.
    pub predicted: f64,
    pub empirical: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone)]
pub struct CorrelationReport {
    pub boxes: Vec<BoxMoment>,
    pub pairs: Vec<PairMoment>,
    /// Set when the batch is too small for moment estimates; the empirical
    /// fields are then meaningless.
    pub insufficient: bool,
}

fn moment(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Compare empirical count moments of `batch` over disjoint index `boxes`
/// with the determinantal predictions from the weighted kernel matrix:
/// first moments against the diagonal, pairwise product moments against
/// two-by-two minors.
pub fn estimate_correlations(
    m: &OperatorMatrix,
    batch: &SampleBatch,
    boxes: &[Vec<usize>],
) -> Result<CorrelationReport, SamplingError> {
    if batch.dim() != m.dim() {
        return Err(SamplingError::Config(format!(
            "batch was drawn on {} nodes, kernel has {}",
            batch.dim(),
            m.dim()
        )));
    }
    let mut seen = vec![false; m.dim()];
    for b in boxes {
        if b.is_empty() {
            return Err(SamplingError::Config("boxes must be nonempty".into()));
        }
        for &i in b {
            if i >= m.dim() {
                return Err(SamplingError::Config(format!("box index {i} out of range")));
            }
            if seen[i] {
                return Err(SamplingError::Config(format!("boxes overlap at index {i}")));
            }
            seen[i] = true;
        }
    }
    let insufficient = batch.len() < 2;

    let counts: Vec<Vec<f64>> = boxes
        .iter()
        .map(|b| {
            batch
                .samples()
                .iter()
                .map(|s| b.iter().filter(|&&i| s.contains(i)).count() as f64)
                .collect()
        })
        .collect();

    let mut box_moments = Vec::with_capacity(boxes.len());
    for (b, c) in boxes.iter().zip(&counts) {
        let predicted = b.iter().map(|&i| m.entry(i, i)).sum();
        let (empirical, std_error) =
            if insufficient { (f64::NAN, f64::NAN) } else { moment(c) };
        box_moments.push(BoxMoment { nodes: b.clone(), predicted, empirical, std_error });
    }

    let mut pairs = Vec::new();
    for a in 0..boxes.len() {
        for b in a + 1..boxes.len() {
            let mut predicted = 0.0;
            for &i in &boxes[a] {
                for &j in &boxes[b] {
                    predicted += m.entry(i, i) * m.entry(j, j) - m.entry(i, j) * m.entry(j, i);
                }
            }
            let (empirical, std_error) = if insufficient {
                (f64::NAN, f64::NAN)
            } else {
                let products: Vec<f64> =
                    counts[a].iter().zip(&counts[b]).map(|(x, y)| x * y).collect();
                moment(&products)
            };
            pairs.push(PairMoment { first: a, second: b, predicted, empirical, std_error });
        }
    }

    Ok(CorrelationReport { boxes: box_moments, pairs, insufficient })
}

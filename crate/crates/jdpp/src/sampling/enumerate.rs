//! Brute-force enumeration of the signed ensemble on small grids.

use std::collections::HashMap;

use nalgebra::DMatrix;

use super::batch::SampleBatch;
use super::{Configuration, SamplingError};
use crate::opalg::{fredholm_det, OperatorMatrix};

/// Largest grid the exact enumeration will accept.
pub const MAX_ENUMERATION_NODES: usize = 16;

/// Exact distribution of the signed ensemble: `P(S) = det(L_S) / det(1 + L)`
/// over all subsets `S` of the grid, returning only the charged ones
/// (`P > 0`).  With the sign-block structure of `L`, every subset with
/// unequal counts on the two half-lines has a singular submatrix, so the
/// support is exactly the balanced configurations.
pub fn enumerate_signed_ensemble(
    l: &OperatorMatrix,
) -> Result<Vec<(Configuration, f64)>, SamplingError> {
    let n = l.dim();
    if n > MAX_ENUMERATION_NODES {
        return Err(SamplingError::Size(format!(
            "enumeration over 2^{n} subsets refused; at most {MAX_ENUMERATION_NODES} nodes"
        )));
    }
    let z = fredholm_det(l);
    if !(z > 0.0) {
        return Err(SamplingError::Spectrum(format!(
            "det(1 + L) = {z}; the ensemble is not normalizable"
        )));
    }
    let m = l.matrix();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let indices: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let det = if indices.is_empty() {
            1.0
        } else {
            DMatrix::from_fn(indices.len(), indices.len(), |r, c| {
                m[(indices[r], indices[c])]
            })
            .lu()
            .determinant()
        };
        let p = det / z;
        if p.abs() > 1e-15 {
            if p < 0.0 {
                return Err(SamplingError::Spectrum(format!(
                    "negative subset probability {p} for {indices:?}"
                )));
            }
            out.push((Configuration { indices }, p));
        }
    }
    Ok(out)
}

/// Total-variation distance between the empirical distribution of a batch
/// and an enumerated exact distribution.
pub fn total_variation(samples: &SampleBatch, exact: &[(Configuration, f64)]) -> f64 {
    let n = samples.len() as f64;
    let mut counts: HashMap<&Configuration, usize> = HashMap::new();
    for s in samples.samples() {
        *counts.entry(s).or_insert(0) += 1;
    }
    let exact_map: HashMap<&Configuration, f64> =
        exact.iter().map(|(c, p)| (c, *p)).collect();
    let mut tv = 0.0;
    for (config, count) in &counts {
        let p = exact_map.get(config).copied().unwrap_or(0.0);
        tv += (*count as f64 / n - p).abs();
    }
    for (config, p) in exact {
        if !counts.contains_key(config) {
            tv += p;
        }
    }
    tv / 2.0
}

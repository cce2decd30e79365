//! Balanced-rigidity experiment: the signed particle count inside a window
//! is predicted, with accuracy tending to one, by the exterior part of a
//! mollified balanced statistic.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::twisted::{balanced_mean, balanced_variance_difference};
use super::{Mollifier, StatisticsError};
use crate::kernels::{transform_to_infinity, whittaker_kernel};
use crate::opalg::{build_grid, discretize, Grid, GridSpec, OperatorMatrix};
use crate::sampling::DualSampler;
use crate::specfun::{AccuracySpec, KernelParams};

#[derive(Debug, Clone)]
pub struct RigidityConfig {
    /// Kernel parameter; the pair `(z, conj z)` is used.
    pub z: Complex64,
    pub grid: GridSpec,
    /// Mollifier sharpness levels, typically increasing.
    pub levels: Vec<u32>,
    /// Radius of the counting window `[-window, window]`; the mollifier
    /// plateau is sized to cover it.
    pub window: f64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for RigidityConfig {
    fn default() -> Self {
        Self {
            z: Complex64::new(0.25, 0.4),
            grid: GridSpec::GaussLegendrePanels {
                panels_per_side: 12,
                nodes_per_panel: 8,
                delta: 0.02,
                outer: 40.0,
            },
            levels: vec![1, 2, 4, 8],
            window: 1.0,
            samples: 1000,
            seed: 20,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RigidityLevel {
    pub level: u32,
    /// Exact variance of the mollified balanced statistic (difference form
    /// on the projected operator).
    pub variance_exact: f64,
    /// Empirical variance of the statistic across the sampled batch.
    pub variance_sampled: f64,
    /// Exact mean of the statistic; nearly zero by balance.
    pub mean_exact: f64,
    /// Fraction of samples whose signed count inside the window equals the
    /// prediction made from the exterior points alone.
    pub accuracy: f64,
}

#[derive(Debug, Clone)]
pub struct RigidityReport {
    pub levels: Vec<RigidityLevel>,
    /// Eigenvalues the sampler clipped into `[0, 1]` before rounding.
    pub clipped_eigenvalues: usize,
    /// Radius of the counting window.
    pub window: f64,
}

/// Correlation matrix consistent with a (possibly spectrally modified)
/// symmetrized operator: undo the row signs and the negative-side identity.
fn correlation_from_hat(grid: &Grid, hat: &DMatrix<f64>) -> DMatrix<f64> {
    let n = grid.len();
    DMatrix::from_fn(n, n, |i, j| {
        let chi = if i == j && i < grid.n_neg() { 1.0 } else { 0.0 };
        grid.sign(i) * (hat[(i, j)] - chi)
    })
}

/// Nearest integer, with exact halves rounded toward zero.
fn round_half_toward_zero(v: f64) -> i64 {
    let down = v.trunc();
    if (v - down).abs() == 0.5 { down as i64 } else { v.round() as i64 }
}

/// Run the experiment: discretize the infinity-inverted kernel for
/// `(z, conj z)`, round its symmetrized operator to a projection, and for
/// each sharpness level measure how well the exterior part of the mollified
/// statistic predicts the signed count inside the window.
pub fn run_rigidity(cfg: &RigidityConfig) -> Result<RigidityReport, StatisticsError> {
    if cfg.levels.is_empty() {
        return Err(StatisticsError::Config("at least one sharpness level".into()));
    }
    if cfg.samples < 2 {
        return Err(StatisticsError::Config("at least two samples".into()));
    }
    if !(cfg.window > 0.0) {
        return Err(StatisticsError::Config("window radius must be positive".into()));
    }
    let params = KernelParams::new(cfg.z, cfg.z.conj())?;
    let acc = AccuracySpec::default();
    let kernel = transform_to_infinity(&whittaker_kernel(&params, &acc));
    let grid = Arc::new(build_grid(&cfg.grid)?);
    let m = discretize(&kernel, Arc::clone(&grid))?;

    let sampler = DualSampler::from_correlation(&m)?.rounded_to_projection();
    let clipped = sampler.clipped();
    let k_eff = OperatorMatrix::from_weighted(
        correlation_from_hat(&grid, &sampler.hat_matrix()),
        Arc::clone(&grid),
    )?;

    let batch = sampler.sample_batch(cfg.seed, cfg.samples);
    let interior: Vec<bool> = grid.nodes().iter().map(|&x| x.abs() <= cfg.window).collect();

    let mut levels = Vec::with_capacity(cfg.levels.len());
    for &level in &cfg.levels {
        let phi = Mollifier::new(level, cfg.window)?;
        let f: Vec<f64> = grid
            .nodes()
            .iter()
            .map(|&x| phi.eval(x))
            .collect::<Result<_, _>>()?;
        let variance_exact = balanced_variance_difference(&k_eff, &f)?;
        let mean_exact = balanced_mean(&k_eff, &f)?;

        let mut stats = Vec::with_capacity(batch.len());
        let mut hits = 0usize;
        for sample in batch.samples() {
            let mut statistic = 0.0;
            let mut exterior_part = 0.0;
            let mut signed_count = 0i64;
            for &i in sample.indices() {
                let term = grid.sign(i) * f[i];
                statistic += term;
                if interior[i] {
                    signed_count += grid.sign(i) as i64;
                } else {
                    exterior_part += term;
                }
            }
            stats.push(statistic);
            if round_half_toward_zero(mean_exact - exterior_part) == signed_count {
                hits += 1;
            }
        }
        let n = stats.len() as f64;
        let mean = stats.iter().sum::<f64>() / n;
        let variance_sampled =
            stats.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
        let accuracy = hits as f64 / n;

        levels.push(RigidityLevel {
            level,
            variance_exact,
            variance_sampled,
            mean_exact,
            accuracy,
        });
    }
    Ok(RigidityReport { levels, clipped_eigenvalues: clipped, window: cfg.window })
}

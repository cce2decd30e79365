//! Origin-regularized functionals.
//!
//! Additive functionals of these ensembles are only conditionally defined:
//! the one-point density blows up like `1/|x|` at the origin, and only the
//! signed combination of the two half-lines converges as the exclusion
//! radius shrinks.  Quantities are therefore evaluated along a fixed
//! schedule of shrinking cutoffs and checked for Cauchy behavior.

use super::{twisted::balanced_mean, StatisticsError};
use crate::kernels::whittaker_kernel;
use crate::opalg::{build_grid, discretize, GridSpec, OperatorMatrix};
use crate::sampling::Configuration;
use crate::specfun::{AccuracySpec, KernelParams};

/// Exclusion radii used for the convergence check, largest first.
pub const DELTA_SCHEDULE: [f64; 4] = [0.1, 0.05, 0.02, 0.01];

/// Values of a functional along the cutoff schedule.
#[derive(Debug, Clone)]
pub struct RegularizedValue {
    pub deltas: Vec<f64>,
    pub values: Vec<f64>,
    /// `false` when the final increment dominates every earlier one by a
    /// factor `>= 1.5`, signaling divergence rather than convergence.
    /// Marginal (e.g. logarithmic) growth is not detected by this flag.
    pub cauchy: bool,
}

impl RegularizedValue {
    /// The value at the smallest cutoff.
    pub fn value(&self) -> f64 {
        *self.values.last().expect("schedule is nonempty")
    }
}

/// Replace the exclusion radius of a grid recipe.
pub fn with_delta(spec: &GridSpec, delta: f64) -> Result<GridSpec, StatisticsError> {
    match spec {
        GridSpec::Uniform { nodes_per_side, outer, .. } => Ok(GridSpec::Uniform {
            nodes_per_side: *nodes_per_side,
            delta,
            outer: *outer,
        }),
        GridSpec::GaussLegendrePanels { panels_per_side, nodes_per_panel, outer, .. } => {
            Ok(GridSpec::GaussLegendrePanels {
                panels_per_side: *panels_per_side,
                nodes_per_panel: *nodes_per_panel,
                delta,
                outer: *outer,
            })
        }
        GridSpec::Explicit { .. } => Err(StatisticsError::Config(
            "explicit grids have no adjustable exclusion radius".into(),
        )),
    }
}

/// Evaluate `f(delta)` along [`DELTA_SCHEDULE`] and flag Cauchy behavior of
/// the increments.
pub fn regularized_limit(
    mut evaluate: impl FnMut(f64) -> Result<f64, StatisticsError>,
) -> Result<RegularizedValue, StatisticsError> {
    let deltas: Vec<f64> = DELTA_SCHEDULE.to_vec();
    let mut values = Vec::with_capacity(deltas.len());
    for &d in &deltas {
        values.push(evaluate(d)?);
    }
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(1.0);
    let diffs: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    // Discrete grids make individual increments noisy (a cutoff shell may be
    // nearly empty), so pairwise growth is an unreliable signal.  Power-law
    // divergence always ends with its largest step: flag only when the final
    // increment dominates all earlier ones and is not numerically negligible.
    let floor = 1e-12 * scale;
    let (last, earlier) = diffs.split_last().expect("schedule has at least two radii");
    let head = earlier.iter().fold(floor, |m, &d| m.max(d));
    let cauchy = *last < 1.5 * head;
    Ok(RegularizedValue { deltas, values, cauchy })
}

/// Centered balanced statistic of one sampled configuration along the
/// cutoff schedule: at every radius, the signed sum of `f` over the
/// configuration's points outside the cutoff minus its expectation over the
/// same nodes.  Linear in `f` exactly, at every cutoff.
pub fn regularized_centered_statistic(
    k: &OperatorMatrix,
    sample: &Configuration,
    f: &[f64],
) -> Result<RegularizedValue, StatisticsError> {
    if f.len() != k.dim() {
        return Err(StatisticsError::Config(format!(
            "statistic has {} values for a {}-node grid",
            f.len(),
            k.dim()
        )));
    }
    if sample.indices().iter().any(|&i| i >= k.dim()) {
        return Err(StatisticsError::Config("sample index out of range".into()));
    }
    let grid = k.grid();
    regularized_limit(|delta| {
        let mut value = 0.0;
        for &i in sample.indices() {
            if grid.node(i).abs() >= delta {
                value += grid.sign(i) * f[i];
            }
        }
        for i in 0..k.dim() {
            if grid.node(i).abs() >= delta {
                value -= grid.sign(i) * f[i] * k.entry(i, i);
            }
        }
        Ok(value)
    })
}

/// Regularized mean of the balanced statistic `sum sgn(x) f(x)` for the
/// kernel of `params`, evaluated on `spec` with the schedule's cutoffs.
/// The per-side singular masses diverge like `ln(1/delta)` individually and
/// cancel in the signed sum, which is what this limit realizes.
pub fn regularized_balanced_mean(
    params: &KernelParams<f64>,
    acc: &AccuracySpec<f64>,
    spec: &GridSpec,
    f: impl Fn(f64) -> f64,
) -> Result<RegularizedValue, StatisticsError> {
    let kernel = whittaker_kernel(params, acc);
    regularized_limit(|delta| {
        let grid = std::sync::Arc::new(build_grid(&with_delta(spec, delta)?)?);
        let m = discretize(&kernel, std::sync::Arc::clone(&grid))?;
        let values: Vec<f64> = grid.nodes().iter().map(|&x| f(x)).collect();
        balanced_mean(&m, &values)
    })
}

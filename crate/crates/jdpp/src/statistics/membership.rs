//! Diagnostics for whether a statistic is regularizable against a kernel.
//!
//! A function is admissible for the regularized (centered) statistic when
//! its difference-form variance seminorm is finite, its second moment
//! against the kernel diagonal is finite outside every truncation radius,
//! and the coupling between the excluded zone and the rest vanishes as the
//! radius shrinks.  A stricter class asks for support bounded away from the
//! singularity together with the finite second moment.

use super::regularized::DELTA_SCHEDULE;
use super::twisted::balanced_variance_difference;
use super::StatisticsError;
use crate::opalg::OperatorMatrix;

#[derive(Debug, Clone)]
pub struct MembershipReport {
    /// Difference-form variance seminorm of the function.
    pub variance_seminorm: f64,
    /// Per truncation radius: second moment of the function against the
    /// kernel diagonal outside that radius.
    pub second_moments: Vec<(f64, f64)>,
    /// Per truncation radius: squared-kernel coupling between the excluded
    /// zone and its complement, weighted by the function.
    pub tail_coupling: Vec<(f64, f64)>,
    /// Smallest `|x|` carrying a nonzero function value; infinite for the
    /// zero function.
    pub support_radius: f64,
    /// Finite seminorm, finite second moments, and non-increasing tail
    /// coupling across the schedule.
    pub in_regularizable_class: bool,
    /// Support bounded away from the origin and finite second moment.
    pub in_compact_support_class: bool,
}

/// Evaluate the admissibility diagnostics of `f` against the weighted
/// kernel matrix, across the default truncation schedule.
pub fn membership_diagnostics(
    k: &OperatorMatrix,
    f: &[f64],
) -> Result<MembershipReport, StatisticsError> {
    if f.len() != k.dim() {
        return Err(StatisticsError::Config(format!(
            "function has {} values for a {}-node grid",
            f.len(),
            k.dim()
        )));
    }
    let grid = k.grid();
    let n = k.dim();
    let variance_seminorm = balanced_variance_difference(k, f)?;

    let mut second_moments = Vec::with_capacity(DELTA_SCHEDULE.len());
    let mut tail_coupling = Vec::with_capacity(DELTA_SCHEDULE.len());
    for delta in DELTA_SCHEDULE {
        let mut moment = 0.0;
        for i in 0..n {
            if grid.node(i).abs() >= delta {
                moment += f[i] * f[i] * k.entry(i, i);
            }
        }
        second_moments.push((delta, moment));

        let mut coupling = 0.0;
        for i in 0..n {
            if grid.node(i).abs() >= delta {
                continue;
            }
            for j in 0..n {
                if grid.node(j).abs() >= delta {
                    let m_ij = k.entry(i, j);
                    coupling += f[i] * f[i] * m_ij * m_ij;
                }
            }
        }
        tail_coupling.push((delta, coupling));
    }

    let support_radius = (0..n)
        .filter(|&i| f[i] != 0.0)
        .map(|i| grid.node(i).abs())
        .fold(f64::INFINITY, f64::min);

    let moments_finite = second_moments.iter().all(|(_, v)| v.is_finite());
    let coupling_shrinks = tail_coupling.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-15);
    let in_regularizable_class =
        variance_seminorm.is_finite() && moments_finite && coupling_shrinks;
    let in_compact_support_class = support_radius > 0.0
        && second_moments.first().map_or(true, |(_, v)| v.is_finite());

    Ok(MembershipReport {
        variance_seminorm,
        second_moments,
        tail_coupling,
        support_radius,
        in_regularizable_class,
        in_compact_support_class,
    })
}

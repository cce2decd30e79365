//! Exact first and second moments of linear statistics.
//!
//! Two statistics appear throughout: the plain sum `S_f = sum_{x in X} f(x)`
//! and the balanced sum `S-bar_f = sum_{x in X} sgn(x) f(x)`.  Under the
//! particle-hole dual process the plain statistic acquires a sign twist
//! (`f -> sgn * f`) while the balanced one stays plain, which is why the
//! balanced moments below carry no signs.

use super::StatisticsError;
use crate::opalg::{Grid, OperatorMatrix};
use crate::sampling::Configuration;

fn check_len(k: &OperatorMatrix, f: &[f64]) -> Result<(), StatisticsError> {
    if f.len() != k.dim() {
        return Err(StatisticsError::Config(format!(
            "statistic has {} values for a {}-node grid",
            f.len(),
            k.dim()
        )));
    }
    Ok(())
}

/// Balanced sum `sum_{x in X} sgn(x) f(x)` of one sampled configuration.
pub fn twisted_statistic(
    grid: &Grid,
    sample: &Configuration,
    f: &[f64],
) -> Result<f64, StatisticsError> {
    if f.len() != grid.len() {
        return Err(StatisticsError::Config(format!(
            "statistic has {} values for a {}-node grid",
            f.len(),
            grid.len()
        )));
    }
    let mut sum = 0.0;
    for &i in sample.indices() {
        if i >= grid.len() {
            return Err(StatisticsError::Config(format!("sample index {i} out of range")));
        }
        sum += grid.sign(i) * f[i];
    }
    Ok(sum)
}

/// `E[sum_{x in X} f(x)] = sum_i f_i M_ii`.
pub fn additive_mean(k: &OperatorMatrix, f: &[f64]) -> Result<f64, StatisticsError> {
    check_len(k, f)?;
    Ok((0..k.dim()).map(|i| f[i] * k.entry(i, i)).sum())
}

/// Exact variance of the plain sum, from the first two correlation
/// functions; the cross term carries the sign twist.
pub fn additive_variance(k: &OperatorMatrix, f: &[f64]) -> Result<f64, StatisticsError> {
    check_len(k, f)?;
    let grid = k.grid();
    let n = k.dim();
    let mut var = 0.0;
    for i in 0..n {
        let m_ii = k.entry(i, i);
        var += f[i] * f[i] * m_ii * (1.0 - m_ii);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let m_ij = k.entry(i, j);
                var -= grid.sign(i) * f[i] * grid.sign(j) * f[j] * m_ij * m_ij;
            }
        }
    }
    Ok(var)
}

/// `E[sum_{x in X} sgn(x) f(x)] = sum_i sgn_i f_i M_ii`.
pub fn balanced_mean(k: &OperatorMatrix, f: &[f64]) -> Result<f64, StatisticsError> {
    check_len(k, f)?;
    let grid = k.grid();
    Ok((0..k.dim()).map(|i| grid.sign(i) * f[i] * k.entry(i, i)).sum())
}

/// Exact variance of the balanced sum; the two sign twists cancel.
pub fn balanced_variance(k: &OperatorMatrix, f: &[f64]) -> Result<f64, StatisticsError> {
    check_len(k, f)?;
    let n = k.dim();
    let mut var = 0.0;
    for i in 0..n {
        let m_ii = k.entry(i, i);
        var += f[i] * f[i] * m_ii * (1.0 - m_ii);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let m_ij = k.entry(i, j);
                var -= f[i] * f[j] * m_ij * m_ij;
            }
        }
    }
    Ok(var)
}

/// Difference form of the balanced variance,
/// `1/2 sum_{i != j} (f_i - f_j)^2 M_ij^2`.  Agrees with
/// [`balanced_variance`] exactly when the symmetrized operator reproduces
/// its own diagonal (`sum_j hat_ij^2 = hat_ii`, true for projections); for
/// other operators the two deliberately differ.
pub fn balanced_variance_difference(
    k: &OperatorMatrix,
    f: &[f64],
) -> Result<f64, StatisticsError> {
    check_len(k, f)?;
    let n = k.dim();
    let mut var = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let d = f[i] - f[j];
                let m_ij = k.entry(i, j);
                var += d * d * m_ij * m_ij;
            }
        }
    }
    Ok(0.5 * var)
}

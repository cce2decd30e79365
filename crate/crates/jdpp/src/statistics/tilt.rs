//! Multiplicative functionals and the exponential-tilt normalizer.

use nalgebra::DMatrix;

use super::StatisticsError;
use crate::opalg::OperatorMatrix;
use crate::sampling::Configuration;

fn check_len(k: &OperatorMatrix, h: &[f64]) -> Result<(), StatisticsError> {
    if h.len() != k.dim() {
        return Err(StatisticsError::Config(format!(
            "function has {} values for a {}-node grid",
            h.len(),
            k.dim()
        )));
    }
    Ok(())
}

/// `E[prod_{x in X} h(x)] = det(I + D_{h-1} M)` for the ensemble with
/// correlation matrix `M`.
pub fn multiplicative_expectation(
    k: &OperatorMatrix,
    h: &[f64],
) -> Result<f64, StatisticsError> {
    check_len(k, h)?;
    let n = k.dim();
    let m = k.matrix();
    let mut b = DMatrix::identity(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] += (h[i] - 1.0) * m[(i, j)];
        }
    }
    Ok(b.lu().determinant())
}

/// Log-square statistic of one configuration, `sum_{i in X} ln h_i^2`;
/// `-inf` when the configuration contains a zero of `h`.
pub fn s_bar(config: &Configuration, h: &[f64]) -> Result<f64, StatisticsError> {
    let mut total = 0.0;
    for &i in config.indices() {
        let hi = *h.get(i).ok_or_else(|| {
            StatisticsError::Config(format!("node index {i} beyond the function table"))
        })?;
        if hi < 0.0 {
            return Err(StatisticsError::Config(format!("h must be nonnegative, got {hi}")));
        }
        total += 2.0 * hi.ln();
    }
    Ok(total)
}

/// Mean of the log-square statistic, `sum_i ln(h_i^2) M_ii`, skipping the
/// zeros of `h` (configurations through them carry no tilted mass).
pub fn s_bar_mean(k: &OperatorMatrix, h: &[f64]) -> Result<f64, StatisticsError> {
    check_len(k, h)?;
    let mut total = 0.0;
    for i in 0..k.dim() {
        if h[i] < 0.0 {
            return Err(StatisticsError::Config(format!("h must be nonnegative, got {}", h[i])));
        }
        if h[i] > 0.0 {
            total += 2.0 * h[i].ln() * k.entry(i, i);
        }
    }
    Ok(total)
}

/// Normalizer of the exponential tilt by `h^2`:
/// `Z = E[e^{S - E S}] = det(I + (h^2 - 1) M) * exp(-sum ln(h_i^2) M_ii)`
/// with `S` the log-square statistic.  Convexity of `exp` forces `Z >= 1`
/// for every admissible `h`; values below 1 indicate a broken correlation
/// matrix.
pub fn tilt_normalizer(k: &OperatorMatrix, h: &[f64]) -> Result<f64, StatisticsError> {
    check_len(k, h)?;
    let h2: Vec<f64> = h.iter().map(|&v| v * v).collect();
    let det = multiplicative_expectation(k, &h2)?;
    Ok(det * (-s_bar_mean(k, h)?).exp())
}

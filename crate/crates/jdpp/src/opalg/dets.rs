//! Determinants, block norms, and the `L <-> K` maps.

use super::matrix::OperatorMatrix;
use super::OpalgError;
use nalgebra::{DMatrix, DMatrixView};

/// Condition-number ceiling beyond which solves are refused.
const CONDITION_LIMIT: f64 = 1e12;

/// Fredholm determinant `det(1 + M)` by pivoted LU factorization.  On the
/// trace-class-plus-Hilbert-Schmidt matrix algebra this is the unique
/// multiplicative extension of the classical determinant, and for finite
/// matrices it is just the ordinary determinant.
pub fn fredholm_det(m: &OperatorMatrix) -> f64 {
    let n = m.dim();
    (DMatrix::identity(n, n) + m.matrix()).lu().determinant()
}

/// Stable log-determinant: returns `(sign, log |det(1 + M)|)`.
pub fn fredholm_log_det(m: &OperatorMatrix) -> (f64, f64) {
    let n = m.dim();
    let lu = (DMatrix::identity(n, n) + m.matrix()).lu();
    let mut sign = lu.p().determinant::<f64>();
    let mut log_abs = 0.0;
    let u = lu.u();
    for i in 0..n {
        let d = u[(i, i)];
        if d == 0.0 {
            return (0.0, f64::NEG_INFINITY);
        }
        if d < 0.0 {
            sign = -sign;
        }
        log_abs += d.abs().ln();
    }
    (sign, log_abs)
}

fn trace_norm(b: DMatrixView<'_, f64>) -> f64 {
    if b.nrows() == 0 || b.ncols() == 0 {
        return 0.0;
    }
    b.clone_owned().svd(false, false).singular_values.iter().sum()
}

fn hilbert_schmidt_norm(b: DMatrixView<'_, f64>) -> f64 {
    b.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Mixed block norm: trace norms of the same-sign blocks plus
/// Hilbert-Schmidt norms of the off-sign blocks.
pub fn l12_norm(m: &OperatorMatrix) -> f64 {
    trace_norm(m.block_pp())
        + trace_norm(m.block_mm())
        + hilbert_schmidt_norm(m.block_pm())
        + hilbert_schmidt_norm(m.block_mp())
}

pub(super) fn condition_number(a: &DMatrix<f64>) -> f64 {
    let sv = a.clone().svd(false, false).singular_values;
    let smax = sv.iter().copied().fold(0.0_f64, f64::max);
    let smin = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if smin <= 0.0 {
        f64::INFINITY
    } else {
        smax / smin
    }
}

/// Correlation matrix of an `L`-ensemble: `K = L (1 + L)^{-1}`.  Returns the
/// matrix together with the condition number of `1 + L`.
pub fn k_from_l(l: &OperatorMatrix) -> Result<(OperatorMatrix, f64), OpalgError> {
    let n = l.dim();
    let a = DMatrix::identity(n, n) + l.matrix();
    let cond = condition_number(&a);
    if !(cond <= CONDITION_LIMIT) {
        return Err(OpalgError::Singular(format!(
            "1 + L has condition number {cond:.3e} (limit {CONDITION_LIMIT:.0e})"
        )));
    }
    let inv = a
        .try_inverse()
        .ok_or_else(|| OpalgError::Singular("1 + L is not invertible".into()))?;
    Ok((l.with_matrix(l.matrix() * inv), cond))
}

/// Correlation matrix after conjugating the ensemble by a bounded diagonal
/// function: `K_g = g K (1 + (g^2 - 1) K)^{-1} g`, which equals the `L -> K`
/// map applied to `g L g`.
pub fn k_conjugated(k: &OperatorMatrix, g: &[f64]) -> Result<(OperatorMatrix, f64), OpalgError> {
    let n = k.dim();
    if g.len() != n {
        return Err(OpalgError::Config(format!(
            "conjugation function has {} values for {} nodes",
            g.len(),
            n
        )));
    }
    let mut b = DMatrix::identity(n, n);
    for i in 0..n {
        let f = g[i] * g[i] - 1.0;
        for j in 0..n {
            b[(i, j)] += f * k.entry(i, j);
        }
    }
    let cond = condition_number(&b);
    if !(cond <= CONDITION_LIMIT) {
        return Err(OpalgError::Singular(format!(
            "1 + (g^2 - 1) K has condition number {cond:.3e} (limit {CONDITION_LIMIT:.0e})"
        )));
    }
    let inv = b
        .try_inverse()
        .ok_or_else(|| OpalgError::Singular("1 + (g^2 - 1) K is not invertible".into()))?;
    let mut prod = k.matrix() * inv;
    for i in 0..n {
        for j in 0..n {
            prod[(i, j)] *= g[i] * g[j];
        }
    }
    Ok((k.with_matrix(prod), cond))
}

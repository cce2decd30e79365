//! Weighted Nyström matrices with sign-block structure.

use super::grid::Grid;
use super::OpalgError;
use crate::kernels::KernelFn;
use nalgebra::{DMatrix, DMatrixView};
use rayon::prelude::*;
use std::sync::Arc;

/// Dense weighted discretization of a kernel on a signed grid:
/// `M_ij = sqrt(w_i w_j) K(x_i, x_j)`.
///
/// Immutable after construction; operations return new matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    m: DMatrix<f64>,
    grid: Arc<Grid>,
}

impl OperatorMatrix {
    /// Wrap an already-weighted matrix.
    pub fn from_weighted(m: DMatrix<f64>, grid: Arc<Grid>) -> Result<Self, OpalgError> {
        if m.nrows() != grid.len() || m.ncols() != grid.len() {
            return Err(OpalgError::Config(format!(
                "matrix is {}x{} but the grid has {} nodes",
                m.nrows(),
                m.ncols(),
                grid.len()
            )));
        }
        Ok(Self { m, grid })
    }

    /// The zero operator on a grid.
    pub fn zeros(grid: Arc<Grid>) -> Self {
        let n = grid.len();
        Self { m: DMatrix::zeros(n, n), grid }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    /// Weighted entry `M_ij`.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    /// Unweighted kernel value `K(x_i, x_j) = M_ij / sqrt(w_i w_j)`.
    pub fn kernel_value(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)] / (self.grid.weight(i) * self.grid.weight(j)).sqrt()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    /// Replace the matrix, keeping the grid.
    pub fn with_matrix(&self, m: DMatrix<f64>) -> Self {
        assert_eq!(m.nrows(), self.dim());
        assert_eq!(m.ncols(), self.dim());
        Self { m, grid: Arc::clone(&self.grid) }
    }

    /// `++` block (positive rows and columns).
    pub fn block_pp(&self) -> DMatrixView<'_, f64> {
        let k = self.grid.n_neg();
        let p = self.dim() - k;
        self.m.view((k, k), (p, p))
    }

    /// `+-` block (positive rows, negative columns).
    pub fn block_pm(&self) -> DMatrixView<'_, f64> {
        let k = self.grid.n_neg();
        let p = self.dim() - k;
        self.m.view((k, 0), (p, k))
    }

    /// `-+` block (negative rows, positive columns).
    pub fn block_mp(&self) -> DMatrixView<'_, f64> {
        let k = self.grid.n_neg();
        let p = self.dim() - k;
        self.m.view((0, k), (k, p))
    }

    /// `--` block (negative rows and columns).
    pub fn block_mm(&self) -> DMatrixView<'_, f64> {
        let k = self.grid.n_neg();
        self.m.view((0, 0), (k, k))
    }

    /// Largest deviation from J-Hermitian block symmetry: the same-sign
    /// blocks must be symmetric and the off-sign blocks antisymmetric
    /// transposes of each other.
    pub fn j_symmetry_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        let pp = self.block_pp();
        for i in 0..pp.nrows() {
            for j in 0..i {
                r = r.max((pp[(i, j)] - pp[(j, i)]).abs());
            }
        }
        let mm = self.block_mm();
        for i in 0..mm.nrows() {
            for j in 0..i {
                r = r.max((mm[(i, j)] - mm[(j, i)]).abs());
            }
        }
        let pm = self.block_pm();
        let mp = self.block_mp();
        for i in 0..pm.nrows() {
            for j in 0..pm.ncols() {
                r = r.max((pm[(i, j)] + mp[(j, i)]).abs());
            }
        }
        r
    }
}

/// Nyström discretization of a kernel over a grid.  The diagonal comes from
/// the kernel's dedicated diagonal evaluator.
pub fn discretize(k: &KernelFn<f64>, grid: Arc<Grid>) -> Result<OperatorMatrix, OpalgError> {
    let n = grid.len();
    // Rows are independent, so they can be filled in parallel; every entry
    // is a fixed function of (i, j), keeping the result identical for any
    // thread count.
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let xi = grid.node(i);
            let wi = grid.weight(i);
            (0..n)
                .map(|j| {
                    let v = if i == j { k.diag(xi)? } else { k.eval(xi, grid.node(j))? };
                    Ok((wi * grid.weight(j)).sqrt() * v)
                })
                .collect::<Result<Vec<f64>, OpalgError>>()
        })
        .collect::<Result<_, _>>()?;
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    Ok(OperatorMatrix { m, grid })
}

/// The Hermitian dual `hat K = sgn * K + chi_-`: rows at negative nodes are
/// negated and the negative-side diagonal is shifted by one.  For `K`
/// produced by the `L -> K` map of an integrable kernel this matrix is
/// symmetric and, in the continuum limit, an orthogonal projection.
pub fn hat_k(k: &OperatorMatrix) -> OperatorMatrix {
    let mut m = k.m.clone();
    for i in k.grid.negative_range() {
        for j in 0..m.ncols() {
            m[(i, j)] = -m[(i, j)];
        }
        m[(i, i)] += 1.0;
    }
    k.with_matrix(m)
}

/// Compression `K^Delta = chi_Delta K chi_Delta`: zero outside the selected
/// rows and columns.
pub fn compress(k: &OperatorMatrix, subset: &[usize]) -> Result<OperatorMatrix, OpalgError> {
    if subset.is_empty() {
        return Err(OpalgError::Config("compression subset must be nonempty".into()));
    }
    if subset.iter().any(|&i| i >= k.dim()) {
        return Err(OpalgError::Config("compression subset index out of range".into()));
    }
    let mut keep = vec![false; k.dim()];
    for &i in subset {
        keep[i] = true;
    }
    let mut m = k.m.clone();
    for i in 0..k.dim() {
        for j in 0..k.dim() {
            if !keep[i] || !keep[j] {
                m[(i, j)] = 0.0;
            }
        }
    }
    Ok(k.with_matrix(m))
}

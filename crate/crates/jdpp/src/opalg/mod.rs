//! Discretized operator algebra.
//!
//! Kernels become dense matrices through symmetrically weighted Nyström
//! discretization, `M_ij = sqrt(w_i w_j) K(x_i, x_j)`, which preserves the
//! sign-block structure and makes `det(1 + M)` the quadrature approximation
//! of the Fredholm determinant.  On top of that sit the trace/Hilbert-Schmidt
//! block norms, the `L <-> K` maps, compressions, diagonal conjugations,
//! rank-one Palm updates, and the integrable-system solver for the resolvent
//! functions.

mod dets;
mod grid;
mod iiks;
mod io;
mod matrix;
mod palm;

pub use dets::{fredholm_det, fredholm_log_det, k_conjugated, k_from_l, l12_norm};
pub use grid::{build_grid, Grid, GridScheme, GridSpec};
pub use iiks::{iiks_solve, IiksSolution};
pub use io::{export_csv, load_matrix, save_matrix};
pub use matrix::{discretize, hat_k, compress, OperatorMatrix};
pub use palm::{
    palm_iterate, palm_refinement_residual, palm_update, snap_anchor, verify_palm_identity,
    PalmIdentityReport, PalmUpdateStatus,
};

use crate::kernels::KernelError;

/// Errors raised by the operator layer.
#[derive(Debug, thiserror::Error)]
pub enum OpalgError {
    /// Invalid grid or operation configuration.
    #[error("config: {0}")]
    Config(String),
    /// Propagated kernel-evaluation failure.
    #[error(transparent)]
    Kernel(#[from] KernelError),
    /// A linear system was numerically singular (condition number beyond
    /// `1e12`) or a factorization failed.
    #[error("singular: {0}")]
    Singular(String),
    /// Container or file-format failure.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    /// Malformed binary container.
    #[error("format: {0}")]
    Format(String),
}

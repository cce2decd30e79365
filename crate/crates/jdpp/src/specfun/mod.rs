//! Special functions with controlled accuracy.
//!
//! Complex Gamma, the Tricomi confluent hypergeometric function `U`, the
//! Whittaker function `W`, the `P`/`Q` function pair entering the Whittaker
//! correlation kernel, and the cosine integral.

pub(crate) mod cosint;
mod gamma;
mod kummer;
mod params;
mod whittaker;

pub use cosint::cosine_integral;
pub use gamma::gamma_complex;
pub use kummer::kummer_u;
pub use params::{KernelParams, Regime};
pub use whittaker::{pq_functions, whittaker_w, Side};

use crate::num::{lit, Real};

/// Accuracy controls shared by the special-function evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracySpec<T: Real> {
    /// Target relative tolerance.
    pub rel_tol: T,
    /// Cap on the number of series terms.
    pub max_terms: usize,
    /// Argument magnitude at which evaluation switches from the
    /// series/integral regime to the asymptotic expansion.
    pub switch_radius: T,
}

impl<T: Real> AccuracySpec<T> {
    /// Validated constructor.
    pub fn new(rel_tol: T, max_terms: usize, switch_radius: T) -> Result<Self, SpecFunError> {
        if !(rel_tol > T::zero()) || max_terms == 0 || !(switch_radius > T::zero()) {
            return Err(SpecFunError::Domain(
                "accuracy spec requires rel_tol > 0, max_terms >= 1, switch_radius > 0".into(),
            ));
        }
        Ok(Self { rel_tol, max_terms, switch_radius })
    }
}

impl<T: Real> Default for AccuracySpec<T> {
    /// Double-precision defaults: `rel_tol = 1e-10`, `max_terms = 400`,
    /// `switch_radius = 30`.
    fn default() -> Self {
        Self { rel_tol: lit(1e-10), max_terms: 400, switch_radius: lit(30.0) }
    }
}

/// Errors raised by the special-function layer.
#[derive(Debug, Clone, thiserror::Error)]
pub enum SpecFunError {
    /// Evaluation at a pole of the function.
    #[error("pole: {0}")]
    Pole(String),
    /// A series failed to reach the requested tolerance within the term cap.
    #[error("series did not converge: {0}")]
    Convergence(String),
    /// Argument outside the function's domain or parameter constraints.
    #[error("domain: {0}")]
    Domain(String),
}

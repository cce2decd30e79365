//! Rank-one-integrable `L`-kernels and the Whittaker `A`-function.

use super::{require_nonzero, KernelError, KernelFn, Singularity};
use crate::num::{lit, Real};
use crate::specfun::KernelParams;
use std::sync::Arc;

/// The scalar factor function of an integrable `L`-kernel,
/// `A(x) = c * |x|^{sgn(x) (z + z')/2} * e^{-|x|/2}`, supported on the whole
/// punctured line and square-integrable when `|z + z'| < 1`.
#[derive(Debug, Clone, Copy)]
pub struct AFunction<T: Real> {
    prefactor: T,
    half_sum: T,
}

impl<T: Real> AFunction<T> {
    /// Value at `x != 0`.
    pub fn eval(&self, x: T) -> Result<T, KernelError> {
        require_nonzero(x)?;
        let u = x.abs();
        let exponent = if x > T::zero() { self.half_sum } else { -self.half_sum };
        Ok(self.prefactor * u.powf(exponent) * (-u * lit::<T>(0.5)).exp())
    }

    /// `A⁺ = A * χ_{x > 0}` (zero on the negative half-line).
    pub fn plus(&self, x: T) -> Result<T, KernelError> {
        require_nonzero(x)?;
        if x > T::zero() {
            self.eval(x)
        } else {
            Ok(T::zero())
        }
    }

    /// `A⁻ = A * χ_{x < 0}` (zero on the positive half-line).
    pub fn minus(&self, x: T) -> Result<T, KernelError> {
        require_nonzero(x)?;
        if x < T::zero() {
            self.eval(x)
        } else {
            Ok(T::zero())
        }
    }

    /// The normalization constant in front of the power/exponential factors.
    pub fn prefactor(&self) -> T {
        self.prefactor
    }
}

/// The `A`-function whose integrable `L`-kernel resolves to the Whittaker
/// kernel: prefactor `(sin(pi z) sin(pi z'))^{1/4} / sqrt(pi)` and power
/// exponent `sgn(x) (z + z')/2`.
///
/// The per-factor normalization is pinned by the reproducing identity of the
/// resulting kernel (the `L -> K` route must converge to the directly
/// evaluated Whittaker kernel as the origin cutoff shrinks); see the
/// route-agreement tests in the operator layer.
pub fn whittaker_a<T: Real>(params: &KernelParams<T>) -> Result<AFunction<T>, KernelError> {
    if !params.l_admissible() {
        return Err(KernelError::Domain(format!(
            "integrable L-kernel requires |z + z'| < 1, got {}",
            params.sum().abs()
        )));
    }
    let pi = T::PI();
    let s = ((params.z() * pi).sin() * (params.z_prime() * pi).sin()).re;
    if !(s > T::zero()) {
        return Err(KernelError::Domain(
            "sin(pi z) sin(pi z') must be positive for a real A-function".into(),
        ));
    }
    Ok(AFunction {
        prefactor: s.powf(lit(0.25)) / pi.sqrt(),
        half_sum: params.sum() * lit(0.5),
    })
}

/// The integrable kernel `L(x, y) = (A⁺(x) A⁻(y) + A⁻(x) A⁺(y)) / (x - y)`:
/// it couples only opposite-sign pairs, vanishes on same-sign pairs, and is
/// antisymmetric.  The diagonal is identically zero.
pub fn l_kernel<T: Real>(a: &AFunction<T>) -> KernelFn<T> {
    let a = *a;
    let eval = move |x: T, y: T| -> Result<T, KernelError> {
        require_nonzero(x)?;
        require_nonzero(y)?;
        if (x > T::zero()) == (y > T::zero()) {
            return Ok(T::zero());
        }
        Ok(a.eval(x)? * a.eval(y)? / (x - y))
    };
    let diag = move |x: T| -> Result<T, KernelError> {
        require_nonzero(x)?;
        Ok(T::zero())
    };
    KernelFn::from_parts(Arc::new(eval), Arc::new(diag), Singularity::Origin)
}

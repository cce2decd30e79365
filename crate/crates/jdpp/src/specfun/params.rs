//! Parameter pair for the Whittaker correlation kernel.

use super::SpecFunError;
use crate::num::{lit, Cplx, Real};

/// Which of the two admissible parameter configurations a pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `z' = conj(z)` with a genuinely complex `z`.
    Conjugate,
    /// Both parameters real and inside the same open unit interval
    /// `(m, m + 1)` for an integer `m`.
    RealInterval,
}

/// Validated parameter pair `(z, z')` for the Whittaker kernel.
///
/// Construction enforces one of the two regimes in [`Regime`]; in either
/// case `z + z'` and `z z'` are real with `z z' > 0`, which is what keeps
/// the kernel itself real-valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams<T: Real> {
    z: Cplx<T>,
    z_prime: Cplx<T>,
    regime: Regime,
}

impl<T: Real> KernelParams<T> {
    pub fn new(z: Cplx<T>, z_prime: Cplx<T>) -> Result<Self, SpecFunError> {
        let tol = lit::<T>(1e-12) * (T::one() + z.norm());
        let conjugate = (z_prime - z.conj()).norm() <= tol && z.im.abs() > tol;
        if conjugate {
            return Ok(Self { z, z_prime, regime: Regime::Conjugate });
        }
        if z.im.is_zero() && z_prime.im.is_zero() {
            let (a, b) = (z.re, z_prime.re);
            let m = a.floor();
            let same_cell = b > m && b < m + T::one();
            let interior = a > m && a < m + T::one() && same_cell;
            if interior {
                return Ok(Self { z, z_prime, regime: Regime::RealInterval });
            }
            return Err(SpecFunError::Domain(format!(
                "real parameters must lie in the same open interval (m, m+1); got {a}, {b}"
            )));
        }
        Err(SpecFunError::Domain(format!(
            "parameters must be a conjugate pair or a real pair in a common unit interval; \
             got z = {z}, z' = {z_prime}"
        )))
    }

    pub fn z(&self) -> Cplx<T> {
        self.z
    }

    pub fn z_prime(&self) -> Cplx<T> {
        self.z_prime
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// `z + z'`; real in both regimes.
    pub fn sum(&self) -> T {
        (self.z + self.z_prime).re
    }

    /// `z z'`; real and strictly positive in both regimes.
    pub fn product(&self) -> T {
        (self.z * self.z_prime).re
    }

    /// `(z - z') / 2`, the second Whittaker index.
    pub fn mu(&self) -> Cplx<T> {
        (self.z - self.z_prime) * Cplx::new(lit::<T>(0.5), T::zero())
    }

    /// Whether the rank-one-integrable factorization exists, i.e.
    /// `|z + z'| < 1`.
    pub fn l_admissible(&self) -> bool {
        self.sum().abs() < T::one()
    }
}

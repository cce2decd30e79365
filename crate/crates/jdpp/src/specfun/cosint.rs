//! Cosine integral `Ci(x)` for `x > 0`.

use super::SpecFunError;
use crate::num::{lit, Cplx, Real};

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_861;
/// Crossover between the power series and the continued fraction.
const SERIES_X_MAX: f64 = 2.0;

/// Cosine integral `Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt`.
///
/// Power series below `x = 2`; above that, the Lentz continued fraction for
/// the exponential integral of imaginary argument, which converges to full
/// precision in a few dozen iterations.
pub fn cosine_integral<T: Real>(x: T) -> Result<T, SpecFunError> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "cosine_integral requires a finite argument x > 0, got {x}"
        )));
    }
    if x <= lit(SERIES_X_MAX) {
        Ok(ci_series(x))
    } else {
        Ok(ci_continued_fraction(x))
    }
}

fn ci_series<T: Real>(x: T) -> T {
    let neg_x2 = -x * x;
    let mut even_term = T::one(); // (-x^2)^k / (2k)!
    let mut sum = T::zero();
    for k in 1..200 {
        let two_k = lit::<T>(2.0 * k as f64);
        even_term = even_term * neg_x2 / (two_k * (two_k - T::one()));
        let term = even_term / two_k;
        sum = sum + term;
        if term.abs() < T::epsilon() * (sum.abs() + T::one()) {
            break;
        }
    }
    lit::<T>(EULER_GAMMA) + x.ln() + sum
}

fn ci_continued_fraction<T: Real>(x: T) -> T {
    let one = T::one();
    let two = one + one;
    let mut b = Cplx::new(one, x);
    let mut c = Cplx::new(one / T::min_positive_value().sqrt(), T::zero());
    let mut d = Cplx::new(one, T::zero()) / b;
    let mut h = d;
    for i in 1..10_000 {
        let a = Cplx::new(-lit::<T>((i * i) as f64), T::zero());
        b = b + Cplx::new(two, T::zero());
        d = Cplx::new(one, T::zero()) / (a * d + b);
        c = b + a / c;
        let delta = c * d;
        h = h * delta;
        if (delta - Cplx::new(one, T::zero())).norm() < T::epsilon() {
            break;
        }
    }
    h = h * Cplx::new(x.cos(), -x.sin());
    -h.re
}

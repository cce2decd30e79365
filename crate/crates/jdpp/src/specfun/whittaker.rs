//! Whittaker function `W` and the `P`/`Q` pair built from it.

use super::kummer::kummer_u;
use super::{AccuracySpec, KernelParams, SpecFunError};
use crate::num::{lit, Cplx, Real};

/// Whittaker function `W_{kappa, mu}(x)` for real `x > 0`,
/// `W = e^{-x/2} x^{mu + 1/2} U(mu - kappa + 1/2, 1 + 2 mu, x)`.
pub fn whittaker_w<T: Real>(
    kappa: Cplx<T>,
    mu: Cplx<T>,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<Cplx<T>, SpecFunError> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "whittaker_w requires a finite argument x > 0, got {x}"
        )));
    }
    let half = Cplx::new(lit::<T>(0.5), T::zero());
    let one = Cplx::new(T::one(), T::zero());
    let u = kummer_u(mu - kappa + half, one + mu + mu, x, acc)?;
    // e^{-x/2} x^{mu + 1/2} in one exponential.
    let pre = ((mu + half) * Cplx::new(x.ln(), T::zero()) - Cplx::new(x, T::zero()) * half).exp();
    Ok(pre * u)
}

/// Which half-axis form of the `P`/`Q` pair to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Side::Plus => T::one(),
            Side::Minus => -T::one(),
        }
    }
}

/// The function pair `(P, Q)` entering the Whittaker kernel, evaluated at
/// `x > 0`:
///
/// ```text
/// P(x) = (z z')^{1/4} / sqrt(G x) * W_{(s(z+z') + 1)/2, (z-z')/2}(x)
/// Q(x) = (z z')^{3/4} / sqrt(G x) * W_{(s(z+z') - 1)/2, (z-z')/2}(x)
/// ```
///
/// where `s = +/-1` selects the side and `G = gamma(1 + s z) gamma(1 + s z')`.
/// Both values are real for admissible parameters; the vanishing imaginary
/// part is checked and dropped.
pub fn pq_functions<T: Real>(
    params: &KernelParams<T>,
    side: Side,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<(T, T), SpecFunError> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "pq_functions requires a finite argument x > 0, got {x}"
        )));
    }
    let s = side.sign::<T>();
    let one = Cplx::new(T::one(), T::zero());
    let sc = Cplx::new(s, T::zero());
    let g = super::gamma_complex(one + sc * params.z())?
        * super::gamma_complex(one + sc * params.z_prime())?;
    if g.im.abs() > lit::<T>(1e-10) * g.norm() {
        return Err(SpecFunError::Domain(format!(
            "gamma product is not real for parameters {:?}",
            params
        )));
    }
    if !(g.re > T::zero()) {
        return Err(SpecFunError::Domain(
            "gamma product must be positive for a real kernel".into(),
        ));
    }
    let prod = params.product();
    let denom = (g.re * x).sqrt();
    let half = lit::<T>(0.5);
    let sigma = params.sum();
    let mu = params.mu();
    let kappa_p = Cplx::new((s * sigma + T::one()) * half, T::zero());
    let kappa_q = Cplx::new((s * sigma - T::one()) * half, T::zero());
    let wp = whittaker_w(kappa_p, mu, x, acc)?;
    let wq = whittaker_w(kappa_q, mu, x, acc)?;
    let p = realify(wp)? * prod.powf(lit(0.25)) / denom;
    let q = realify(wq)? * prod.powf(lit(0.75)) / denom;
    Ok((p, q))
}

/// Accept a value whose imaginary part is roundoff-level and return the real
/// part; anything larger indicates inadmissible parameters.
fn realify<T: Real>(w: Cplx<T>) -> Result<T, SpecFunError> {
    if w.im.abs() <= lit::<T>(1e-8) * w.norm().max(T::min_positive_value()) {
        Ok(w.re)
    } else {
        Err(SpecFunError::Domain(format!(
            "expected a real value, got imaginary part {:e}",
            w.im
        )))
    }
}

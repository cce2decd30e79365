//! Decay diagnostics for kernels with singularity at infinity.

use super::{KernelError, KernelFn, Singularity};
use crate::num::{lit, Real};

/// Result of sampling a kernel against the envelope
/// `Phi(t) = C'^2 * chi_{|t| <= d'} + C^2 / t^2 * chi_{|t| > d'}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayReport<T: Real> {
    /// Fitted far-field constant: `max |K(x,y)| * |x - y|` over separated pairs.
    pub c: T,
    /// Fitted near-diagonal plateau: `max |K(x,y)|` over close pairs.
    pub c_prime: T,
    /// Largest value of `|K(x,y)|^2 - Phi(x - y)` over the sample
    /// (non-positive when the envelope holds).
    pub max_violation: T,
    /// `int_{|t| >= 10} Phi(t) dt = 2 C^2 / 10`.
    pub tail_integral_10: T,
    /// `int_{|t| >= 20} Phi(t) dt = 2 C^2 / 20`; half of the previous value,
    /// exhibiting the `O(1/R)` tail law.
    pub tail_integral_20: T,
    /// Number of sampled point pairs.
    pub samples: usize,
}

/// Number of sample points per half-line.
const POINTS_PER_SIDE: usize = 60;
/// Extent of the sampling box beyond the inner cutoff.
const BOX_EXTENT: f64 = 20.0;

/// Fit the decay envelope of a kernel with singularity at infinity over the
/// box `m <= |x|, |y| <= m + 20` and report the constants together with the
/// maximal violation (report-only: never fails on a decaying kernel).
pub fn verify_decay<T: Real>(
    k: &KernelFn<T>,
    m: T,
    delta_prime: T,
) -> Result<DecayReport<T>, KernelError> {
    if k.singularity() != Singularity::Infinity {
        return Err(KernelError::Domain(
            "decay verification applies to kernels with singularity at infinity".into(),
        ));
    }
    if !(delta_prime > T::zero()) || !(delta_prime < m / lit(4.0)) {
        return Err(KernelError::Domain(format!(
            "need 0 < delta' < M/4, got delta' = {delta_prime}, M = {m}"
        )));
    }

    let mut points = Vec::with_capacity(2 * POINTS_PER_SIDE);
    let step = lit::<T>(BOX_EXTENT / POINTS_PER_SIDE as f64);
    for i in 0..POINTS_PER_SIDE {
        let u = m + step * (lit::<T>(i as f64) + lit(0.5));
        points.push(u);
        points.push(-u);
    }

    let mut c = T::zero();
    let mut c_prime = T::zero();
    let mut values = Vec::with_capacity(points.len() * points.len());
    for &x in &points {
        for &y in &points {
            let v = k.eval(x, y)?.abs();
            let t = (x - y).abs();
            if t <= delta_prime {
                c_prime = c_prime.max(v);
            } else {
                c = c.max(v * t);
            }
            values.push((v, t));
        }
    }

    let mut max_violation = T::neg_infinity();
    for (v, t) in values.iter().copied() {
        let phi = if t <= delta_prime { c_prime * c_prime } else { c * c / (t * t) };
        max_violation = max_violation.max(v * v - phi);
    }

    let two = T::one() + T::one();
    Ok(DecayReport {
        c,
        c_prime,
        max_violation,
        tail_integral_10: two * c * c / lit(10.0),
        tail_integral_20: two * c * c / lit(20.0),
        samples: points.len() * points.len(),
    })
}

//! Complex Gamma function via the Lanczos approximation.

use super::SpecFunError;
use crate::num::{clit, lit, Cplx, Real};

/// Lanczos coefficients for `g = 7`, nine terms.  This is the classic set
/// distributed with the GNU Scientific Library; it yields close to full
/// double precision on the half-plane `Re w >= 0.5`.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function of a complex argument.
///
/// Arguments on the left half-plane are handled through the reflection
/// formula, so accuracy is uniform away from the poles.  Non-positive
/// integers are rejected.
pub fn gamma_complex<T: Real>(w: Cplx<T>) -> Result<Cplx<T>, SpecFunError> {
    if w.im.is_zero() && w.re <= T::zero() && w.re.fract().is_zero() {
        return Err(SpecFunError::Pole(format!("gamma pole at {w}")));
    }
    if w.re < lit::<T>(0.5) {
        // Reflection: gamma(w) * gamma(1 - w) = pi / sin(pi w).
        let pi = Cplx::new(T::PI(), T::zero());
        let s = (pi * w).sin();
        let g = lanczos(Cplx::new(T::one(), T::zero()) - w);
        Ok(pi / (s * g))
    } else {
        Ok(lanczos(w))
    }
}

/// Lanczos sum, valid for `Re w >= 0.5`.
fn lanczos<T: Real>(w: Cplx<T>) -> Cplx<T> {
    let one = Cplx::new(T::one(), T::zero());
    let z = w - one;
    let mut acc = clit::<T>(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + Cplx::new(lit::<T>(c), T::zero()) / (z + Cplx::new(lit::<T>(k as f64), T::zero()));
    }
    let t = z + Cplx::new(lit::<T>(LANCZOS_G + 0.5), T::zero());
    let sqrt_two_pi = Cplx::new((T::PI() + T::PI()).sqrt(), T::zero());
    sqrt_two_pi * t.powc(z + Cplx::new(lit::<T>(0.5), T::zero())) * (-t).exp() * acc
}

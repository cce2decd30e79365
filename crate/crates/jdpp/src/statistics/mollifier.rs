//! Slowly-varying window functions with compact spectral support.
//!
//! The window is defined through its spectrum: a plateau of height `B` up to
//! `xi0`, a `a/|xi|` shoulder out to `1/k`, nothing beyond.  Back in real
//! space this gives a function with `phi(0) = 1`, an extremely wide plateau
//! (width growing like `exp(1/(2a))`), and band-limited oscillatory decay --
//! the profile that makes balanced linear statistics nearly deterministic.

use super::StatisticsError;
use crate::specfun::cosine_integral;
use crate::specfun::cosint::EULER_GAMMA;

/// Calibration constant tying the shoulder height to the sharpness level:
/// `a = 1 / (10 C n)`.  Fitted once against the variance budget of the
/// balanced statistic and kept fixed.
const CALIBRATION: f64 = 0.48;

/// Beyond this magnitude of `ln B` the plateau height overflows `f64` and
/// the evaluation switches to its logarithmic limit.
const LN_B_SAFE: f64 = 650.0;

#[derive(Debug, Clone, Copy)]
enum Profile {
    /// Flat spectrum of height `k/2` on `|xi| <= 1/k` (used when the
    /// requested shoulder would exceed its own plateau).
    Box,
    /// Plateau of height `B = a/xi0` up to `xi0`, then `a/|xi|` to `1/k`.
    Capped { xi0: f64, ln_b: f64 },
}

/// A normalized window function `phi` with `phi(0) = 1`, `|phi| <= 1`.
#[derive(Debug, Clone, Copy)]
pub struct Mollifier {
    a: f64,
    k: f64,
    profile: Profile,
}

impl Mollifier {
    /// Window at sharpness level `n >= 1` over a spatial region of radius
    /// `window`: the spectral cutoff is `1/k` with `k = 20 * window`, and
    /// the shoulder height is `a = 1 / (10 C n)`.
    pub fn new(n: u32, window: f64) -> Result<Self, StatisticsError> {
        if n == 0 {
            return Err(StatisticsError::Config("sharpness level must be >= 1".into()));
        }
        Self::from_parameters(1.0 / (10.0 * CALIBRATION * n as f64), 20.0 * window)
    }

    /// Direct parameterization by shoulder height `a` and bandwidth `k`.
    pub fn from_parameters(a: f64, k: f64) -> Result<Self, StatisticsError> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(StatisticsError::Config(format!(
                "shoulder height must be positive, got {a}"
            )));
        }
        if !(k > 0.0) || !k.is_finite() {
            return Err(StatisticsError::Config(format!(
                "bandwidth must be positive, got {k}"
            )));
        }
        // Unit mass fixes the plateau edge: 2a(1 + ln(1/(k xi0))) = 1.
        // That has a solution with xi0 <= 1/k only for a <= 1/2; otherwise
        // the spectrum degenerates to a plain box.
        let profile = if a <= 0.5 {
            let ln_b = (a * k).ln() + 0.5 / a - 1.0;
            let xi0 = (1.0 - 0.5 / a).exp() / k;
            Profile::Capped { xi0, ln_b }
        } else {
            Profile::Box
        };
        Ok(Self { a, k, profile })
    }

    /// Shoulder height of the spectrum.
    pub fn shoulder(&self) -> f64 {
        self.a
    }

    /// Reciprocal spectral cutoff.
    pub fn bandwidth(&self) -> f64 {
        self.k
    }

    /// Evaluate the window at `x`.
    pub fn eval(&self, x: f64) -> Result<f64, StatisticsError> {
        let x = x.abs();
        let u = std::f64::consts::TAU * x / self.k;
        if u < 1e-9 {
            return Ok(1.0);
        }
        match self.profile {
            Profile::Box => Ok(self.k * (std::f64::consts::TAU * x / self.k).sin()
                / (std::f64::consts::TAU * x)),
            Profile::Capped { xi0, ln_b } => {
                if ln_b > LN_B_SAFE {
                    // Plateau edge below the representable range: the sinc
                    // factor is 1 and Ci at the edge reduces to its
                    // logarithmic form, leaving
                    // phi = 1 + 2a (Ci(u) - gamma - ln u).
                    let ci = cosine_integral(u)?;
                    return Ok(1.0 + 2.0 * self.a * (ci - EULER_GAMMA - u.ln()));
                }
                let b = ln_b.exp();
                let w = std::f64::consts::TAU * x * xi0;
                let plateau = 2.0 * b * w.sin() / (std::f64::consts::TAU * x);
                let shoulder = 2.0 * self.a * (cosine_integral(u)? - cosine_integral(w)?);
                Ok(plateau + shoulder)
            }
        }
    }
}

//! Conditioning functions for Palm measures anchored at point pairs.

use super::KernelError;
use crate::num::Real;

/// A balanced family of conditioning points: `n` positive anchors paired
/// with `n` negative anchors, together with the modulus ratio
/// `lambda = |p_1^- ... p_n^-| / (p_1^+ ... p_n^+)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PalmAnchor<T: Real> {
    p_plus: Vec<T>,
    p_minus: Vec<T>,
    lambda: T,
}

impl<T: Real> PalmAnchor<T> {
    pub fn new(p_plus: Vec<T>, p_minus: Vec<T>) -> Result<Self, KernelError> {
        if p_plus.len() != p_minus.len() {
            return Err(KernelError::Domain(format!(
                "anchor sides must have equal cardinality, got {} and {}",
                p_plus.len(),
                p_minus.len()
            )));
        }
        if p_plus.iter().any(|&p| !(p > T::zero()) || !p.is_finite()) {
            return Err(KernelError::Domain("positive anchors must satisfy p > 0".into()));
        }
        if p_minus.iter().any(|&p| !(p < T::zero()) || !p.is_finite()) {
            return Err(KernelError::Domain("negative anchors must satisfy p < 0".into()));
        }
        for (i, &p) in p_plus.iter().enumerate() {
            if p_plus[i + 1..].iter().any(|&q| q == p) {
                return Err(KernelError::Domain(format!("duplicate positive anchor {p}")));
            }
        }
        for (i, &p) in p_minus.iter().enumerate() {
            if p_minus[i + 1..].iter().any(|&q| q == p) {
                return Err(KernelError::Domain(format!("duplicate negative anchor {p}")));
            }
        }
        let mut lambda = T::one();
        for (&pp, &pm) in p_plus.iter().zip(p_minus.iter()) {
            lambda = lambda * pm.abs() / pp;
        }
        Ok(Self { p_plus, p_minus, lambda })
    }

    /// Anchor with no points; conditioning on it is the identity.
    pub fn empty() -> Self {
        Self { p_plus: Vec::new(), p_minus: Vec::new(), lambda: T::one() }
    }

    pub fn p_plus(&self) -> &[T] {
        &self.p_plus
    }

    pub fn p_minus(&self) -> &[T] {
        &self.p_minus
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// Number of anchor pairs.
    pub fn pairs(&self) -> usize {
        self.p_plus.len()
    }
}

/// The multiplicative functions attached to an anchor.
///
/// On the positive half-line `g(x) = prod_i (x - p_i^+) / (x - p_i^-)`, on
/// the negative half-line the roles of the two anchor families swap; the
/// factors' poles land on the opposite half-line, so `g` is finite on all of
/// the punctured line.  `c(x)` is `lambda` on the positive side and
/// `1/lambda` on the negative side; `h = c * |g|`; and
/// `f = (-1)^n * c * g`, so `|f| = h` identically.
#[derive(Debug, Clone)]
pub struct ConditioningFunctions<T: Real> {
    anchor: PalmAnchor<T>,
}

impl<T: Real> ConditioningFunctions<T> {
    /// Rational conditioning factor `g`.
    pub fn g(&self, x: T) -> Result<T, KernelError> {
        require_off_axis(x)?;
        let mut value = T::one();
        if x > T::zero() {
            for (&pp, &pm) in self.anchor.p_plus.iter().zip(self.anchor.p_minus.iter()) {
                value = value * (x - pp) / (x - pm);
            }
        } else {
            for (&pp, &pm) in self.anchor.p_plus.iter().zip(self.anchor.p_minus.iter()) {
                value = value * (x - pm) / (x - pp);
            }
        }
        Ok(value)
    }

    /// Piecewise-constant modulus correction `c`.
    pub fn c(&self, x: T) -> Result<T, KernelError> {
        require_off_axis(x)?;
        if x > T::zero() {
            Ok(self.anchor.lambda)
        } else {
            Ok(T::one() / self.anchor.lambda)
        }
    }

    /// Signed conditioning function `f = (-1)^n c g`; vanishes exactly at
    /// the anchors.
    pub fn f(&self, x: T) -> Result<T, KernelError> {
        let sign = if self.anchor.pairs() % 2 == 0 { T::one() } else { -T::one() };
        Ok(sign * self.c(x)? * self.g(x)?)
    }

    /// Bounded positive envelope `h = c |g| = |f|`; tends to `1` at the
    /// origin with a linear modulus of continuity.
    pub fn h(&self, x: T) -> Result<T, KernelError> {
        Ok(self.c(x)? * self.g(x)?.abs())
    }

    pub fn anchor(&self) -> &PalmAnchor<T> {
        &self.anchor
    }
}

fn require_off_axis<T: Real>(x: T) -> Result<(), KernelError> {
    if x.is_zero() || !x.is_finite() {
        Err(KernelError::Domain(format!(
            "conditioning functions are defined on the punctured line, got {x}"
        )))
    } else {
        Ok(())
    }
}

/// Bundle the four conditioning functions of an anchor.
pub fn conditioning_functions<T: Real>(anchor: &PalmAnchor<T>) -> ConditioningFunctions<T> {
    ConditioningFunctions { anchor: anchor.clone() }
}

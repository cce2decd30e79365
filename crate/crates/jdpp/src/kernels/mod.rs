//! Closed-form kernel evaluators.
//!
//! The central object is [`KernelFn`], a shareable pair of evaluators for a
//! correlation kernel on the punctured real line: a general `(x, y)` entry
//! and a dedicated diagonal.  Constructors are provided for the Whittaker
//! kernel, its inversion to a kernel with singularity at infinity, and the
//! rank-one-integrable `L`-kernels built from an `A`-function; the
//! conditioning-function family for Palm measures lives in
//! [`conditioning`](self::conditioning).

mod conditioning;
mod decay;
mod integrable;

pub use conditioning::{conditioning_functions, ConditioningFunctions, PalmAnchor};
pub use decay::{verify_decay, DecayReport};
pub use integrable::{l_kernel, whittaker_a, AFunction};

use crate::num::{lit, Real};
use crate::specfun::{pq_functions, AccuracySpec, KernelParams, Side, SpecFunError};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Errors raised by kernel evaluation.
#[derive(Debug, Clone, thiserror::Error)]
pub enum KernelError {
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error("domain: {0}")]
    Domain(String),
}

/// Where the kernel's non-integrable direction lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Singularity {
    /// Kernel on the punctured line; the diagonal blows up towards `0`.
    Origin,
    /// Inversion-transformed kernel; the delicate region is `|x| -> inf`.
    Infinity,
}

type EvalFn<T> = Arc<dyn Fn(T, T) -> Result<T, KernelError> + Send + Sync>;
type DiagFn<T> = Arc<dyn Fn(T) -> Result<T, KernelError> + Send + Sync>;

/// A correlation kernel on the punctured line: immutable, pure, and cheap to
/// clone, so it can be shared freely across threads.
#[derive(Clone)]
pub struct KernelFn<T: Real> {
    eval: EvalFn<T>,
    diag: DiagFn<T>,
    singularity: Singularity,
}

impl<T: Real> KernelFn<T> {
    /// Assemble a kernel from its two evaluators.
    pub fn from_parts(eval: EvalFn<T>, diag: DiagFn<T>, singularity: Singularity) -> Self {
        Self { eval, diag, singularity }
    }

    /// The identically-zero kernel (useful as a stub and in report tests).
    pub fn zero(singularity: Singularity) -> Self {
        Self {
            eval: Arc::new(|_, _| Ok(T::zero())),
            diag: Arc::new(|_| Ok(T::zero())),
            singularity,
        }
    }

    /// Kernel entry `K(x, y)`.  Exactly coincident arguments dispatch to the
    /// diagonal evaluator.
    pub fn eval(&self, x: T, y: T) -> Result<T, KernelError> {
        if x == y {
            (self.diag)(x)
        } else {
            (self.eval)(x, y)
        }
    }

    /// Diagonal entry `K(x, x)`.
    pub fn diag(&self, x: T) -> Result<T, KernelError> {
        (self.diag)(x)
    }

    pub fn singularity(&self) -> Singularity {
        self.singularity
    }
}

impl<T: Real> std::fmt::Debug for KernelFn<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KernelFn").field("singularity", &self.singularity).finish()
    }
}

fn require_nonzero<T: Real>(v: T) -> Result<(), KernelError> {
    if v.is_zero() || !v.is_finite() {
        Err(KernelError::Domain(format!("kernel argument must be finite and nonzero, got {v}")))
    } else {
        Ok(())
    }
}

/// Memoized per-point `P`/`Q` values.  The kernel is evaluated at all pairs
/// of quadrature nodes, but `P` and `Q` only depend on one point at a time,
/// so caching turns an `O(n^2)` special-function bill into `O(n)`.
struct PqTable<T: Real> {
    params: KernelParams<T>,
    acc: AccuracySpec<T>,
    cache: RwLock<HashMap<(bool, u64), (T, T)>>,
}

impl<T: Real> PqTable<T> {
    fn new(params: KernelParams<T>, acc: AccuracySpec<T>) -> Self {
        Self { params, acc, cache: RwLock::new(HashMap::new()) }
    }

    /// `(P, Q)` on the given side at `x > 0`.
    fn pq(&self, side: Side, x: T) -> Result<(T, T), SpecFunError> {
        let key = (side == Side::Plus, x.to_f64().map(f64::to_bits).unwrap_or(0));
        if let Some(&hit) = self.cache.read().expect("pq cache poisoned").get(&key) {
            return Ok(hit);
        }
        let value = pq_functions(&self.params, side, x, &self.acc)?;
        self.cache.write().expect("pq cache poisoned").insert(key, value);
        Ok(value)
    }

    /// `K(x, x)` on one half-line: `(P' Q - Q' P)(|x|)` by central
    /// differences with step `max(1e-5, 1e-5 |x|)`, shrunk if needed to stay
    /// on the half-line.
    fn diagonal(&self, side: Side, u: T) -> Result<T, SpecFunError> {
        let step = lit::<T>(1e-5).max(lit::<T>(1e-5) * u).min(u * lit(0.5));
        let (p_hi, q_hi) = self.pq(side, u + step)?;
        let (p_lo, q_lo) = self.pq(side, u - step)?;
        let (p, q) = self.pq(side, u)?;
        let dp = (p_hi - p_lo) / (step + step);
        let dq = (q_hi - q_lo) / (step + step);
        Ok(dp * q - dq * p)
    }
}

/// The Whittaker correlation kernel on the punctured line.
///
/// Block structure (writing `P, Q` for the side-`+` pair at `|.|` and
/// `P-, Q-` for the side-`-` pair):
///
/// ```text
/// x, y > 0:  (P(x) Q(y)  - Q(x) P(y) ) / (x - y)
/// x > 0 > y: (P(x) P-(-y) + Q(x) Q-(-y)) / (x - y)
/// x < 0 < y: (P-(-x) P(y) + Q-(-x) Q(y)) / (x - y)
/// x, y < 0:  (P-(-x) Q-(-y) - Q-(-x) P-(-y)) / (y - x)
/// ```
///
/// Same-sign pairs closer than `1e-7 * max(|x|, |y|)` are routed through the
/// derivative (diagonal) formula to avoid cancellation in the difference
/// quotient.  The diagonal itself diverges at the origin; evaluation is
/// refused for `|x| < 1e-6`.
pub fn whittaker_kernel<T: Real>(params: &KernelParams<T>, acc: &AccuracySpec<T>) -> KernelFn<T> {
    let table = Arc::new(PqTable::new(*params, *acc));
    let for_eval = Arc::clone(&table);
    let eval = move |x: T, y: T| -> Result<T, KernelError> {
        require_nonzero(x)?;
        require_nonzero(y)?;
        let zero = T::zero();
        let near = (x - y).abs() < lit::<T>(1e-7) * x.abs().max(y.abs());
        let value = if x > zero && y > zero {
            if near {
                return whittaker_diag(&for_eval, x);
            }
            let (px, qx) = for_eval.pq(Side::Plus, x)?;
            let (py, qy) = for_eval.pq(Side::Plus, y)?;
            (px * qy - qx * py) / (x - y)
        } else if x > zero && y < zero {
            let (px, qx) = for_eval.pq(Side::Plus, x)?;
            let (py, qy) = for_eval.pq(Side::Minus, -y)?;
            (px * py + qx * qy) / (x - y)
        } else if x < zero && y > zero {
            let (px, qx) = for_eval.pq(Side::Minus, -x)?;
            let (py, qy) = for_eval.pq(Side::Plus, y)?;
            (px * py + qx * qy) / (x - y)
        } else {
            if near {
                return whittaker_diag(&for_eval, x);
            }
            let (px, qx) = for_eval.pq(Side::Minus, -x)?;
            let (py, qy) = for_eval.pq(Side::Minus, -y)?;
            (px * qy - qx * py) / (y - x)
        };
        Ok(value)
    };
    let for_diag = table;
    let diag = move |x: T| -> Result<T, KernelError> { whittaker_diag(&for_diag, x) };
    KernelFn::from_parts(Arc::new(eval), Arc::new(diag), Singularity::Origin)
}

fn whittaker_diag<T: Real>(table: &PqTable<T>, x: T) -> Result<T, KernelError> {
    require_nonzero(x)?;
    if x.abs() < lit(1e-6) {
        return Err(KernelError::Domain(format!(
            "diagonal evaluation refused for |x| < 1e-6 (kernel diverges at the origin), got {x}"
        )));
    }
    let side = if x > T::zero() { Side::Plus } else { Side::Minus };
    Ok(table.diagonal(side, x.abs())?)
}

/// Inversion `x -> 1/x`: maps a kernel with singularity at the origin to
/// `K_new(x, y) = K(1/x, 1/y) / |x y|` with singularity at infinity, and
/// vice versa.  Applying the transform twice returns the original kernel.
pub fn transform_to_infinity<T: Real>(k: &KernelFn<T>) -> KernelFn<T> {
    let flipped = match k.singularity() {
        Singularity::Origin => Singularity::Infinity,
        Singularity::Infinity => Singularity::Origin,
    };
    let inner_eval = k.clone();
    let eval = move |x: T, y: T| -> Result<T, KernelError> {
        require_nonzero(x)?;
        require_nonzero(y)?;
        let one = T::one();
        Ok(inner_eval.eval(one / x, one / y)? / (x * y).abs())
    };
    let inner_diag = k.clone();
    let diag = move |x: T| -> Result<T, KernelError> {
        require_nonzero(x)?;
        Ok(inner_diag.diag(T::one() / x)? / (x * x))
    };
    KernelFn::from_parts(Arc::new(eval), Arc::new(diag), flipped)
}

//! Scalar abstraction for the numerics core.
//!
//! The special-function and kernel layers are generic over [`Real`] so the
//! same formulas can be instantiated at `f64` (the working precision) and
//! `f32` (smoke tests of formula stability). The trait deliberately adds no
//! methods of its own: all arithmetic resolves through the `num_traits`
//! supertraits, which keeps method resolution unambiguous when other
//! numeric traits are in scope.

use num_complex::Complex;

/// Floating-point scalar usable throughout the numerics core.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::NumCast
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for a complex number over a [`Real`].
pub type Cplx<T> = Complex<T>;

/// Converts an `f64` constant into the working scalar.
///
/// Panics only if the target type cannot represent finite `f64` values at
/// all, which no implementor of [`Real`] exhibits.
#[inline]
pub fn lit<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("finite f64 literal must convert into a Real scalar")
}

/// Complex value from real and imaginary `f64` constants.
#[inline]
pub fn clit<T: Real>(re: f64, im: f64) -> Cplx<T> {
    Complex::new(lit(re), lit(im))
}

/// Distance from a complex number to the nearest integer on the real axis,
/// treating the imaginary part as part of the distance.
///
/// Used to detect the logarithmic degeneration of hypergeometric parameters.
pub fn dist_to_integer<T: Real>(w: Cplx<T>) -> T {
    let re = w.re;
    let nearest = re.round();
    let dre = re - nearest;
    (dre * dre + w.im * w.im).sqrt()
}

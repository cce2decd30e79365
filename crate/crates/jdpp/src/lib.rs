//! Numerics for J-Hermitian determinantal point processes.
//!
//! The library is organized in layers:
//!
//! - [`specfun`]: complex Gamma, Kummer `U`, Whittaker `W`, the `P`/`Q`
//!   function pair of the Whittaker correlation kernel, and the cosine
//!   integral. Generic over the scalar type ([`num::Real`]).
//! - [`kernels`]: closed-form kernel evaluators — the Whittaker correlation
//!   kernel on the punctured line, its inversion to a kernel with singularity
//!   at infinity, integrable `L`-kernels built from an `A`-function, and the
//!   conditioning-function family used for Palm measures.
//! - [`opalg`]: quadrature grids, weighted Nyström matrices with sign-block
//!   structure, Fredholm determinants and trace/Hilbert–Schmidt norms, the
//!   `L ↔ K` maps, compressions, rank-one Palm updates, and the
//!   integrable-system solver for the resolvent functions.
//! - [`sampling`]: exact subset enumeration on tiny grids, a spectral sampler
//!   for the Hermitian dual process with particle-hole dualization, and
//!   correlation estimators.
//! - [`statistics`]: twisted linear statistics, analytic variances, the
//!   rigidity mollifier, regularized additive/multiplicative functionals,
//!   Radon–Nikodym normalizers, and the two flagship experiments.
//!
//! Dense linear algebra runs in `f64`; the special-function and kernel layers
//! are generic so that `f32` instantiations can be smoke-tested.

pub mod kernels;
pub mod opalg;
pub mod num;
pub mod quad;
pub mod sampling;
pub mod specfun;
pub mod statistics;

/// Complex number over the default scalar.
pub type C64 = num_complex::Complex<f64>;

/// Kernel parameters instantiated at the default scalar.
pub type KernelParams64 = specfun::KernelParams<f64>;

/// Kernel evaluator instantiated at the default scalar.
pub type KernelFn64 = kernels::KernelFn<f64>;

/// Integrable-kernel factor function at the default scalar.
pub type AFunction64 = kernels::AFunction<f64>;

/// Palm conditioning anchor at the default scalar.
pub type PalmAnchor64 = kernels::PalmAnchor<f64>;

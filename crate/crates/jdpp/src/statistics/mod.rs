//! Statistics of the signed ensembles: linear-statistic moments, mollified
//! window functions, origin-regularized functionals, the exponential-tilt
//! normalizer, and the two reference experiments built from them.

mod membership;
mod mollifier;
mod palm_equiv;
mod regularized;
mod rigidity;
mod tilt;
mod twisted;

pub use membership::{membership_diagnostics, MembershipReport};
pub use mollifier::Mollifier;
pub use palm_equiv::{
    default_test_functions, run_palm_equivalence, PalmEquivalenceConfig, PalmEquivalenceReport,
    PalmRouteValues, TestFunction,
};
pub use regularized::{
    regularized_balanced_mean, regularized_centered_statistic, regularized_limit, with_delta,
    RegularizedValue, DELTA_SCHEDULE,
};
pub use rigidity::{run_rigidity, RigidityConfig, RigidityLevel, RigidityReport};
pub use tilt::{multiplicative_expectation, s_bar, s_bar_mean, tilt_normalizer};
pub use twisted::{
    additive_mean, additive_variance, balanced_mean, balanced_variance,
    balanced_variance_difference, twisted_statistic,
};

use crate::kernels::KernelError;
use crate::opalg::OpalgError;
use crate::sampling::SamplingError;
use crate::specfun::SpecFunError;

/// Errors raised by the statistics layer.
#[derive(Debug, thiserror::Error)]
pub enum StatisticsError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Opalg(#[from] OpalgError),
    #[error(transparent)]
    Sampling(#[from] SamplingError),
}

//! Exact sampling of the signed particle configurations.
//!
//! The correlation operator of the signed process is not symmetric, so it
//! cannot be fed to a spectral sampler directly.  Instead, the symmetrized
//! operator (negate the negative-node rows, add the negative-side identity)
//! drives an ordinary determinantal sampler, and particle-hole duality on
//! the negative half-line converts its output into signed configurations:
//! a signed sample consists of the positive points that are present plus
//! the negative points that are absent.

mod batch;
mod correlations;
mod enumerate;
mod rng;
mod spectral;

pub use batch::{inclusion_frequencies, load_batch, save_batch, SampleBatch};
pub use correlations::{estimate_correlations, BoxMoment, CorrelationReport, PairMoment};
pub use enumerate::{enumerate_signed_ensemble, total_variation};
pub use rng::{sample_rng, stream_seed};
pub use spectral::DualSampler;

use crate::opalg::OpalgError;

/// Errors raised by the sampling layer.
#[derive(Debug, thiserror::Error)]
pub enum SamplingError {
    /// The symmetrized operator has eigenvalues outside the tolerated band
    /// around `[0, 1]`.
    #[error("spectrum: {0}")]
    Spectrum(String),
    /// Exact enumeration was requested on a grid too large for it.
    #[error("size: {0}")]
    Size(String),
    /// Invalid configuration data or arguments.
    #[error("config: {0}")]
    Config(String),
    /// Malformed batch file.
    #[error("format: {0}")]
    Format(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Opalg(#[from] OpalgError),
}

/// A point configuration on a grid, stored as strictly increasing node
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    indices: Vec<usize>,
}

impl Configuration {
    /// Build a configuration from node indices (any order, no duplicates).
    pub fn new(mut indices: Vec<usize>) -> Result<Self, SamplingError> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(SamplingError::Config("duplicate node index".into()));
        }
        Ok(Self { indices })
    }

    pub fn empty() -> Self {
        Self { indices: Vec::new() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// Number of points with index in `range`.
    pub fn count_in(&self, range: std::ops::Range<usize>) -> usize {
        let lo = self.indices.partition_point(|&i| i < range.start);
        let hi = self.indices.partition_point(|&i| i < range.end);
        hi - lo
    }
}

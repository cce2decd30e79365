//! Spectral sampler for the symmetrized operator, dualized back to signed
//! configurations.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use rayon::prelude::*;

use super::batch::SampleBatch;
use super::rng::sample_rng;
use super::{Configuration, SamplingError};
use crate::opalg::{hat_k, OperatorMatrix};

/// Eigenvalues this far outside `[0, 1]` are treated as discretization
/// noise and clipped; anything worse aborts the sampler.
const CLIP_BAND: f64 = 0.05;

/// Exact sampler for the signed ensemble described by a correlation
/// operator.  The symmetrized operator is eigendecomposed once; each sample
/// draws an eigenvector subset (one Bernoulli per eigenvalue) and peels one
/// point per selected vector, then particle-hole duality on the negative
/// half-line turns the symmetric sample into a signed configuration.
pub struct DualSampler {
    vectors: DMatrix<f64>,
    values: Vec<f64>,
    n_neg: usize,
    clipped: usize,
}

impl DualSampler {
    pub fn from_correlation(k: &OperatorMatrix) -> Result<Self, SamplingError> {
        let hat = hat_k(k);
        let m = hat.matrix();
        let asym = (m - m.transpose()).amax();
        if asym > 1e-8 {
            return Err(SamplingError::Spectrum(format!(
                "symmetrized operator deviates from symmetry by {asym:e}"
            )));
        }
        let sym = (m + m.transpose()) * 0.5;
        let eigen = SymmetricEigen::new(sym);
        let mut values = Vec::with_capacity(eigen.eigenvalues.len());
        let mut clipped = 0;
        for &lambda in eigen.eigenvalues.iter() {
            if !(-CLIP_BAND..=1.0 + CLIP_BAND).contains(&lambda) {
                return Err(SamplingError::Spectrum(format!(
                    "eigenvalue {lambda} of the symmetrized operator is outside \
                     [{}, {}]; the discretized kernel is not a correlation operator",
                    -CLIP_BAND,
                    1.0 + CLIP_BAND
                )));
            }
            if !(0.0..=1.0).contains(&lambda) {
                clipped += 1;
            }
            values.push(lambda.clamp(0.0, 1.0));
        }
        Ok(Self {
            vectors: eigen.eigenvectors,
            values,
            n_neg: k.grid().n_neg(),
            clipped,
        })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Eigenvalues after clipping to `[0, 1]`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.values
    }

    /// How many eigenvalues had to be clipped into `[0, 1]`.
    pub fn clipped(&self) -> usize {
        self.clipped
    }

    /// The symmetrized operator the sampler actually draws from (after any
    /// clipping or rounding), reassembled from its spectral data.
    pub fn hat_matrix(&self) -> DMatrix<f64> {
        let mut scaled = self.vectors.clone();
        for (c, &v) in self.values.iter().enumerate() {
            scaled.column_mut(c).scale_mut(v);
        }
        scaled * self.vectors.transpose()
    }

    /// Round every eigenvalue to the nearest of `{0, 1}`, forcing an exact
    /// projection.  When the correlation matrix is the `L -> K` image of an
    /// antisymmetric matrix, the symmetrized operator is already a projection
    /// of rank `n_neg` up to rounding, and every signed sample is exactly
    /// balanced; for a directly discretized kernel the spectrum is smeared
    /// around `{0, 1}` by quadrature error, and this restores the projection.
    pub fn rounded_to_projection(mut self) -> Self {
        for v in &mut self.values {
            *v = if *v >= 0.5 { 1.0 } else { 0.0 };
        }
        self
    }

    /// One sample of the symmetric (dual) process.
    pub fn sample_dual<R: Rng>(&self, rng: &mut R) -> Configuration {
        let n = self.dim();
        // One Bernoulli draw per eigenvalue, consumed unconditionally so the
        // stream layout is independent of the outcomes.
        let selected: Vec<usize> = (0..n)
            .filter(|&k| rng.gen::<f64>() < self.values[k])
            .collect();
        let mut a = DMatrix::zeros(n, selected.len());
        for (c, &k) in selected.iter().enumerate() {
            a.set_column(c, &self.vectors.column(k));
        }
        let mut points = Vec::with_capacity(selected.len());
        while a.ncols() > 0 {
            let rem = a.ncols();
            let norms: Vec<f64> = (0..n).map(|i| a.row(i).norm_squared()).collect();
            let total: f64 = norms.iter().sum();
            let mut u = rng.gen::<f64>() * total;
            let mut chosen = n - 1;
            for (i, &p) in norms.iter().enumerate() {
                if u < p {
                    chosen = i;
                    break;
                }
                u -= p;
            }
            points.push(chosen);
            if rem == 1 {
                break;
            }
            // Reflect the column space so the chosen row lives entirely in
            // the last column, then drop that column: the remaining columns
            // stay orthonormal and annihilate the chosen row.
            let v = a.row(chosen).transpose();
            let norm = v.norm();
            let mut w: DVector<f64> = v;
            let sign = if w[rem - 1] >= 0.0 { 1.0 } else { -1.0 };
            w[rem - 1] += sign * norm;
            let wn = w.norm();
            if wn > 0.0 {
                w /= wn;
                let aw = &a * &w;
                for i in 0..n {
                    for c in 0..rem {
                        a[(i, c)] -= 2.0 * aw[i] * w[c];
                    }
                }
            }
            a = a.columns(0, rem - 1).into_owned();
            for c in 0..rem - 1 {
                a[(chosen, c)] = 0.0;
            }
        }
        points.sort_unstable();
        Configuration { indices: points }
    }

    /// Particle-hole duality on the negative half-line: the signed sample
    /// keeps the occupied positive nodes and the *unoccupied* negative ones.
    pub fn dualize(&self, dual: &Configuration) -> Configuration {
        let mut indices: Vec<usize> =
            (0..self.n_neg).filter(|&i| !dual.contains(i)).collect();
        indices.extend(dual.indices().iter().copied().filter(|&i| i >= self.n_neg));
        Configuration { indices }
    }

    /// One signed sample.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Configuration {
        let dual = self.sample_dual(rng);
        self.dualize(&dual)
    }

    /// A deterministic batch: sample `index` always uses the stream derived
    /// from `(master_seed, index)`, so the result is identical for any
    /// thread count.
    pub fn sample_batch(&self, master_seed: u64, count: usize) -> SampleBatch {
        let samples: Vec<Configuration> = (0..count)
            .into_par_iter()
            .map(|i| {
                let mut rng = sample_rng(master_seed, i as u64);
                self.sample(&mut rng)
            })
            .collect();
        SampleBatch::new(master_seed, self.dim(), samples)
    }
}

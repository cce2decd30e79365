//! Batches of sampled configurations with a self-validating text format.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use super::{Configuration, SamplingError};

const MAGIC: &str = "JDPPSAMPLES 1";

/// An ordered batch of configurations drawn under one master seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleBatch {
    master_seed: u64,
    dim: usize,
    samples: Vec<Configuration>,
}

impl SampleBatch {
    pub fn new(master_seed: u64, dim: usize, samples: Vec<Configuration>) -> Self {
        Self { master_seed, dim, samples }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    /// Number of grid nodes the samples refer to.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Configuration] {
        &self.samples
    }

    fn body(&self) -> String {
        let mut body = String::new();
        for s in &self.samples {
            let line: Vec<String> = s.indices().iter().map(usize::to_string).collect();
            body.push_str(&line.join(" "));
            body.push('\n');
        }
        body
    }
}

/// Per-node occupation frequencies across the batch.
pub fn inclusion_frequencies(batch: &SampleBatch) -> Vec<f64> {
    let mut counts = vec![0usize; batch.dim()];
    for s in batch.samples() {
        for &i in s.indices() {
            counts[i] += 1;
        }
    }
    let n = batch.len().max(1) as f64;
    counts.into_iter().map(|c| c as f64 / n).collect()
}

/// Write a batch as a line-oriented text file with a SHA-256 fingerprint of
/// the sample lines, so identical batches produce byte-identical files.
pub fn save_batch<P: AsRef<Path>>(path: P, batch: &SampleBatch) -> Result<(), SamplingError> {
    let body = batch.body();
    let fingerprint = hex(&Sha256::digest(body.as_bytes()));
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{MAGIC}")?;
    writeln!(w, "seed {}", batch.master_seed)?;
    writeln!(w, "dim {}", batch.dim)?;
    writeln!(w, "count {}", batch.samples.len())?;
    writeln!(w, "fingerprint {fingerprint}")?;
    w.write_all(body.as_bytes())?;
    w.flush()?;
    Ok(())
}

/// Load a batch saved with [`save_batch`], verifying the fingerprint.
pub fn load_batch<P: AsRef<Path>>(path: P) -> Result<SampleBatch, SamplingError> {
    let mut lines = BufReader::new(File::open(path)?).lines();
    let mut next = || -> Result<String, SamplingError> {
        lines
            .next()
            .transpose()?
            .ok_or_else(|| SamplingError::Format("batch file is truncated".into()))
    };
    if next()? != MAGIC {
        return Err(SamplingError::Format("not a sample batch (bad header)".into()));
    }
    let master_seed: u64 = parse_field(&next()?, "seed")?;
    let dim: usize = parse_field(&next()?, "dim")?;
    let count: usize = parse_field(&next()?, "count")?;
    let fingerprint = {
        let line = next()?;
        line.strip_prefix("fingerprint ")
            .ok_or_else(|| SamplingError::Format("missing fingerprint line".into()))?
            .to_string()
    };
    let mut body = String::new();
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let line = next()?;
        body.push_str(&line);
        body.push('\n');
        let mut indices = Vec::new();
        for token in line.split_ascii_whitespace() {
            let i: usize = token
                .parse()
                .map_err(|_| SamplingError::Format(format!("bad node index `{token}`")))?;
            if i >= dim {
                return Err(SamplingError::Format(format!(
                    "node index {i} out of range for dim {dim}"
                )));
            }
            indices.push(i);
        }
        samples.push(
            Configuration::new(indices)
                .map_err(|_| SamplingError::Format("duplicate index in sample".into()))?,
        );
    }
    if hex(&Sha256::digest(body.as_bytes())) != fingerprint {
        return Err(SamplingError::Format(
            "fingerprint mismatch: batch file is corrupted".into(),
        ));
    }
    Ok(SampleBatch { master_seed, dim, samples })
}

fn parse_field<T: std::str::FromStr>(line: &str, key: &str) -> Result<T, SamplingError> {
    line.strip_prefix(key)
        .map(str::trim)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| SamplingError::Format(format!("expected `{key} <value>`, got `{line}`")))
}

fn hex(digest: &[u8]) -> String {
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

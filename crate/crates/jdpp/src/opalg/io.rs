//! On-disk container for discretized operators and deterministic CSV export.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::sync::Arc;

use nalgebra::DMatrix;

use super::grid::{Grid, GridScheme};
use super::matrix::OperatorMatrix;
use super::OpalgError;

const MAGIC: &[u8; 8] = b"JDPPMAT1";
const VERSION: u32 = 1;

fn scheme_tag(scheme: GridScheme) -> u8 {
    match scheme {
        GridScheme::Uniform => 0,
        GridScheme::GaussLegendrePanels => 1,
        GridScheme::Explicit => 2,
    }
}

fn scheme_from_tag(tag: u8) -> Result<GridScheme, OpalgError> {
    match tag {
        0 => Ok(GridScheme::Uniform),
        1 => Ok(GridScheme::GaussLegendrePanels),
        2 => Ok(GridScheme::Explicit),
        other => Err(OpalgError::Format(format!("unknown grid scheme tag {other}"))),
    }
}

/// Write an operator with its grid to a little-endian binary container.
pub fn save_matrix<P: AsRef<Path>>(path: P, op: &OperatorMatrix) -> Result<(), OpalgError> {
    let grid = op.grid();
    let n = op.dim();
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(n as u64).to_le_bytes())?;
    w.write_all(&(grid.n_neg() as u64).to_le_bytes())?;
    w.write_all(&grid.delta().to_le_bytes())?;
    w.write_all(&[scheme_tag(grid.scheme())])?;
    for &x in grid.nodes() {
        w.write_all(&x.to_le_bytes())?;
    }
    for &x in grid.weights() {
        w.write_all(&x.to_le_bytes())?;
    }
    let m = op.matrix();
    for i in 0..n {
        for j in 0..n {
            w.write_all(&m[(i, j)].to_le_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Load an operator saved with [`save_matrix`], revalidating the grid.
pub fn load_matrix<P: AsRef<Path>>(path: P) -> Result<OperatorMatrix, OpalgError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic).map_err(truncated)?;
    if &magic != MAGIC {
        return Err(OpalgError::Format("not an operator container (bad magic)".into()));
    }
    let version = read_u32(&mut r)?;
    if version != VERSION {
        return Err(OpalgError::Format(format!(
            "unsupported container version {version}, expected {VERSION}"
        )));
    }
    let n = read_u64(&mut r)? as usize;
    let n_neg = read_u64(&mut r)? as usize;
    let delta = read_f64(&mut r)?;
    let mut tag = [0u8; 1];
    r.read_exact(&mut tag).map_err(truncated)?;
    let scheme = scheme_from_tag(tag[0])?;
    if n == 0 || n > (1 << 24) {
        return Err(OpalgError::Format(format!("implausible dimension {n}")));
    }
    let nodes = read_f64_vec(&mut r, n)?;
    let weights = read_f64_vec(&mut r, n)?;
    let entries = read_f64_vec(&mut r, n * n)?;
    let mut trailing = [0u8; 1];
    if r.read(&mut trailing)? != 0 {
        return Err(OpalgError::Format("trailing bytes after matrix data".into()));
    }
    let grid = Grid::from_raw_parts(nodes, weights, n_neg, delta, scheme)?;
    let m = DMatrix::from_row_slice(n, n, &entries);
    OperatorMatrix::from_weighted(m, Arc::new(grid))
}

fn truncated(e: std::io::Error) -> OpalgError {
    if e.kind() == std::io::ErrorKind::UnexpectedEof {
        OpalgError::Format("container is truncated".into())
    } else {
        OpalgError::Io(e)
    }
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32, OpalgError> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf).map_err(truncated)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64, OpalgError> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf).map_err(truncated)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64, OpalgError> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf).map_err(truncated)?;
    Ok(f64::from_le_bytes(buf))
}

fn read_f64_vec<R: Read>(r: &mut R, len: usize) -> Result<Vec<f64>, OpalgError> {
    let mut out = Vec::with_capacity(len);
    let mut buf = [0u8; 8];
    for _ in 0..len {
        r.read_exact(&mut buf).map_err(truncated)?;
        out.push(f64::from_le_bytes(buf));
    }
    Ok(out)
}

/// Write a CSV table with a fixed `{:.17e}` float format, so identical data
/// produces byte-identical files.
pub fn export_csv<P: AsRef<Path>>(
    path: P,
    columns: &[&str],
    rows: &[Vec<f64>],
) -> Result<(), OpalgError> {
    if columns.is_empty() {
        return Err(OpalgError::Config("CSV export needs at least one column".into()));
    }
    if let Some(bad) = rows.iter().find(|row| row.len() != columns.len()) {
        return Err(OpalgError::Config(format!(
            "CSV row has {} fields, expected {}",
            bad.len(),
            columns.len()
        )));
    }
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{}", columns.join(","))?;
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| format!("{v:.17e}")).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    w.flush()?;
    Ok(())
}

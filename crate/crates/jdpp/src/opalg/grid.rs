//! Quadrature grids on the punctured line.

use super::OpalgError;
use crate::quad::{gauss_legendre, scale_to_interval};

/// How the nodes and weights of a [`Grid`] were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScheme {
    Uniform,
    GaussLegendrePanels,
    Explicit,
}

/// Recipe for building a grid.
#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    /// Midpoint rule on `[delta, outer]`, mirrored to the negative side.
    Uniform { nodes_per_side: usize, delta: f64, outer: f64 },
    /// Gauss-Legendre panels with geometrically graded edges on
    /// `[delta, outer]`, mirrored to the negative side.  This resolves both
    /// the origin (where kernels blow up) and the exponential tail.
    GaussLegendrePanels {
        panels_per_side: usize,
        nodes_per_panel: usize,
        delta: f64,
        outer: f64,
    },
    /// Explicit nodes and weights (small validation grids).
    Explicit { nodes: Vec<f64>, weights: Vec<f64> },
}

/// Signed quadrature grid: nodes in ascending order (all negative nodes
/// first), strictly positive weights, and the exclusion radius around the
/// origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    n_neg: usize,
    delta: f64,
    scheme: GridScheme,
}

impl Grid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    /// Sign of node `i` as `+1.0` or `-1.0`.
    pub fn sign(&self, i: usize) -> f64 {
        if i < self.n_neg {
            -1.0
        } else {
            1.0
        }
    }

    /// Number of negative nodes; they occupy indices `0..n_neg`.
    pub fn n_neg(&self) -> usize {
        self.n_neg
    }

    /// Index range of the negative nodes.
    pub fn negative_range(&self) -> std::ops::Range<usize> {
        0..self.n_neg
    }

    /// Index range of the positive nodes.
    pub fn positive_range(&self) -> std::ops::Range<usize> {
        self.n_neg..self.nodes.len()
    }

    /// Exclusion radius around the origin.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn scheme(&self) -> GridScheme {
        self.scheme
    }

    /// Index of the node closest to `x`.
    pub fn nearest_node(&self, x: f64) -> usize {
        let mut best = 0;
        let mut dist = f64::INFINITY;
        for (i, &node) in self.nodes.iter().enumerate() {
            let d = (node - x).abs();
            if d < dist {
                dist = d;
                best = i;
            }
        }
        best
    }

    /// Reassemble a grid from stored parts, revalidating the invariants.
    pub(crate) fn from_raw_parts(
        nodes: Vec<f64>,
        weights: Vec<f64>,
        n_neg: usize,
        delta: f64,
        scheme: GridScheme,
    ) -> Result<Self, OpalgError> {
        if nodes.len() != weights.len() || nodes.is_empty() {
            return Err(OpalgError::Format("node and weight counts disagree".into()));
        }
        if nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(OpalgError::Format("stored nodes are not strictly ascending".into()));
        }
        if nodes.iter().any(|&x| x == 0.0 || !x.is_finite()) {
            return Err(OpalgError::Format("stored nodes must be finite and nonzero".into()));
        }
        if weights.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
            return Err(OpalgError::Format("stored weights must be positive".into()));
        }
        if n_neg != nodes.iter().filter(|&&x| x < 0.0).count() {
            return Err(OpalgError::Format("stored sign split disagrees with the nodes".into()));
        }
        if n_neg == 0 || n_neg == nodes.len() {
            return Err(OpalgError::Format("grid must contain nodes of both signs".into()));
        }
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(OpalgError::Format("stored exclusion radius must be positive".into()));
        }
        Ok(Self { nodes, weights, n_neg, delta, scheme })
    }

    /// The canonical two-point test grid: nodes `{-1, +1}`, unit weights.
    pub fn two_point() -> Self {
        Self {
            nodes: vec![-1.0, 1.0],
            weights: vec![1.0, 1.0],
            n_neg: 1,
            delta: 1.0,
            scheme: GridScheme::Explicit,
        }
    }
}

/// Build a [`Grid`] from a [`GridSpec`].
pub fn build_grid(spec: &GridSpec) -> Result<Grid, OpalgError> {
    match spec {
        GridSpec::Uniform { nodes_per_side, delta, outer } => {
            check_window(*delta, *outer, *nodes_per_side)?;
            let n = *nodes_per_side;
            let h = (outer - delta) / n as f64;
            let mut pos_nodes = Vec::with_capacity(n);
            for i in 0..n {
                pos_nodes.push(delta + (i as f64 + 0.5) * h);
            }
            let pos_weights = vec![h; n];
            Ok(mirror(pos_nodes, pos_weights, *delta, GridScheme::Uniform))
        }
        GridSpec::GaussLegendrePanels { panels_per_side, nodes_per_panel, delta, outer } => {
            check_window(*delta, *outer, panels_per_side * nodes_per_panel)?;
            if *panels_per_side == 0 || *nodes_per_panel == 0 {
                return Err(OpalgError::Config("panels and nodes per panel must be >= 1".into()));
            }
            let (gx, gw) = gauss_legendre(*nodes_per_panel);
            let ratio = (outer / delta).powf(1.0 / *panels_per_side as f64);
            let mut pos_nodes = Vec::new();
            let mut pos_weights = Vec::new();
            let mut edge = *delta;
            for _ in 0..*panels_per_side {
                let next = edge * ratio;
                let (nodes, weights) = scale_to_interval(&gx, &gw, edge, next);
                pos_nodes.extend_from_slice(&nodes);
                pos_weights.extend_from_slice(&weights);
                edge = next;
            }
            Ok(mirror(pos_nodes, pos_weights, *delta, GridScheme::GaussLegendrePanels))
        }
        GridSpec::Explicit { nodes, weights } => {
            if nodes.len() != weights.len() || nodes.is_empty() {
                return Err(OpalgError::Config(
                    "explicit grid needs equally many nodes and weights, at least one".into(),
                ));
            }
            if nodes.iter().any(|&x| x == 0.0 || !x.is_finite()) {
                return Err(OpalgError::Config("explicit nodes must be finite and nonzero".into()));
            }
            if weights.iter().any(|&w| !(w > 0.0)) {
                return Err(OpalgError::Config("explicit weights must be positive".into()));
            }
            let mut paired: Vec<(f64, f64)> =
                nodes.iter().copied().zip(weights.iter().copied()).collect();
            paired.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite nodes"));
            if paired.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(OpalgError::Config("explicit nodes must be distinct".into()));
            }
            let n_neg = paired.iter().filter(|&&(x, _)| x < 0.0).count();
            if n_neg == 0 || n_neg == paired.len() {
                return Err(OpalgError::Config(
                    "grid must contain nodes of both signs".into(),
                ));
            }
            let delta = paired.iter().map(|&(x, _)| x.abs()).fold(f64::INFINITY, f64::min);
            Ok(Grid {
                nodes: paired.iter().map(|&(x, _)| x).collect(),
                weights: paired.iter().map(|&(_, w)| w).collect(),
                n_neg,
                delta,
                scheme: GridScheme::Explicit,
            })
        }
    }
}

fn check_window(delta: f64, outer: f64, nodes: usize) -> Result<(), OpalgError> {
    if !(delta > 0.0) {
        return Err(OpalgError::Config(format!("exclusion radius must be positive, got {delta}")));
    }
    if !(outer > delta) {
        return Err(OpalgError::Config(format!(
            "outer bound must exceed the exclusion radius, got [{delta}, {outer}]"
        )));
    }
    if nodes == 0 {
        return Err(OpalgError::Config("each side needs at least one node".into()));
    }
    Ok(())
}

/// Mirror a positive-side rule to the negative side, producing ascending
/// node order (negatives first).
fn mirror(pos_nodes: Vec<f64>, pos_weights: Vec<f64>, delta: f64, scheme: GridScheme) -> Grid {
    let n = pos_nodes.len();
    let mut nodes = Vec::with_capacity(2 * n);
    let mut weights = Vec::with_capacity(2 * n);
    for i in (0..n).rev() {
        nodes.push(-pos_nodes[i]);
        weights.push(pos_weights[i]);
    }
    nodes.extend_from_slice(&pos_nodes);
    weights.extend_from_slice(&pos_weights);
    Grid { nodes, weights, n_neg: n, delta, scheme }
}

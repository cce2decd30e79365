//! Gauss–Legendre quadrature rules.
//!
//! Nodes and weights are found by Newton iteration on the Legendre
//! polynomial recurrence, which is accurate to machine precision for the
//! modest orders used here (≤ 64 points per panel).

/// Gauss–Legendre nodes and weights on the reference interval `[-1, 1]`.
///
/// Panics if `n == 0`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "quadrature rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Maps a reference rule onto the interval `[lo, hi]`.
pub fn scale_to_interval(nodes: &[f64], weights: &[f64], lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let xs = nodes.iter().map(|&t| mid + half * t).collect();
    let ws = weights.iter().map(|&w| half * w).collect();
    (xs, ws)
}

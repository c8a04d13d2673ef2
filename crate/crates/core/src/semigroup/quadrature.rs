use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

/// Gauss–Legendre nodes and weights mapped to [0, 1].
pub fn gauss_legendre_unit(nodes: usize) -> Vec<(f64, f64)> {
    let rule = GaussLegendre::new(NonZeroUsize::new(nodes.max(1)).unwrap());
    let mut pairs: Vec<(f64, f64)> = rule
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    pairs
}

/// Chebyshev–Lobatto points on [0, t], ascending, with barycentric weights.
pub fn chebyshev_lobatto(t: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let pts = (0..n)
        .map(|j| 0.5 * t * (1.0 - (std::f64::consts::PI * j as f64 / (n - 1) as f64).cos()))
        .collect();
    let w = (0..n)
        .map(|j| {
            let s = if j % 2 == 0 { 1.0 } else { -1.0 };
            if j == 0 || j == n - 1 {
                0.5 * s
            } else {
                s
            }
        })
        .collect();
    (pts, w)
}

/// Barycentric interpolation coefficients at `x` for the given nodes and weights.
pub fn barycentric_row(nodes: &[f64], weights: &[f64], x: f64) -> Vec<f64> {
    let mut row = vec![0.0; nodes.len()];
    if let Some(j) = nodes.iter().position(|&p| p == x) {
        row[j] = 1.0;
        return row;
    }
    let mut denom = 0.0;
    for (j, (&p, &w)) in nodes.iter().zip(weights).enumerate() {
        let c = w / (x - p);
        row[j] = c;
        denom += c;
    }
    for r in row.iter_mut() {
        *r /= denom;
    }
    row
}

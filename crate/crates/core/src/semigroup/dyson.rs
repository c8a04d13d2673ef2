use serde::Serialize;

use super::expm::{expm, ExpFamily};
use super::majorant::{convolve, log_grid, MajorantData, Sampled};
use super::quadrature::{barycentric_row, chebyshev_lobatto, gauss_legendre_unit};
use crate::error::{Error, Result};
use crate::linalg::{op_norm, CMat, RMat, C64};

pub const DEFAULT_QUAD_NODES: usize = 32;
pub const DEFAULT_ORDER: usize = 12;
/// Majorant tails above this value raise a convergence warning.
pub const TAIL_WARNING: f64 = 1e-6;

/// Generator split A + B with truncation depth and quadrature size.
#[derive(Clone, Debug)]
pub struct PerturbationSplit {
    pub a: CMat,
    pub b: CMat,
    pub order: usize,
    pub quad_nodes: usize,
}

impl PerturbationSplit {
    pub fn new(a: CMat, b: CMat, order: usize, quad_nodes: usize) -> Result<Self> {
        if a.nrows() != a.ncols() || b.shape() != a.shape() {
            return Err(Error::Input("A and B must be square of equal size".into()));
        }
        if quad_nodes < 2 {
            return Err(Error::Input("quad_nodes must be at least 2".into()));
        }
        Ok(Self { a, b, order, quad_nodes })
    }

    pub fn dim(&self) -> usize {
        self.a.nrows()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DysonResult {
    pub t: f64,
    pub order: usize,
    #[serde(skip)]
    pub sum: CMat,
    #[serde(skip)]
    pub terms: Vec<CMat>,
    pub per_term_norms: Vec<f64>,
    pub majorant_terms: Vec<f64>,
    pub majorant_tail: f64,
    pub warning: Option<String>,
}

/// Σ_{k≤K} Per^k(e^{−tA}) with Per^k(s) = −∫₀ˢ e^{−(s−r)A} B Per^{k−1}(r) dr,
/// the sign that makes the full series equal e^{−t(A+B)}.
pub fn dyson_phillips(split: &PerturbationSplit, t: f64) -> Result<DysonResult> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Input("t must be positive and finite".into()));
    }
    let terms = dyson_terms(split, t)?;
    let mut sum = CMat::zeros(split.dim(), split.dim());
    for term in &terms {
        sum += term;
    }
    let per_term_norms: Vec<f64> = terms.iter().map(op_norm).collect();
    let (majorant_terms, majorant_tail) = majorant_tail(split, t)?;
    let warning = (majorant_tail > TAIL_WARNING).then(|| {
        format!("majorant tail {:e} at K = {} exceeds {:e}", majorant_tail, split.order, TAIL_WARNING)
    });
    Ok(DysonResult { t, order: split.order, sum, terms, per_term_norms, majorant_terms, majorant_tail, warning })
}

/// Per^k(t) for k = 0..=K on a Chebyshev–Lobatto collocation grid over [0, t].
pub fn dyson_terms(split: &PerturbationSplit, t: f64) -> Result<Vec<CMat>> {
    let n = split.quad_nodes;
    let (x, bw) = chebyshev_lobatto(t, n);
    let q = gauss_legendre_unit(n);
    let family = ExpFamily::new(&split.a)?;
    let grid_exp: Vec<CMat> = x.iter().map(|&s| family.at(s)).collect::<Result<_>>()?;
    if split.order == 0 || split.b.iter().all(|z| *z == C64::new(0.0, 0.0)) {
        let mut out = vec![expm(&(&split.a * C64::new(-t, 0.0)))?];
        out.extend((0..split.order).map(|_| CMat::zeros(split.dim(), split.dim())));
        return Ok(out);
    }
    // kernel[j·q + i] = −x_j w_i e^{−(x_j − s_ji)A} B, interp row j·q + i evaluates at s_ji = x_j ξ_i.
    let nq = q.len();
    let mut kernel = Vec::with_capacity(n * nq);
    let mut interp = RMat::zeros(n * nq, n);
    for (j, &xj) in x.iter().enumerate() {
        for (i, &(xi, w)) in q.iter().enumerate() {
            let s = xj * xi;
            kernel.push(family.at(xj - s)? * &split.b * C64::new(-xj * w, 0.0));
            for (l, c) in barycentric_row(&x, &bw, s).into_iter().enumerate() {
                interp[(j * nq + i, l)] = c;
            }
        }
    }
    let dim = split.dim();
    let dd = dim * dim;
    // Row l of `re`/`im` is Per^{k−1}(x_l) flattened column-major; the
    // interpolation weights are real, so both parts go through a real GEMM.
    let mut re = RMat::zeros(n, dd);
    let mut im = RMat::zeros(n, dd);
    for (l, m) in grid_exp.iter().enumerate() {
        for (c, z) in m.iter().enumerate() {
            re[(l, c)] = z.re;
            im[(l, c)] = z.im;
        }
    }
    let mut terms = vec![grid_exp[n - 1].clone()];
    for _ in 1..=split.order {
        let vre = &interp * &re;
        let vim = &interp * &im;
        let mut last = CMat::zeros(dim, dim);
        for j in 0..n {
            let mut acc = CMat::zeros(dim, dim);
            if x[j] > 0.0 {
                for i in 0..nq {
                    let row = j * nq + i;
                    let v = CMat::from_fn(dim, dim, |r, c| C64::new(vre[(row, c * dim + r)], vim[(row, c * dim + r)]));
                    acc += &kernel[row] * v;
                }
            }
            for (c, z) in acc.iter().enumerate() {
                re[(j, c)] = z.re;
                im[(j, c)] = z.im;
            }
            if j == n - 1 {
                last = acc;
            }
        }
        terms.push(last);
    }
    Ok(terms)
}

/// Majorant terms (φ*ψ^{*k})(t) for k ≤ K and the tail Σ_{k>K}, summed until
/// terms fall below 1e−30 relative or 40 extra terms.
pub fn majorant_tail(split: &PerturbationSplit, t: f64) -> Result<(Vec<f64>, f64)> {
    if split.b.iter().all(|z| *z == C64::new(0.0, 0.0)) {
        let e = expm(&(&split.a * C64::new(-t, 0.0)))?;
        let mut m = vec![op_norm(&e)];
        m.extend(std::iter::repeat(0.0).take(split.order));
        return Ok((m, 0.0));
    }
    let grid = log_grid(t * 1e-6, t, 96);
    let data = MajorantData::from_split(&split.a, &split.b, &grid)?;
    let extra = 40;
    let mut level = data.phi.clone();
    let mut head = vec![level.eval(t)];
    let mut tail = 0.0;
    for k in 1..=split.order + extra {
        level = Sampled::new(grid.clone(), convolve(&level, &data.psi, &grid))?;
        let v = level.eval(t);
        if k <= split.order {
            head.push(v);
            continue;
        }
        tail += v;
        let scale = head.iter().copied().fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        if v < 1e-30 * scale {
            break;
        }
    }
    Ok((head, tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::residual;

    fn scalar(x: f64) -> CMat {
        CMat::from_element(1, 1, C64::new(x, 0.0))
    }

    #[test]
    fn scalar_example() {
        let split = PerturbationSplit::new(scalar(1.0), scalar(0.5), 12, 32).unwrap();
        let r = dyson_phillips(&split, 1.0).unwrap();
        assert!((r.sum[(0, 0)].re - (-1.5f64).exp()).abs() <= 1e-8);
        assert!(r.warning.is_none());
    }

    #[test]
    fn zero_perturbation_is_plain_exponential() {
        let a = CMat::from_fn(3, 3, |i, j| C64::new(if i == j { 1.0 + i as f64 } else { 0.1 }, 0.0));
        let split = PerturbationSplit::new(a.clone(), CMat::zeros(3, 3), 5, 16).unwrap();
        let r = dyson_phillips(&split, 0.7).unwrap();
        assert_eq!(r.sum, expm(&(a * C64::new(-0.7, 0.0))).unwrap());
        assert!(r.per_term_norms[1..].iter().all(|&x| x == 0.0));
        assert_eq!(r.majorant_tail, 0.0);
    }

    #[test]
    fn scalar_terms_are_poisson_weights() {
        let split = PerturbationSplit::new(scalar(1.0), scalar(0.5), 6, 32).unwrap();
        let terms = dyson_terms(&split, 2.0).unwrap();
        let mut fact = 1.0;
        for (k, term) in terms.iter().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            let exact = (-2.0f64).exp() * (-1.0f64).powi(k as i32) / fact;
            assert!(residual(term, &scalar(exact)) < 1e-13, "k={k}");
        }
    }
}

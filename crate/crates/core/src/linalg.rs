//! Small dense linear-algebra helpers shared by all modules.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type RMat = DMatrix<f64>;

pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

pub fn complexify(m: &RMat) -> CMat {
    m.map(|x| C64::new(x, 0.0))
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_real(m: &RMat) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// Largest entrywise difference.
pub fn residual(a: &CMat, b: &CMat) -> f64 {
    assert_eq!(a.shape(), b.shape(), "residual of mismatched shapes");
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

/// Largest entrywise difference scaled by max(1, largest entry of `b`).
pub fn rel_residual(a: &CMat, b: &CMat) -> f64 {
    residual(a, b) / max_abs(b).max(1.0)
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Singular values in descending order; empty for empty matrices.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    s
}

/// Spectral norm.
pub fn op_norm(m: &CMat) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Numerical rank with cutoff `rel * largest singular value`.
pub fn rank(m: &CMat, rel: f64) -> usize {
    let s = singular_values(m);
    match s.first() {
        None => 0,
        Some(&top) if top == 0.0 => 0,
        Some(&top) => s.iter().filter(|&&x| x > rel * top).count(),
    }
}

/// Eigenvalues of a hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Spectrum of an operator that is self-adjoint for `u ↦ u† gram v`.
pub fn spectrum_with_gram(op: &CMat, gram: &CMat) -> Result<Vec<f64>> {
    if op.nrows() == 0 {
        return Ok(Vec::new());
    }
    let chol = gram
        .clone()
        .cholesky()
        .ok_or_else(|| Error::Input("gram matrix is not positive definite".into()))?;
    let l = chol.l();
    let l_adj = l.adjoint();
    let l_adj_inv = l_adj
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Numerical("singular Cholesky factor".into()))?;
    Ok(hermitian_eigenvalues(&(l_adj * op * l_adj_inv)))
}

pub fn inverse(m: &CMat) -> Result<CMat> {
    m.clone()
        .try_inverse()
        .ok_or_else(|| Error::Input("matrix is singular".into()))
}

pub fn is_finite(m: &CMat) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn rank_of_projector() {
        let m = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![ONE, ZERO, ONE]));
        assert_eq!(rank(&m, 1e-12), 2);
        assert_eq!(rank(&CMat::zeros(0, 3), 1e-12), 0);
    }

    #[test]
    fn gram_spectrum_matches_plain_for_identity() {
        let m = complexify(&RMat::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]));
        let ev = spectrum_with_gram(&m, &CMat::identity(2, 2)).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }
}

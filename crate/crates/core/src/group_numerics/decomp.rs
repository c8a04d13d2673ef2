use nalgebra::{Matrix2, Vector2};

use super::element::{row, GroupElement};
use crate::error::{Error, Result};

/// x = n·a·k with n unit upper triangular, a = diag(e^h, e^{−h}), k ∈ SO(2).
#[derive(Clone, Debug, PartialEq)]
pub struct Iwasawa {
    pub n: Matrix2<f64>,
    pub a: Matrix2<f64>,
    pub k: Matrix2<f64>,
    pub h: f64,
}

impl Iwasawa {
    pub fn product(&self) -> Matrix2<f64> {
        self.n * self.a * self.k
    }
}

fn from_triangular(r11: f64, r12: f64, r22: f64, k: Matrix2<f64>) -> Result<Iwasawa> {
    if !(r11 > 0.0 && r22 > 0.0) {
        return Err(Error::Numerical("triangular factor lost positivity".into()));
    }
    Ok(Iwasawa {
        n: Matrix2::new(1.0, r12 / r22, 0.0, 1.0),
        a: Matrix2::new(r11, 0.0, 0.0, r22),
        k,
        h: r11.ln(),
    })
}

/// Orthogonal-triangular path: the Givens rotation that clears x₂₁ from the right.
pub fn iwasawa_nak(x: &GroupElement) -> Result<Iwasawa> {
    let m = x.real()?;
    let (c, d) = (m[(1, 0)], m[(1, 1)]);
    let r = c.hypot(d);
    // G = [[d, −c], [c, d]]/r satisfies x·Gᵀ upper triangular.
    let g = Matrix2::new(d / r, -c / r, c / r, d / r);
    let t = m * g.transpose();
    from_triangular(t[(0, 0)], t[(0, 1)], t[(1, 1)], g)
}

/// Gram–Schmidt path on the rows, bottom row first.
pub fn iwasawa_nak_gram_schmidt(x: &GroupElement) -> Result<Iwasawa> {
    let m = x.real()?;
    let r2 = row(&m, 1);
    let r22 = r2.norm();
    let k2 = r2 / r22;
    let r1 = row(&m, 0);
    let r12 = r1.dot(&k2);
    let w = r1 - k2 * r12;
    let r11 = w.norm();
    let k1 = w / r11;
    let k = Matrix2::from_rows(&[k1.transpose(), k2.transpose()]);
    if k.determinant() < 0.0 {
        return Err(Error::Numerical("row orientation flipped".into()));
    }
    from_triangular(r11, r12, r22, k)
}

/// x = k₁·a⁺·k₂ with a⁺ = diag(σ₁, σ₂), σ₁ ≥ 1 ≥ σ₂.
#[derive(Clone, Debug, PartialEq)]
pub struct Kak {
    pub k1: Matrix2<f64>,
    pub a_plus: Matrix2<f64>,
    pub k2: Matrix2<f64>,
    pub h: f64,
}

impl Kak {
    pub fn product(&self) -> Matrix2<f64> {
        self.k1 * self.a_plus * self.k2
    }
}

pub fn cartan_kak(x: &GroupElement) -> Result<Kak> {
    let m = x.real()?;
    let svd = m.svd(true, true);
    let (mut u, mut vt) = (svd.u.unwrap(), svd.v_t.unwrap());
    let mut s = svd.singular_values;
    if s[0] < s[1] {
        let p = Matrix2::new(0.0, 1.0, 1.0, 0.0);
        u *= p;
        vt = p * vt;
        s = Vector2::new(s[1], s[0]);
    }
    if u.determinant() < 0.0 {
        let f = Matrix2::new(1.0, 0.0, 0.0, -1.0);
        u *= f;
        vt = f * vt;
    }
    Ok(Kak { k1: u, a_plus: Matrix2::new(s[0], 0.0, 0.0, s[1]), k2: vt, h: s[0].ln() })
}

/// |x|_𝔭 = B(X, X)^{1/2} with x = k·exp X, X ∈ 𝔭 and B(X, Y) = 4 tr(XY).
pub fn norm_p(x: &GroupElement) -> Result<f64> {
    let m = x.real()?;
    let s = m.singular_values();
    let top = s[0].max(s[1]);
    if !(top > 0.0) {
        return Err(Error::Numerical("polar factor is not positive definite".into()));
    }
    Ok(8f64.sqrt() * top.ln().abs())
}

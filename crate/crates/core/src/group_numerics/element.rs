use nalgebra::{Matrix2, Vector2};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::C64;

pub const GROUP_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Sl2r,
    Su2,
}

/// Element of SL(2,ℝ) or SU(2) as a 2×2 matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupElement {
    Sl2r(Matrix2<f64>),
    Su2(Matrix2<C64>),
}

impl GroupElement {
    pub fn sl2r(m: Matrix2<f64>) -> Result<Self> {
        if m.iter().any(|x| !x.is_finite()) {
            return Err(Error::Input("matrix has non-finite entries".into()));
        }
        let det = m.determinant();
        if (det - 1.0).abs() > GROUP_TOLERANCE {
            return Err(Error::Input(format!("determinant {} is not 1", det)));
        }
        Ok(Self::Sl2r(m))
    }

    pub fn su2(m: Matrix2<C64>) -> Result<Self> {
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        if (det - C64::new(1.0, 0.0)).norm() > GROUP_TOLERANCE {
            return Err(Error::Input(format!("determinant {} is not 1", det)));
        }
        let u = m.adjoint() * m - Matrix2::identity();
        if u.iter().any(|z| z.norm() > GROUP_TOLERANCE) {
            return Err(Error::Input("matrix is not unitary".into()));
        }
        Ok(Self::Su2(m))
    }

    pub fn model(&self) -> Model {
        match self {
            Self::Sl2r(_) => Model::Sl2r,
            Self::Su2(_) => Model::Su2,
        }
    }

    /// The real matrix, or a model error for SU(2) elements.
    pub fn real(&self) -> Result<Matrix2<f64>> {
        match self {
            Self::Sl2r(m) => Ok(*m),
            Self::Su2(_) => Err(Error::Model("operation is defined for the sl2r model only".into())),
        }
    }
}

pub fn rotation(theta: f64) -> Matrix2<f64> {
    let (s, c) = theta.sin_cos();
    Matrix2::new(c, -s, s, c)
}

pub fn diag(t: f64) -> Matrix2<f64> {
    Matrix2::new(t.exp(), 0.0, 0.0, (-t).exp())
}

pub fn unipotent(u: f64) -> Matrix2<f64> {
    Matrix2::new(1.0, u, 0.0, 1.0)
}

/// k(θ₁)·a(s)·n(u)·k(θ₂) with s, u ∈ [−2, 2].
pub fn random_sl2r(rng: &mut impl Rng) -> Matrix2<f64> {
    let tau = std::f64::consts::TAU;
    rotation(rng.gen_range(0.0..tau))
        * diag(rng.gen_range(-2.0..2.0))
        * unipotent(rng.gen_range(-2.0..2.0))
        * rotation(rng.gen_range(0.0..tau))
}

pub(crate) fn row(m: &Matrix2<f64>, i: usize) -> Vector2<f64> {
    Vector2::new(m[(i, 0)], m[(i, 1)])
}

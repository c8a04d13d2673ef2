//! Heat semigroups on cochain spaces, the Dyson–Phillips series and
//! convolution majorants.

mod dyson;
mod expm;
mod majorant;
mod quadrature;

pub use dyson::{dyson_phillips, dyson_terms, majorant_tail, DysonResult, PerturbationSplit, DEFAULT_ORDER, DEFAULT_QUAD_NODES, TAIL_WARNING};
pub use expm::{expm, ExpFamily};
pub use majorant::{convolution_series, convolve, log_grid, majorant_theta, MajorantData, MajorantReport, Sampled, ThetaRow, DEFAULT_OMEGA_CAP};
pub use quadrature::{barycentric_row, chebyshev_lobatto, gauss_legendre_unit};

use crate::cochain::CochainComplex;
use crate::error::{Error, Result};
use crate::linalg::{kron, CMat, C64};

/// e^{−tΔ_q} v.
pub fn heat_apply(cx: &CochainComplex, q: usize, t: f64, v: &[C64]) -> Result<Vec<C64>> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Input("t must be nonnegative and finite".into()));
    }
    let lap = cx.laplacian(q)?.matrix;
    if v.len() != lap.nrows() {
        return Err(Error::Input(format!("cochain vector has length {}, expected {}", v.len(), lap.nrows())));
    }
    let e = expm(&(lap * C64::new(-t, 0.0)))?;
    let out = e * nalgebra::DVector::from_column_slice(v);
    Ok(out.iter().copied().collect())
}

/// A = Δ₀ ⊗ id on Λ^q, B = Δ_q − A.
pub fn heat_split(cx: &CochainComplex, q: usize, order: usize, quad_nodes: usize) -> Result<PerturbationSplit> {
    let lap = cx.laplacian(q)?.matrix;
    let d = cx.basis(q).scalar_dim();
    let a = kron(&CMat::identity(d, d), &cx.casimir_action());
    let b = lap - &a;
    PerturbationSplit::new(a, b, order, quad_nodes)
}

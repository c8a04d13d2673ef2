use serde::Serialize;

use super::complex::CochainComplex;
use super::LinOp;
use crate::error::{Error, Result};
use crate::linalg::{complexify, kron, max_abs, rel_residual, CMat, RMat, C64};
use crate::uea;

/// Coefficients of B_𝔨 in the two diagonal blocks and of C_𝔭 off the diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KugaCoefficients {
    pub kk_b: f64,
    pub pp_b: f64,
    pub kp_c: f64,
    pub pk_c: f64,
}

/// Coefficients that reproduce the assembled Δ₁.
pub const NORMALIZED: KugaCoefficients = KugaCoefficients { kk_b: 1.0, pp_b: 1.0, kp_c: 1.0, pk_c: 1.0 };
/// Coefficients of the printed block matrix [[A−B+D, −C], [C, A−3B+D]].
pub const PRINTED: KugaCoefficients = KugaCoefficients { kk_b: -1.0, pp_b: -3.0, kp_c: -1.0, pk_c: 1.0 };

/// Blocks of Δ₁ on C¹ = V⊗𝔨* ⊕ V⊗𝔭*; every operator acts on all of C¹.
#[derive(Clone, Debug)]
pub struct KugaBlocks {
    pub a: LinOp,
    pub b_k: LinOp,
    pub c_p: LinOp,
    pub d: LinOp,
    pub k_dim: usize,
    pub laplacian: LinOp,
    pub assembled: CMat,
    pub residual: f64,
    pub printed_residual: f64,
    pub leakage: f64,
}

impl KugaBlocks {
    /// Block operator [[A + kk·B + D, kp·C], [pk·C, A + pp·B + D]] in the 𝔨-first ordering.
    pub fn assemble(&self, c: KugaCoefficients) -> CMat {
        let diag_k = &self.a.matrix + &self.b_k.matrix * C64::new(c.kk_b, 0.0) + &self.d.matrix;
        let diag_p = &self.a.matrix + &self.b_k.matrix * C64::new(c.pp_b, 0.0) + &self.d.matrix;
        let dim = self.a.matrix.nrows();
        let kd = self.k_dim;
        let mut out = CMat::zeros(dim, dim);
        for r in 0..dim {
            for s in 0..dim {
                out[(r, s)] = match (r < kd, s < kd) {
                    (true, true) => diag_k[(r, s)],
                    (false, false) => diag_p[(r, s)],
                    (true, false) => self.c_p.matrix[(r, s)] * c.kp_c,
                    (false, true) => self.c_p.matrix[(r, s)] * c.pk_c,
                };
            }
        }
        out
    }
}

/// A_𝔤, B_𝔨, C_𝔭, D_𝔤 on C¹ and their comparison with the assembled Δ₁.
pub fn kuga_blocks(cx: &CochainComplex) -> Result<KugaBlocks> {
    let frame = &cx.frame;
    let n = cx.n();
    let m = cx.m();
    let form = frame
        .form_adapted
        .as_ref()
        .ok_or_else(|| Error::Form("Kuga blocks need an invariant form on the frame".into()))?;
    let herm = crate::linalg::residual(&cx.rep.gram, &cx.rep.gram.adjoint());
    if herm > 1e-12 * max_abs(&cx.rep.gram).max(1.0) {
        return Err(Error::Input("G_V is not hermitian".into()));
    }
    let a_v = if cx.rep.unitary {
        let om = uea::omega_bar(frame)?;
        -uea::evaluate(&om, frame, &cx.rep.generators)?
    } else {
        cx.casimir_action()
    };
    let a = kron(&CMat::identity(n, n), &a_v);
    let mut b_k = CMat::zeros(n * m, n * m);
    let mut c_p = CMat::zeros(n * m, n * m);
    for i in 0..n {
        let term = kron(&complexify(&frame.cadj_star(i)), &cx.rep.generators[i]);
        if frame.is_k(i) {
            b_k += term;
        } else {
            c_p += term;
        }
    }
    let b_inv = form
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Form("invariant form is singular".into()))?;
    let mut cas = RMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if b_inv[(i, j)] != 0.0 {
                cas += frame.cadj_star(i) * frame.cadj_star(j) * b_inv[(i, j)];
            }
        }
    }
    let d = kron(&complexify(&(cas * 0.5)), &CMat::identity(m, m));
    let laplacian = cx.laplacian(1)?;
    let k_dim = frame.k_indices.len() * m;
    let mut blocks = KugaBlocks {
        a: LinOp::new(a, 1, 1),
        b_k: LinOp::new(b_k, 1, 1),
        c_p: LinOp::new(c_p, 1, 1),
        d: LinOp::new(d, 1, 1),
        k_dim,
        laplacian,
        assembled: CMat::zeros(0, 0),
        residual: 0.0,
        printed_residual: 0.0,
        leakage: 0.0,
    };
    let full = &blocks.a.matrix + &blocks.b_k.matrix + &blocks.c_p.matrix + &blocks.d.matrix;
    let split = blocks.assemble(NORMALIZED);
    blocks.leakage = crate::linalg::residual(&full, &split);
    blocks.residual = rel_residual(&split, &blocks.laplacian.matrix);
    blocks.printed_residual = rel_residual(&blocks.assemble(PRINTED), &blocks.laplacian.matrix);
    blocks.assembled = split;
    Ok(blocks)
}

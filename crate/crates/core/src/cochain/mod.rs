//! The cochain complex C^q(𝔤; V) ≅ V ⊗ Λ^q𝔤*, its differential and adjoint,
//! the Hodge Laplacian and its closed-form components, the □∘ derivation,
//! Kuga blocks on 1-forms and Betti numbers.

mod basis;
mod betti;
mod complex;
mod kuga;

pub use basis::{combinations, derivation, interior, sort_with_sign, wedge_left, CochainBasis};
pub use betti::{betti, betti_table, BettiConfig, BettiResult};
pub use complex::{CochainComplex, Components};
pub use kuga::{kuga_blocks, KugaBlocks, KugaCoefficients, NORMALIZED, PRINTED};

use crate::linalg::CMat;

/// Dense operator C^from → C^to.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOp {
    pub matrix: CMat,
    pub from: usize,
    pub to: usize,
}

impl LinOp {
    pub fn new(matrix: CMat, from: usize, to: usize) -> Self {
        Self { matrix, from, to }
    }

    pub fn rows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.ncols()
    }
}

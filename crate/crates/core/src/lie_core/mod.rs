//! Lie algebra input, invariant forms, Cartan-adapted frames and the
//! adjoint, coadjoint and coadjoint* representations.

mod algebra;
pub mod catalog;
mod frame;
mod module_rep;
mod structure;

pub use algebra::{automorphism_residual, invariance_residual, AlgebraSpec, Check, ValidationReport, DEFAULT_TOLERANCE};
pub use frame::{CartanFrame, FrameKind};
pub use module_rep::ModuleRep;
pub use structure::StructureConstants;

use crate::error::Result;
use crate::linalg::RMat;

pub fn validate_algebra(spec: &AlgebraSpec) -> ValidationReport {
    spec.validate()
}

pub fn killing_form(spec: &AlgebraSpec) -> RMat {
    spec.killing_form()
}

pub fn cartan_frame(spec: &AlgebraSpec, theta: &RMat, b: &RMat) -> Result<CartanFrame> {
    CartanFrame::cartan(spec, theta, b)
}

pub fn ad_matrix(frame: &CartanFrame, i: usize) -> RMat {
    frame.ad(i)
}

pub fn cadj_matrix(frame: &CartanFrame, i: usize) -> RMat {
    frame.cadj(i)
}

pub fn cadj_star_matrix(frame: &CartanFrame, i: usize) -> RMat {
    frame.cadj_star(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &RMat, b: &RMat, tol: f64) -> bool {
        (a - b).abs().max() <= tol
    }

    #[test]
    fn sl2_killing_entries() {
        let b = killing_form(&catalog::sl2r());
        assert_eq!(b[(0, 0)], 8.0);
        assert_eq!(b[(1, 2)], 4.0);
        assert_eq!(b[(2, 1)], 4.0);
        assert_eq!(b[(1, 1)], 0.0);
        assert_eq!(b[(0, 1)], 0.0);
    }

    #[test]
    fn sl2_frame_vectors() {
        let spec = catalog::sl2r();
        let f = CartanFrame::for_spec(&spec).unwrap();
        assert_eq!(f.k_indices, vec![0]);
        assert_eq!(f.p_indices, vec![1, 2]);
        let r8 = 8f64.sqrt();
        let expected = RMat::from_row_slice(3, 3, &[0.0, 1.0 / r8, 0.0, 1.0 / r8, 0.0, 1.0 / r8, -1.0 / r8, 0.0, 1.0 / r8]);
        assert!(close(&f.change_of_basis, &expected, 1e-15), "{}", f.change_of_basis);
    }

    #[test]
    fn abelian_frame_is_input_basis() {
        let spec = catalog::abelian(2)
            .with_involution(RMat::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -1.0])))
            .unwrap()
            .with_form(RMat::from_diagonal(&nalgebra::DVector::from_vec(vec![-1.0, 1.0])))
            .unwrap();
        let f = CartanFrame::for_spec(&spec).unwrap();
        assert_eq!(f.change_of_basis, RMat::identity(2, 2));
        assert_eq!(f.k_indices, vec![0]);
        assert_eq!(f.p_indices, vec![1]);
    }

    #[test]
    fn su2_with_negated_killing_is_frame_error() {
        let spec = catalog::su2();
        let b = -spec.killing_form();
        let err = cartan_frame(&spec, &RMat::identity(3, 3), &b).unwrap_err();
        assert!(matches!(err, crate::Error::Frame(_)), "{err}");
    }

    #[test]
    fn su2_compact_frame_is_scaled_basis() {
        let f = CartanFrame::for_spec(&catalog::su2()).unwrap();
        assert!(close(&f.change_of_basis, &(RMat::identity(3, 3) / 2f64.sqrt()), 1e-15));
        assert_eq!(f.k_indices.len(), 3);
    }

    #[test]
    fn su2_cadj_from_epsilon() {
        // In the input basis (metric frame) cadj(X_1)_{γβ} = ε_{γ1β}.
        let su2 = catalog::su2();
        let f = CartanFrame::metric(&su2, None).unwrap();
        let c = cadj_matrix(&f, 0);
        let eps = |a: usize, b: usize, c: usize| -> f64 {
            match (a, b, c) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
                _ => 0.0,
            }
        };
        for g in 0..3 {
            for b in 0..3 {
                assert_eq!(c[(g, b)], eps(g, 0, b));
            }
        }
    }

    #[test]
    fn abelian_representations_vanish() {
        let f = CartanFrame::for_spec(&catalog::abelian(3)).unwrap();
        for i in 0..3 {
            assert_eq!(ad_matrix(&f, i), RMat::zeros(3, 3));
            assert_eq!(cadj_matrix(&f, i), RMat::zeros(3, 3));
            assert_eq!(cadj_star_matrix(&f, i), RMat::zeros(3, 3));
        }
    }

    #[test]
    fn catalog_specs_validate() {
        for spec in [catalog::su2(), catalog::sl2r(), catalog::heisenberg(), catalog::abelian(3), catalog::oscillator(), catalog::affine()] {
            let r = spec.validate();
            assert!(r.pass, "{:?}", r);
        }
    }

    #[test]
    fn modules_are_homomorphisms() {
        let su2 = catalog::su2();
        let sl2 = catalog::sl2r();
        assert!(ModuleRep::spin_half().homomorphism_residual(&su2.structure) < 1e-15);
        assert!(ModuleRep::spin_half().unitarity_residual() < 1e-15);
        assert!(ModuleRep::sl2_standard().homomorphism_residual(&sl2.structure) < 1e-15);
        let ad = ModuleRep::adjoint(&sl2).unwrap();
        assert!(ad.homomorphism_residual(&sl2.structure) < 1e-15);
        assert!(!ad.unitary);
        assert!(ModuleRep::adjoint(&su2).unwrap().unitary);
    }

    #[test]
    fn frame_module_stays_homomorphic() {
        let spec = catalog::sl2r();
        let f = CartanFrame::for_spec(&spec).unwrap();
        let rep = ModuleRep::adjoint(&spec).unwrap().in_frame(&f).unwrap();
        assert!(rep.homomorphism_residual(&f.structure_adapted) < 1e-14);
    }
}

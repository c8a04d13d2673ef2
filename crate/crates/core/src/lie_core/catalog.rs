//! Built-in algebras used by tests, the CLI corpus and the bindings.

use super::algebra::{AlgebraSpec, DEFAULT_TOLERANCE};
use super::structure::StructureConstants;
use crate::linalg::RMat;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// su(2) with [X_i, X_j] = ε_ijk X_k, θ = id and B = Killing (B^θ = −B = 2·id).
pub fn su2() -> AlgebraSpec {
    let s = StructureConstants::from_brackets(3, &[(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, 1.0)]);
    let b = s.killing();
    AlgebraSpec::new(labels(&["X1", "X2", "X3"]), s, Some(RMat::identity(3, 3)), Some(b), DEFAULT_TOLERANCE)
        .expect("su2 spec")
}

/// sl(2,ℝ) in the basis (H, E, F), θ(X) = −Xᵀ, B = Killing.
pub fn sl2r() -> AlgebraSpec {
    let s = StructureConstants::from_brackets(3, &[(0, 1, 1, 2.0), (0, 2, 2, -2.0), (1, 2, 0, 1.0)]);
    let theta = RMat::from_row_slice(3, 3, &[-1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, -1.0, 0.0]);
    let b = s.killing();
    AlgebraSpec::new(labels(&["H", "E", "F"]), s, Some(theta), Some(b), DEFAULT_TOLERANCE).expect("sl2 spec")
}

/// Heisenberg algebra h₃: [X, Y] = Z.
pub fn heisenberg() -> AlgebraSpec {
    let s = StructureConstants::from_brackets(3, &[(0, 1, 2, 1.0)]);
    AlgebraSpec::new(labels(&["X", "Y", "Z"]), s, None, None, DEFAULT_TOLERANCE).expect("h3 spec")
}

/// Abelian ℝⁿ with θ = id and B = −id, so the frame is the input basis.
pub fn abelian(n: usize) -> AlgebraSpec {
    let names: Vec<String> = (1..=n).map(|i| format!("X{}", i)).collect();
    AlgebraSpec::new(
        names,
        StructureConstants::zeros(n),
        Some(RMat::identity(n, n)),
        Some(-RMat::identity(n, n)),
        DEFAULT_TOLERANCE,
    )
    .expect("abelian spec")
}

/// Oscillator algebra (X, Y, Z, N): h₃ extended by a rotation N, with the
/// nondegenerate invariant form B(X,X) = B(Y,Y) = B(Z,N) = 1.
pub fn oscillator() -> AlgebraSpec {
    let s = StructureConstants::from_brackets(4, &[(0, 1, 2, 1.0), (3, 0, 1, 1.0), (3, 1, 0, -1.0)]);
    let b = RMat::from_row_slice(
        4,
        4,
        &[1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0],
    );
    AlgebraSpec::new(labels(&["X", "Y", "Z", "N"]), s, None, Some(b), DEFAULT_TOLERANCE).expect("oscillator spec")
}

/// Non-unimodular ax+b algebra: [A, B] = B.
pub fn affine() -> AlgebraSpec {
    let s = StructureConstants::from_brackets(2, &[(0, 1, 1, 1.0)]);
    AlgebraSpec::new(labels(&["A", "B"]), s, None, None, DEFAULT_TOLERANCE).expect("affine spec")
}

/// Looks up a built-in algebra by name.
pub fn by_name(name: &str) -> Option<AlgebraSpec> {
    match name {
        "su2" => Some(su2()),
        "sl2r" | "sl2" => Some(sl2r()),
        "heisenberg" | "h3" => Some(heisenberg()),
        "oscillator" => Some(oscillator()),
        "affine" => Some(affine()),
        _ => name
            .strip_prefix("abelian")
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k > 0)
            .map(abelian),
    }
}

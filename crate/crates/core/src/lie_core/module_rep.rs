use super::algebra::AlgebraSpec;
use super::frame::CartanFrame;
use super::structure::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{complexify, inverse, max_abs, CMat, RMat, C64, ZERO};

/// Finite-dimensional module: generator matrices τ(X_i) and a hermitian form G_V.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub generators: Vec<CMat>,
    pub gram: CMat,
    pub unitary: bool,
}

impl ModuleRep {
    pub fn new(generators: Vec<CMat>, gram: CMat, unitary: bool) -> Result<Self> {
        let m = gram.nrows();
        if m == 0 || gram.ncols() != m {
            return Err(Error::Input("gram must be a nonempty square matrix".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.shape() != (m, m) {
                return Err(Error::Input(format!("generator {} is not {}x{}", i + 1, m, m)));
            }
            if !crate::linalg::is_finite(g) {
                return Err(Error::Input(format!("generator {} has non-finite entries", i + 1)));
            }
        }
        let herm = crate::linalg::residual(&gram, &gram.adjoint());
        if herm > 1e-12 * max_abs(&gram).max(1.0) {
            return Err(Error::Input(format!("gram is not hermitian (residual {:e})", herm)));
        }
        if gram.clone().cholesky().is_none() {
            return Err(Error::Input("gram is not positive definite".into()));
        }
        Ok(Self { generators, gram, unitary })
    }

    pub fn dim_v(&self) -> usize {
        self.gram.nrows()
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    /// Trivial one-dimensional module.
    pub fn trivial(n: usize) -> Self {
        Self {
            generators: vec![CMat::zeros(1, 1); n],
            gram: CMat::identity(1, 1),
            unitary: true,
        }
    }

    /// Complexified adjoint module in the input basis; G_V is B^θ = −B∘θ when the
    /// spec carries Cartan data, the identity otherwise.
    pub fn adjoint(spec: &AlgebraSpec) -> Result<Self> {
        let n = spec.dim();
        let gens: Vec<CMat> = (0..n).map(|i| complexify(&spec.structure.ad(i))).collect();
        let gram = match (&spec.involution, &spec.form) {
            (Some(t), Some(b)) => {
                let g = -(b * t);
                (&g + g.transpose()) * 0.5
            }
            _ => RMat::identity(n, n),
        };
        let mut rep = Self::new(gens, complexify(&gram), false)?;
        rep.unitary = rep.unitarity_residual() <= 1e-12;
        Ok(rep)
    }

    /// su(2) spin-½ module τ(X_j) = −(i/2)σ_j for the ε basis.
    pub fn spin_half() -> Self {
        let i = C64::new(0.0, 1.0);
        let h = C64::new(0.5, 0.0);
        let s1 = CMat::from_row_slice(2, 2, &[ZERO, C64::new(1.0, 0.0), C64::new(1.0, 0.0), ZERO]);
        let s2 = CMat::from_row_slice(2, 2, &[ZERO, -i, i, ZERO]);
        let s3 = CMat::from_row_slice(2, 2, &[C64::new(1.0, 0.0), ZERO, ZERO, C64::new(-1.0, 0.0)]);
        let gens = [s1, s2, s3].iter().map(|s| s * (-i * h)).collect();
        Self { generators: gens, gram: CMat::identity(2, 2), unitary: true }
    }

    /// Defining two-dimensional module of sl(2) in the basis (H, E, F).
    pub fn sl2_standard() -> Self {
        let r = |a: f64, b: f64, c: f64, d: f64| complexify(&RMat::from_row_slice(2, 2, &[a, b, c, d]));
        Self {
            generators: vec![r(1.0, 0.0, 0.0, -1.0), r(0.0, 1.0, 0.0, 0.0), r(0.0, 0.0, 1.0, 0.0)],
            gram: CMat::identity(2, 2),
            unitary: false,
        }
    }

    /// τ(X)* = G_V⁻¹ τ(X)† G_V.
    pub fn star(&self, i: usize) -> CMat {
        let g_inv = inverse(&self.gram).expect("gram is positive definite");
        g_inv * self.generators[i].adjoint() * &self.gram
    }

    pub fn stars(&self) -> Vec<CMat> {
        let g_inv = inverse(&self.gram).expect("gram is positive definite");
        self.generators.iter().map(|t| &g_inv * t.adjoint() * &self.gram).collect()
    }

    /// max |τ([X_i, X_j]) − [τ(X_i), τ(X_j)]|.
    pub fn homomorphism_residual(&self, s: &StructureConstants) -> f64 {
        let n = self.n_generators();
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut lhs = CMat::zeros(self.dim_v(), self.dim_v());
                for k in 0..n {
                    let c = s.get(i, j, k);
                    if c != 0.0 {
                        lhs += &self.generators[k] * C64::new(c, 0.0);
                    }
                }
                let rhs = &self.generators[i] * &self.generators[j]
                    - &self.generators[j] * &self.generators[i];
                r = r.max(max_abs(&(lhs - rhs)));
            }
        }
        r
    }

    /// max |τ(X)† G_V + G_V τ(X)|.
    pub fn unitarity_residual(&self) -> f64 {
        self.generators
            .iter()
            .map(|t| max_abs(&(t.adjoint() * &self.gram + &self.gram * t)))
            .fold(0.0, f64::max)
    }

    /// Generators restated on the adapted basis: τ(Y_a) = Σ_i P[i, a] τ(X_i).
    pub fn in_frame(&self, frame: &CartanFrame) -> Result<Self> {
        let n = frame.dim();
        if self.n_generators() != n {
            return Err(Error::Input(format!(
                "module has {} generators, algebra has dimension {}",
                self.n_generators(),
                n
            )));
        }
        let p = &frame.change_of_basis;
        let gens = (0..n)
            .map(|a| {
                let mut t = CMat::zeros(self.dim_v(), self.dim_v());
                for i in 0..n {
                    if p[(i, a)] != 0.0 {
                        t += &self.generators[i] * C64::new(p[(i, a)], 0.0);
                    }
                }
                t
            })
            .collect();
        Ok(Self { generators: gens, gram: self.gram.clone(), unitary: self.unitary })
    }
}

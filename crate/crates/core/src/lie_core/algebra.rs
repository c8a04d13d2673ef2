use serde::Serialize;

use super::structure::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::RMat;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// One named residual compared against its threshold.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, residual: f64, threshold: f64) -> Self {
        Self {
            name: name.to_string(),
            residual,
            threshold,
            pass: residual <= threshold,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ValidationReport {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self { checks, pass }
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.residual)
    }
}

/// A real Lie algebra given by structure constants in an input basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub labels: Vec<String>,
    pub structure: StructureConstants,
    pub involution: Option<RMat>,
    pub form: Option<RMat>,
    pub tolerance: f64,
}

impl AlgebraSpec {
    pub fn new(
        labels: Vec<String>,
        structure: StructureConstants,
        involution: Option<RMat>,
        form: Option<RMat>,
        tolerance: f64,
    ) -> Result<Self> {
        let n = structure.dim();
        if n == 0 {
            return Err(Error::Input("dimension must be at least 1".into()));
        }
        if labels.len() != n {
            return Err(Error::Input(format!("expected {} labels, got {}", n, labels.len())));
        }
        if !(tolerance >= 0.0) {
            return Err(Error::Input("tolerance must be nonnegative".into()));
        }
        for (name, m) in [("involution", &involution), ("form", &form)] {
            if let Some(m) = m {
                if m.shape() != (n, n) {
                    return Err(Error::Input(format!("{} must be {}x{}", name, n, n)));
                }
                if m.iter().any(|x| !x.is_finite()) {
                    return Err(Error::Input(format!("{} has non-finite entries", name)));
                }
            }
        }
        Ok(Self { labels, structure, involution, form, tolerance })
    }

    /// Builds a spec from 1-based `(i, j, k, c)` entries taken literally.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, f64)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(entries.len());
        for &(i, j, k, c) in entries {
            if i == 0 || j == 0 || k == 0 {
                return Err(Error::Input("structure indices are 1-based".into()));
            }
            zero_based.push((i - 1, j - 1, k - 1, c));
        }
        let structure = StructureConstants::from_entries(dim, &zero_based)?;
        let labels = labels.unwrap_or_else(|| (1..=dim).map(|i| format!("X{}", i)).collect());
        Self::new(labels, structure, None, None, DEFAULT_TOLERANCE)
    }

    pub fn with_involution(mut self, theta: RMat) -> Result<Self> {
        self.involution = Some(theta);
        Self::new(self.labels, self.structure, self.involution, self.form, self.tolerance)
    }

    pub fn with_form(mut self, form: RMat) -> Result<Self> {
        self.form = Some(form);
        Self::new(self.labels, self.structure, self.involution, self.form, self.tolerance)
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    /// Residual thresholds are relative to the largest structure constant.
    pub fn threshold(&self) -> f64 {
        self.tolerance * self.structure.max_abs().max(1.0)
    }

    pub fn killing_form(&self) -> RMat {
        self.structure.killing()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let thr = self.threshold();
        let s = &self.structure;
        let mut checks = vec![
            Check::new("antisymmetry", s.antisymmetry_residual(), thr),
            Check::new("jacobi", s.jacobi_residual(), thr),
        ];
        if let Some(theta) = &self.involution {
            let sq = (theta * theta - RMat::identity(n, n)).abs().max();
            checks.push(Check::new("involution_square", sq, thr));
            checks.push(Check::new("involution_automorphism", automorphism_residual(s, theta), thr));
        }
        if let Some(b) = &self.form {
            checks.push(Check::new("form_symmetry", (b - b.transpose()).abs().max(), thr));
            checks.push(Check::new("form_invariance", invariance_residual(s, b), thr));
        }
        ValidationReport::from_checks(checks)
    }
}

/// max |θ[X_i, X_j] − [θX_i, θX_j]|.
pub fn automorphism_residual(s: &StructureConstants, theta: &RMat) -> f64 {
    let n = s.dim();
    let cols: Vec<Vec<f64>> = (0..n).map(|i| theta.column(i).iter().copied().collect()).collect();
    let mut r: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs_in: Vec<f64> = (0..n).map(|k| s.get(i, j, k)).collect();
            let lhs = theta * nalgebra::DVector::from_vec(lhs_in);
            let rhs = s.bracket(&cols[i], &cols[j]);
            for k in 0..n {
                r = r.max((lhs[k] - rhs[k]).abs());
            }
        }
    }
    r
}

/// max |B([X_i, X_j], X_k) + B(X_j, [X_i, X_k])|.
pub fn invariance_residual(s: &StructureConstants, b: &RMat) -> f64 {
    let n = s.dim();
    let mut r: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut v = 0.0;
                for m in 0..n {
                    v += s.get(i, j, m) * b[(m, k)] + s.get(i, k, m) * b[(j, m)];
                }
                r = r.max(v.abs());
            }
        }
    }
    r
}

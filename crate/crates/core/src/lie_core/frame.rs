use serde::Serialize;

use super::algebra::{AlgebraSpec, Check, ValidationReport};
use super::structure::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::RMat;

/// How the orthonormal frame was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameKind {
    /// θ-adapted and orthonormal for B^θ(X, Y) = −B(X, θY).
    Cartan,
    /// Orthonormal for a supplied metric, no 𝔨/𝔭 splitting (every index is in I_𝔨).
    Metric,
}

/// Orthonormal adapted basis Y_a = Σ_i P[i, a] X_i with 𝔨 indices first.
#[derive(Clone, Debug)]
pub struct CartanFrame {
    pub kind: FrameKind,
    pub labels: Vec<String>,
    pub change_of_basis: RMat,
    pub k_indices: Vec<usize>,
    pub p_indices: Vec<usize>,
    pub structure_adapted: StructureConstants,
    pub form_adapted: Option<RMat>,
    pub metric: RMat,
    pub tolerance: f64,
}

fn b_norm2(m: &RMat, v: &nalgebra::DVector<f64>) -> f64 {
    (v.transpose() * m * v)[(0, 0)]
}

/// Gram–Schmidt of `candidates` against `accepted` for the metric `m`.
/// Vectors whose residual norm falls below `drop` are discarded.
fn gram_schmidt(
    m: &RMat,
    candidates: impl Iterator<Item = nalgebra::DVector<f64>>,
    accepted: &mut Vec<nalgebra::DVector<f64>>,
    drop: f64,
) -> usize {
    let mut added = 0;
    for mut v in candidates {
        let scale = b_norm2(m, &v).abs().sqrt();
        if scale <= drop {
            continue;
        }
        for _ in 0..2 {
            for u in accepted.iter() {
                let c = (u.transpose() * m * &v)[(0, 0)];
                v -= u * c;
            }
        }
        let nrm2 = b_norm2(m, &v);
        if nrm2 <= (drop * scale.max(1.0)).powi(2) {
            continue;
        }
        accepted.push(v / nrm2.sqrt());
        added += 1;
    }
    added
}

impl CartanFrame {
    /// θ-adapted frame orthonormal for B^θ = −B∘θ.
    pub fn cartan(spec: &AlgebraSpec, theta: &RMat, b: &RMat) -> Result<Self> {
        let n = spec.dim();
        let thr = spec.threshold();
        if theta.shape() != (n, n) || b.shape() != (n, n) {
            return Err(Error::Input("involution and form must be n x n".into()));
        }
        let sq = (theta * theta - RMat::identity(n, n)).abs().max();
        if sq > thr {
            return Err(Error::Input(format!("θ² ≠ identity (residual {:e})", sq)));
        }
        let bt = -(b * theta);
        let bt = (&bt + bt.transpose()) * 0.5;
        let eig = bt.clone().symmetric_eigenvalues();
        let min_ev = eig.iter().copied().fold(f64::INFINITY, f64::min);
        if min_ev <= thr {
            return Err(Error::Frame(format!(
                "B^θ is not positive definite (smallest eigenvalue {:e}); θ is not a Cartan involution for B",
                min_ev
            )));
        }
        let plus = (RMat::identity(n, n) + theta) * 0.5;
        let minus = (RMat::identity(n, n) - theta) * 0.5;
        let drop = 1e-8;
        let mut basis = Vec::new();
        let nk = gram_schmidt(&bt, plus.column_iter().map(|c| c.into_owned()), &mut basis, drop);
        let np = gram_schmidt(&bt, minus.column_iter().map(|c| c.into_owned()), &mut basis, drop);
        if nk + np != n {
            return Err(Error::Input(format!(
                "θ eigenspaces span dimension {} instead of {}",
                nk + np,
                n
            )));
        }
        let p = RMat::from_columns(&basis);
        Self::finish(spec, FrameKind::Cartan, p, nk, Some(b), &bt)
    }

    /// Orthonormal frame for a metric on 𝔤 (identity when `None`), without 𝔨/𝔭 splitting.
    pub fn metric(spec: &AlgebraSpec, metric: Option<&RMat>) -> Result<Self> {
        let n = spec.dim();
        let g = metric.cloned().unwrap_or_else(|| RMat::identity(n, n));
        if g.shape() != (n, n) {
            return Err(Error::Input("metric must be n x n".into()));
        }
        let eig = g.clone().symmetric_eigenvalues();
        if eig.iter().any(|&e| e <= 0.0) {
            return Err(Error::Frame("metric is not positive definite".into()));
        }
        let mut basis = Vec::new();
        let added = gram_schmidt(
            &g,
            RMat::identity(n, n).column_iter().map(|c| c.into_owned()),
            &mut basis,
            1e-12,
        );
        if added != n {
            return Err(Error::Numerical("metric Gram–Schmidt lost rank".into()));
        }
        let p = RMat::from_columns(&basis);
        Self::finish(spec, FrameKind::Metric, p, n, spec.form.as_ref(), &g)
    }

    /// Cartan frame when the spec carries θ and B, identity-metric frame otherwise.
    pub fn for_spec(spec: &AlgebraSpec) -> Result<Self> {
        match (&spec.involution, &spec.form) {
            (Some(t), Some(b)) => Self::cartan(spec, t, b),
            _ => Self::metric(spec, None),
        }
    }

    fn finish(
        spec: &AlgebraSpec,
        kind: FrameKind,
        p: RMat,
        nk: usize,
        form: Option<&RMat>,
        metric_input: &RMat,
    ) -> Result<Self> {
        let n = spec.dim();
        let structure_adapted = spec.structure.transform(&p)?;
        let form_adapted = form.map(|b| p.transpose() * b * &p);
        let metric = p.transpose() * metric_input * &p;
        let frame = Self {
            kind,
            labels: spec.labels.clone(),
            change_of_basis: p,
            k_indices: (0..nk).collect(),
            p_indices: (nk..n).collect(),
            structure_adapted,
            form_adapted,
            metric,
            tolerance: spec.tolerance,
        };
        let report = frame.check();
        if !report.pass {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{} ({:e})", c.name, c.residual))
                .collect();
            return Err(Error::Frame(format!("frame invariants fail: {}", failed.join(", "))));
        }
        Ok(frame)
    }

    pub fn dim(&self) -> usize {
        self.structure_adapted.dim()
    }

    pub fn threshold(&self) -> f64 {
        self.tolerance * self.structure_adapted.max_abs().max(1.0)
    }

    pub fn is_k(&self, i: usize) -> bool {
        self.k_indices.contains(&i)
    }

    /// ad(Y_i): columns [Y_i, Y_j].
    pub fn ad(&self, i: usize) -> RMat {
        self.structure_adapted.ad(i)
    }

    /// cadj(Y_i) on dual coordinates: entry (γ, β) = C^β_{γi}.
    pub fn cadj(&self, i: usize) -> RMat {
        let s = &self.structure_adapted;
        RMat::from_fn(self.dim(), self.dim(), |g, b| s.get(g, i, b))
    }

    /// Metric adjoint of cadj(Y_i); the transpose in an orthonormal frame.
    pub fn cadj_star(&self, i: usize) -> RMat {
        let g_inv = self.metric.clone().try_inverse().expect("frame metric is invertible");
        &g_inv * self.cadj(i).transpose() * &self.metric
    }

    /// max_i |flat∘ad(Y_i) + cadj*(Y_i)∘flat| with flat the frame metric.
    pub fn musical_residual(&self) -> f64 {
        (0..self.dim())
            .map(|i| (&self.metric * self.ad(i) + self.cadj_star(i) * &self.metric).abs().max())
            .fold(0.0, f64::max)
    }

    /// Residual of cadj = −cadj* on 𝔨 and cadj = cadj* on 𝔭.
    pub fn cadj_relation_residual(&self) -> f64 {
        (0..self.dim())
            .map(|i| {
                let s = if self.is_k(i) { 1.0 } else { -1.0 };
                (self.cadj(i) + self.cadj_star(i) * s).abs().max()
            })
            .fold(0.0, f64::max)
    }

    /// [𝔨,𝔨] ⊆ 𝔨, [𝔨,𝔭] ⊆ 𝔭, [𝔭,𝔭] ⊆ 𝔨.
    pub fn inclusion_residual(&self) -> f64 {
        let n = self.dim();
        let s = &self.structure_adapted;
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let target_k = self.is_k(i) == self.is_k(j);
                for k in 0..n {
                    if self.is_k(k) != target_k {
                        r = r.max(s.get(i, j, k).abs());
                    }
                }
            }
        }
        r
    }

    /// C^β_{αi} = C^α_{iβ} = −C^i_{βα}, C^k_{ij} = C^i_{jk}, C^i_{αj} = 0.
    pub fn symmetry_residual(&self) -> f64 {
        let s = &self.structure_adapted;
        let (ks, ps) = (&self.k_indices, &self.p_indices);
        let mut r: f64 = 0.0;
        for &i in ks {
            for &a in ps {
                for &b in ps {
                    let x = s.get(a, i, b);
                    r = r.max((x - s.get(i, b, a)).abs());
                    r = r.max((x + s.get(b, a, i)).abs());
                }
            }
            for &j in ks {
                for &k in ks {
                    r = r.max((s.get(i, j, k) - s.get(j, k, i)).abs());
                }
                for &a in ps {
                    r = r.max(s.get(a, j, i).abs());
                }
            }
        }
        r
    }

    pub fn gram_residual(&self) -> f64 {
        (&self.metric - RMat::identity(self.dim(), self.dim())).abs().max()
    }

    pub fn check(&self) -> ValidationReport {
        let thr = self.threshold();
        let mut checks = vec![
            Check::new("gram_identity", self.gram_residual(), thr),
            Check::new("musical_identity", self.musical_residual(), thr),
        ];
        if self.kind == FrameKind::Cartan {
            checks.push(Check::new("bracket_inclusions", self.inclusion_residual(), thr));
            checks.push(Check::new("structural_symmetries", self.symmetry_residual(), thr));
            checks.push(Check::new("cadj_relation", self.cadj_relation_residual(), thr));
        }
        ValidationReport::from_checks(checks)
    }
}

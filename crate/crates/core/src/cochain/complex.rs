use super::basis::{derivation, interior, wedge_left, wedge_tuples, CochainBasis};
use super::LinOp;
use crate::error::{Error, Result};
use crate::lie_core::{CartanFrame, ModuleRep};
use crate::linalg::{complexify, inverse, kron, max_abs, CMat, RMat, C64};

/// The four closed-form Laplacian components on C^q.
#[derive(Clone, Debug)]
pub struct Components {
    pub circ: LinOp,
    pub wedge: LinOp,
    pub circ_wedge: LinOp,
    pub wedge_circ: LinOp,
}

impl Components {
    pub fn sum(&self) -> CMat {
        &self.circ.matrix + &self.wedge.matrix + &self.circ_wedge.matrix + &self.wedge_circ.matrix
    }
}

/// C^•(𝔤; V) over an orthonormal frame, with V restated on the adapted basis.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub frame: CartanFrame,
    pub rep: ModuleRep,
    bases: Vec<CochainBasis>,
    stars: Vec<CMat>,
}

fn add_block(mat: &mut CMat, r: usize, c: usize, block: &CMat, coef: C64) {
    let m = block.nrows();
    for a in 0..m {
        for b in 0..m {
            mat[(r * m + a, c * m + b)] += block[(a, b)] * coef;
        }
    }
}

fn add_identity(mat: &mut CMat, r: usize, c: usize, m: usize, coef: f64) {
    for a in 0..m {
        mat[(r * m + a, c * m + a)] += C64::new(coef, 0.0);
    }
}

fn parity(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn without(t: &[usize], skip: &[usize]) -> Vec<usize> {
    t.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, &x)| x)
        .collect()
}

impl CochainComplex {
    /// `rep` is given on the input basis and restated on the frame.
    pub fn new(frame: &CartanFrame, rep: &ModuleRep) -> Result<Self> {
        let adapted = rep.in_frame(frame)?;
        Self::from_adapted(frame, adapted)
    }

    /// `rep` already expressed on the adapted basis.
    pub fn from_adapted(frame: &CartanFrame, rep: ModuleRep) -> Result<Self> {
        let n = frame.dim();
        if rep.n_generators() != n {
            return Err(Error::Input(format!(
                "module has {} generators, algebra has dimension {}",
                rep.n_generators(),
                n
            )));
        }
        inverse(&rep.gram).map_err(|_| Error::Input("G_V is singular".into()))?;
        let bases = (0..=n + 1).map(|q| CochainBasis::new(n, q, rep.dim_v(), &frame.k_indices)).collect();
        let stars = rep.stars();
        Ok(Self { frame: frame.clone(), rep, bases, stars })
    }

    pub fn n(&self) -> usize {
        self.frame.dim()
    }

    pub fn m(&self) -> usize {
        self.rep.dim_v()
    }

    pub fn basis(&self, q: usize) -> &CochainBasis {
        &self.bases[q]
    }

    pub fn dim(&self, q: usize) -> usize {
        self.bases.get(q).map(|b| b.dim()).unwrap_or(0)
    }

    fn check(&self, q: usize) -> Result<()> {
        if q > self.n() {
            Err(Error::Input(format!("degree {} outside 0..={}", q, self.n())))
        } else {
            Ok(())
        }
    }

    /// Induced inner product I ⊗ G_V on C^q.
    pub fn gram(&self, q: usize) -> CMat {
        kron(&CMat::identity(self.bases[q].scalar_dim(), self.bases[q].scalar_dim()), &self.rep.gram)
    }

    fn gram_inv(&self, q: usize) -> CMat {
        let g_inv = inverse(&self.rep.gram).expect("checked at construction");
        kron(&CMat::identity(self.bases[q].scalar_dim(), self.bases[q].scalar_dim()), &g_inv)
    }

    /// Module part of d: (d∘η)_J = Σ_u (−1)^u τ(X_{j_u}) η_{J(u)}.
    pub fn d_circ(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let (src, dst) = (&self.bases[q], &self.bases[q + 1]);
        let mut mat = CMat::zeros(dst.dim(), src.dim());
        for (r, t) in dst.tuples.iter().enumerate() {
            for u in 0..t.len() {
                let c = src.position(&without(t, &[u])).expect("subtuple is canonical");
                add_block(&mut mat, r, c, &self.rep.generators[t[u]], C64::new(parity(u), 0.0));
            }
        }
        Ok(LinOp::new(mat, q, q + 1))
    }

    /// Bracket part of d: (d∧η)_J = Σ_{a<b} (−1)^{a+b} Σ_j C^j_{j_a j_b} η_{(j, J(a,b))}.
    pub fn d_wedge(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let s = &self.frame.structure_adapted;
        let (src, dst) = (&self.bases[q], &self.bases[q + 1]);
        let m = self.m();
        let mut mat = CMat::zeros(dst.dim(), src.dim());
        for (r, t) in dst.tuples.iter().enumerate() {
            for a in 0..t.len() {
                for b in a + 1..t.len() {
                    let rest = without(t, &[a, b]);
                    for j in 0..self.n() {
                        let c = s.get(t[a], t[b], j);
                        if c == 0.0 {
                            continue;
                        }
                        let mut v = vec![j];
                        v.extend_from_slice(&rest);
                        if let Some((col, sg)) = src.locate(&v) {
                            add_identity(&mut mat, r, col, m, parity(a + b) * c * sg);
                        }
                    }
                }
            }
        }
        Ok(LinOp::new(mat, q, q + 1))
    }

    pub fn d_parts(&self, q: usize) -> Result<(LinOp, LinOp)> {
        Ok((self.d_circ(q)?, self.d_wedge(q)?))
    }

    pub fn d_full(&self, q: usize) -> Result<LinOp> {
        let (a, b) = self.d_parts(q)?;
        Ok(LinOp::new(a.matrix + b.matrix, q, q + 1))
    }

    fn adjoint_of(&self, d: &LinOp) -> LinOp {
        let (q, q1) = (d.from, d.to);
        LinOp::new(self.gram_inv(q) * d.matrix.adjoint() * self.gram(q1), q1, q)
    }

    /// δ_q = G_{q−1}⁻¹ d_{q−1}† G_q; the empty map on C⁰.
    pub fn delta_oracle(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        if q == 0 {
            return Ok(LinOp::new(CMat::zeros(0, self.dim(0)), 0, 0));
        }
        Ok(self.adjoint_of(&self.d_full(q - 1)?))
    }

    /// Gram adjoints of d∘ and d∧ separately.
    pub fn delta_oracle_parts(&self, q: usize) -> Result<(LinOp, LinOp)> {
        self.check(q)?;
        if q == 0 {
            let z = LinOp::new(CMat::zeros(0, self.dim(0)), 0, 0);
            return Ok((z.clone(), z));
        }
        let (a, b) = self.d_parts(q - 1)?;
        Ok((self.adjoint_of(&a), self.adjoint_of(&b)))
    }

    /// (δ∘η)_J = Σ_j τ(X_j)* η_{(j, J)}.
    pub fn delta_circ(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        if q == 0 {
            return Ok(LinOp::new(CMat::zeros(0, self.dim(0)), 0, 0));
        }
        let (src, dst) = (&self.bases[q], &self.bases[q - 1]);
        let mut mat = CMat::zeros(dst.dim(), src.dim());
        for (r, t) in dst.tuples.iter().enumerate() {
            for j in 0..self.n() {
                let mut v = vec![j];
                v.extend_from_slice(t);
                if let Some((col, sg)) = src.locate(&v) {
                    add_block(&mut mat, r, col, &self.stars[j], C64::new(sg, 0.0));
                }
            }
        }
        Ok(LinOp::new(mat, q, q - 1))
    }

    /// (δ∧η)_J = −Σ_{α<β} Σ_u (−1)^u C^{j_u}_{αβ} η_{(α, β, J(u))}, u counted from 0.
    pub fn delta_wedge(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        if q == 0 {
            return Ok(LinOp::new(CMat::zeros(0, self.dim(0)), 0, 0));
        }
        let s = &self.frame.structure_adapted;
        let (src, dst) = (&self.bases[q], &self.bases[q - 1]);
        let (n, m) = (self.n(), self.m());
        let mut mat = CMat::zeros(dst.dim(), src.dim());
        for (r, t) in dst.tuples.iter().enumerate() {
            for u in 0..t.len() {
                let rest = without(t, &[u]);
                for al in 0..n {
                    for be in al + 1..n {
                        let c = s.get(al, be, t[u]);
                        if c == 0.0 {
                            continue;
                        }
                        let mut v = vec![al, be];
                        v.extend_from_slice(&rest);
                        if let Some((col, sg)) = src.locate(&v) {
                            add_identity(&mut mat, r, col, m, -parity(u) * c * sg);
                        }
                    }
                }
            }
        }
        Ok(LinOp::new(mat, q, q - 1))
    }

    pub fn delta_parts(&self, q: usize) -> Result<(LinOp, LinOp)> {
        Ok((self.delta_circ(q)?, self.delta_wedge(q)?))
    }

    /// g(q+1)·f(q) + f(q−1)·g(q) for a raising family f and lowering family g.
    fn anticommutator(
        &self,
        q: usize,
        f: impl Fn(usize) -> Result<LinOp>,
        g: impl Fn(usize) -> Result<LinOp>,
    ) -> Result<CMat> {
        self.check(q)?;
        let dim = self.dim(q);
        let mut out = CMat::zeros(dim, dim);
        if q < self.n() {
            out += g(q + 1)?.matrix * f(q)?.matrix;
        }
        if q > 0 {
            out += f(q - 1)?.matrix * g(q)?.matrix;
        }
        Ok(out)
    }

    /// Δ_q = δ_{q+1}d_q + d_{q−1}δ_q with the Gram-adjoint δ.
    pub fn laplacian(&self, q: usize) -> Result<LinOp> {
        let m = self.anticommutator(q, |k| self.d_full(k), |k| self.delta_oracle(k))?;
        Ok(LinOp::new(m, q, q))
    }

    /// Components from d∘, d∧ and the Gram adjoints of each part:
    /// Δ∘ = {d∘, δ∘}, Δ∧ = {d∧, δ∧}, Δ∘∧ = {d∘, δ∧}, Δ∧∘ = {d∧, δ∘}.
    pub fn laplacian_components_assembled(&self, q: usize) -> Result<Components> {
        let dc = |k| self.d_circ(k);
        let dw = |k| self.d_wedge(k);
        let oc = |k| self.delta_oracle_parts(k).map(|p| p.0);
        let ow = |k| self.delta_oracle_parts(k).map(|p| p.1);
        Ok(Components {
            circ: LinOp::new(self.anticommutator(q, dc, oc)?, q, q),
            wedge: LinOp::new(self.anticommutator(q, dw, ow)?, q, q),
            circ_wedge: LinOp::new(self.anticommutator(q, dc, ow)?, q, q),
            wedge_circ: LinOp::new(self.anticommutator(q, dw, oc)?, q, q),
        })
    }

    /// Σ_k τ(X_k)*τ(X_k) acting on V.
    pub fn casimir_action(&self) -> CMat {
        let m = self.m();
        let mut out = CMat::zeros(m, m);
        for (t, s) in self.rep.generators.iter().zip(&self.stars) {
            out += s * t;
        }
        out
    }

    /// Δ∘ = Σ_k τ_k*τ_k + Σ_u (−1)^{u+1} Σ_j [τ_j*, τ_{j_u}] η_{(j, J(u))}, u counted from 0.
    pub fn laplacian_circ_closed(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let b = &self.bases[q];
        let mut mat = CMat::zeros(b.dim(), b.dim());
        let diag = self.casimir_action();
        for (r, t) in b.tuples.iter().enumerate() {
            add_block(&mut mat, r, r, &diag, C64::new(1.0, 0.0));
            for u in 0..t.len() {
                let rest = without(t, &[u]);
                for j in 0..self.n() {
                    let mut v = vec![j];
                    v.extend_from_slice(&rest);
                    if let Some((col, sg)) = b.locate(&v) {
                        let g = &self.rep.generators[t[u]];
                        let comm = &self.stars[j] * g - g * &self.stars[j];
                        add_block(&mut mat, r, col, &comm, C64::new(-parity(u) * sg, 0.0));
                    }
                }
            }
        }
        Ok(LinOp::new(mat, q, q))
    }

    /// Unitary-module form of Δ∘: Σ τ*τ − Σ_a τ_a Σ_u (−1)^{u+1} C^a_{j, j_u} η_{(j, J(u))}.
    pub fn laplacian_circ_unitary(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        if !self.rep.unitary {
            return Err(Error::Input("structure-constant form of Δ∘ needs a unitary module".into()));
        }
        let s = &self.frame.structure_adapted;
        let b = &self.bases[q];
        let mut mat = CMat::zeros(b.dim(), b.dim());
        let diag = self.casimir_action();
        for (r, t) in b.tuples.iter().enumerate() {
            add_block(&mut mat, r, r, &diag, C64::new(1.0, 0.0));
            for u in 0..t.len() {
                let rest = without(t, &[u]);
                for j in 0..self.n() {
                    let mut v = vec![j];
                    v.extend_from_slice(&rest);
                    if let Some((col, sg)) = b.locate(&v) {
                        for a in 0..self.n() {
                            let c = s.get(j, t[u], a);
                            if c != 0.0 {
                                add_block(&mut mat, r, col, &self.rep.generators[a], C64::new(parity(u) * sg * c, 0.0));
                            }
                        }
                    }
                }
            }
        }
        Ok(LinOp::new(mat, q, q))
    }

    /// d∧ = ½ Σ_i e(ω^i)∘cadj(X_i) on C^q.
    pub fn d_wedge_clifford(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let n = self.n();
        let mut acc = RMat::zeros(self.bases[q + 1].scalar_dim(), self.bases[q].scalar_dim());
        for i in 0..n {
            acc += wedge_left(n, i, q) * derivation(&self.frame.cadj(i), q) * 0.5;
        }
        Ok(LinOp::new(kron(&complexify(&acc), &CMat::identity(self.m(), self.m())), q, q + 1))
    }

    /// δ∧ = ½ Σ_i cadj*(X_i)∘ι(X_i) on C^q.
    pub fn delta_wedge_clifford(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        if q == 0 {
            return Ok(LinOp::new(CMat::zeros(0, self.dim(0)), 0, 0));
        }
        let n = self.n();
        let mut acc = RMat::zeros(self.bases[q - 1].scalar_dim(), self.bases[q].scalar_dim());
        for i in 0..n {
            acc += derivation(&self.frame.cadj_star(i), q - 1) * interior(n, i, q) * 0.5;
        }
        Ok(LinOp::new(kron(&complexify(&acc), &CMat::identity(self.m(), self.m())), q, q - 1))
    }

    /// Δ∧ = {d∧, δ∧} from the Clifford forms.
    pub fn laplacian_wedge_closed(&self, q: usize) -> Result<LinOp> {
        let m = self.anticommutator(q, |k| self.d_wedge_clifford(k), |k| self.delta_wedge_clifford(k))?;
        Ok(LinOp::new(m, q, q))
    }

    /// ½ Σ_i cadj*(X_i)cadj(X_i) extended as a derivation pair; equals Δ∧ on reductive frames.
    pub fn laplacian_wedge_reductive(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let n = self.n();
        let d = self.bases[q].scalar_dim();
        let mut acc = RMat::zeros(d, d);
        for i in 0..n {
            acc += derivation(&self.frame.cadj_star(i), q) * derivation(&self.frame.cadj(i), q) * 0.5;
        }
        Ok(LinOp::new(kron(&complexify(&acc), &CMat::identity(self.m(), self.m())), q, q))
    }

    /// Δ∘∧ = Σ_k τ(X_k) ⊗ cadj*(X_k).
    pub fn laplacian_circ_wedge_closed(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let d = self.dim(q);
        let mut out = CMat::zeros(d, d);
        for k in 0..self.n() {
            out += kron(&complexify(&derivation(&self.frame.cadj_star(k), q)), &self.rep.generators[k]);
        }
        Ok(LinOp::new(out, q, q))
    }

    /// Δ∧∘ = Σ_k τ(X_k)* ⊗ cadj(X_k).
    pub fn laplacian_wedge_circ_closed(&self, q: usize) -> Result<LinOp> {
        self.check(q)?;
        let d = self.dim(q);
        let mut out = CMat::zeros(d, d);
        for k in 0..self.n() {
            out += kron(&complexify(&derivation(&self.frame.cadj(k), q)), &self.stars[k]);
        }
        Ok(LinOp::new(out, q, q))
    }

    pub fn laplacian_components(&self, q: usize) -> Result<Components> {
        Ok(Components {
            circ: self.laplacian_circ_closed(q)?,
            wedge: self.laplacian_wedge_closed(q)?,
            circ_wedge: self.laplacian_circ_wedge_closed(q)?,
            wedge_circ: self.laplacian_wedge_circ_closed(q)?,
        })
    }

    /// □∘ = Δ∘ − Δ₀ ⊗ id on Λ^q, with Δ∘ from the assembly.
    pub fn square_circ(&self, q: usize) -> Result<LinOp> {
        let circ = self.laplacian_components_assembled(q)?.circ.matrix;
        let d = self.bases[q].scalar_dim();
        let base = kron(&CMat::identity(d, d), &self.casimir_action());
        Ok(LinOp::new(circ - base, q, q))
    }

    /// Largest violation of □∘(v ω^{J₁}∧ω^{J₂}) = □∘(v ω^{J₁})∧ω^{J₂} + ω^{J₁}∧□∘(v ω^{J₂})
    /// over all tuples J of degree q, all splits J = J₁J₂ and all basis vectors v.
    pub fn derivation_check(&self, q: usize) -> Result<f64> {
        self.check(q)?;
        let boxes: Vec<CMat> = (0..=q).map(|k| self.square_circ(k).map(|l| l.matrix)).collect::<Result<_>>()?;
        let m = self.m();
        let target = &self.bases[q];
        let mut worst: f64 = 0.0;
        for (jt, t) in target.tuples.iter().enumerate() {
            for s in 0..=q {
                let (t1, t2) = (&t[..s], &t[s..]);
                let (b1, b2) = (&self.bases[s], &self.bases[q - s]);
                let p1 = b1.position(t1).unwrap();
                let p2 = b2.position(t2).unwrap();
                for a in 0..m {
                    let lhs = boxes[q].column(jt * m + a).into_owned();
                    let mut rhs = nalgebra::DVector::<C64>::zeros(target.dim());
                    let col1 = boxes[s].column(p1 * m + a);
                    for (k, kt) in b1.tuples.iter().enumerate() {
                        if let Some((pos, sg)) = wedge_tuples(target, kt, t2) {
                            for b in 0..m {
                                rhs[pos * m + b] += col1[k * m + b] * sg;
                            }
                        }
                    }
                    let col2 = boxes[q - s].column(p2 * m + a);
                    for (k, kt) in b2.tuples.iter().enumerate() {
                        if let Some((pos, sg)) = wedge_tuples(target, t1, kt) {
                            for b in 0..m {
                                rhs[pos * m + b] += col2[k * m + b] * sg;
                            }
                        }
                    }
                    let diff = (lhs - rhs).iter().fold(0.0f64, |acc, z| acc.max(z.norm()));
                    worst = worst.max(diff);
                }
            }
        }
        Ok(worst)
    }

    /// Eigenvalues of Δ_q, self-adjoint for the induced inner product, ascending.
    pub fn spectrum(&self, q: usize) -> Result<Vec<f64>> {
        crate::linalg::spectrum_with_gram(&self.laplacian(q)?.matrix, &self.gram(q))
    }

    /// max_q ‖d_{q+1} d_q‖ / max(1, ‖d_{q+1}‖·‖d_q‖) in entrywise norms.
    pub fn d_squared_residual(&self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for q in 0..self.n() {
            let a = self.d_full(q)?.matrix;
            let b = self.d_full(q + 1)?.matrix;
            let scale = (max_abs(&a) * max_abs(&b)).max(1.0);
            worst = worst.max(max_abs(&(&b * &a)) / scale);
        }
        Ok(worst)
    }
}

//! Poincaré–Birkhoff–Witt normal forms in U(𝔤_ℂ) at bounded degree.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lie_core::{CartanFrame, StructureConstants};
use crate::linalg::{max_abs, CMat, RMat, C64, ONE, ZERO};

pub const DEFAULT_DEGREE_CAP: usize = 6;

/// Which descent X_j X_i (j after i in the order) is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Element of U(𝔤_ℂ) as ordered monomials X_{σ(1)}^{e₁}⋯X_{σ(n)}^{eₙ}.
#[derive(Clone, Debug, PartialEq)]
pub struct PbwElement {
    pub order: Vec<usize>,
    pub terms: BTreeMap<Vec<u32>, C64>,
    pub degree_cap: usize,
}

impl PbwElement {
    pub fn zero(order: Vec<usize>, degree_cap: usize) -> Self {
        Self { order, terms: BTreeMap::new(), degree_cap }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().sum::<u32>() as usize).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C64 {
        self.terms.get(exps).copied().unwrap_or(ZERO)
    }

    fn accumulate(&mut self, exps: Vec<u32>, c: C64) {
        let entry = self.terms.entry(exps).or_insert(ZERO);
        *entry += c;
        if *entry == ZERO {
            self.terms.retain(|_, v| *v != ZERO);
        }
    }

    pub fn scale(&self, c: C64) -> Self {
        let mut out = Self::zero(self.order.clone(), self.degree_cap);
        for (e, v) in &self.terms {
            out.accumulate(e.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.accumulate(e.clone(), *v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-ONE))
    }

    /// Largest coefficient magnitude; 0 for the zero element.
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |a, v| a.max(v.norm()))
    }

    /// Generator indices of an ordered monomial, left to right.
    pub fn word_of(&self, exps: &[u32]) -> Vec<usize> {
        let mut w = Vec::new();
        for (r, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                w.push(self.order[r]);
            }
        }
        w
    }
}

/// Normal-form engine over a structure tensor and a basis order.
#[derive(Clone, Debug)]
pub struct PbwAlgebra {
    pub structure: StructureConstants,
    pub order: Vec<usize>,
    rank: Vec<usize>,
    pub degree_cap: usize,
}

/// Result of conjugating a monomial by exp(ad tH).
#[derive(Clone, Debug)]
pub struct AdScaling {
    pub predicted: f64,
    pub roots: Vec<f64>,
    pub computed: PbwElement,
    pub expected: PbwElement,
    pub residual: f64,
}

impl PbwAlgebra {
    pub fn new(structure: StructureConstants, order: Vec<usize>, degree_cap: usize) -> Result<Self> {
        let n = structure.dim();
        let mut rank = vec![usize::MAX; n];
        if order.len() != n {
            return Err(Error::Input(format!("order has {} entries, expected {}", order.len(), n)));
        }
        for (r, &g) in order.iter().enumerate() {
            if g >= n || rank[g] != usize::MAX {
                return Err(Error::Input("order must be a permutation of the generators".into()));
            }
            rank[g] = r;
        }
        Ok(Self { structure, order, rank, degree_cap })
    }

    /// Adapted-frame order with the default cap.
    pub fn from_frame(frame: &CartanFrame) -> Self {
        let n = frame.dim();
        Self::new(frame.structure_adapted.clone(), (0..n).collect(), DEFAULT_DEGREE_CAP).expect("identity order")
    }

    pub fn n(&self) -> usize {
        self.structure.dim()
    }

    pub fn zero(&self) -> PbwElement {
        PbwElement::zero(self.order.clone(), self.degree_cap)
    }

    pub fn one(&self) -> PbwElement {
        let mut e = self.zero();
        e.accumulate(vec![0; self.n()], ONE);
        e
    }

    pub fn generator(&self, i: usize) -> PbwElement {
        let mut e = self.zero();
        let mut exps = vec![0; self.n()];
        exps[self.rank[i]] = 1;
        e.accumulate(exps, ONE);
        e
    }

    fn exps_of(&self, word: &[usize]) -> Vec<u32> {
        let mut exps = vec![0u32; self.n()];
        for &g in word {
            exps[self.rank[g]] += 1;
        }
        exps
    }

    pub fn nf(&self, word: &[usize], coeff: C64) -> Result<PbwElement> {
        self.nf_with(word, coeff, RewriteStrategy::Leftmost)
    }

    /// Rewrites X_j X_i → X_i X_j + [X_j, X_i] until the word is ordered.
    pub fn nf_with(&self, word: &[usize], coeff: C64, strategy: RewriteStrategy) -> Result<PbwElement> {
        let n = self.n();
        if let Some(&g) = word.iter().find(|&&g| g >= n) {
            return Err(Error::Input(format!("generator index {} out of range", g)));
        }
        if word.len() > self.degree_cap {
            return Err(Error::Cap(format!("word of length {} exceeds cap {}", word.len(), self.degree_cap)));
        }
        let mut rng = match strategy {
            RewriteStrategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut out = self.zero();
        let mut stack = vec![(word.to_vec(), coeff)];
        let mut descents = Vec::new();
        while let Some((w, c)) = stack.pop() {
            if c == ZERO {
                continue;
            }
            if w.len() > self.degree_cap {
                return Err(Error::Cap(format!("rewriting produced degree {}", w.len())));
            }
            descents.clear();
            descents.extend((0..w.len().saturating_sub(1)).filter(|&p| self.rank[w[p]] > self.rank[w[p + 1]]));
            if descents.is_empty() {
                out.accumulate(self.exps_of(&w), c);
                continue;
            }
            let p = match strategy {
                RewriteStrategy::Leftmost => descents[0],
                RewriteStrategy::Rightmost => *descents.last().unwrap(),
                RewriteStrategy::Random(_) => {
                    let r = rng.as_mut().unwrap();
                    descents[r.gen_range(0..descents.len())]
                }
            };
            let (a, b) = (w[p], w[p + 1]);
            let mut swapped = w.clone();
            swapped.swap(p, p + 1);
            stack.push((swapped, c));
            for k in 0..n {
                let s = self.structure.get(a, b, k);
                if s != 0.0 {
                    let mut nw = Vec::with_capacity(w.len() - 1);
                    nw.extend_from_slice(&w[..p]);
                    nw.push(k);
                    nw.extend_from_slice(&w[p + 2..]);
                    stack.push((nw, c * s));
                }
            }
        }
        Ok(out)
    }

    /// Normal form of a linear combination of words.
    pub fn from_words(&self, words: &[(Vec<usize>, C64)]) -> Result<PbwElement> {
        let mut out = self.zero();
        for (w, c) in words {
            out = out.add(&self.nf(w, *c)?);
        }
        Ok(out)
    }

    /// Re-normalizes an element; identity on normal-form input.
    pub fn renormalize(&self, e: &PbwElement) -> Result<PbwElement> {
        let words: Vec<(Vec<usize>, C64)> = e.terms.iter().map(|(x, c)| (e.word_of(x), *c)).collect();
        self.from_words(&words)
    }

    pub fn mul(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        if a.degree() + b.degree() > self.degree_cap {
            return Err(Error::Cap(format!(
                "product of degrees {} and {} exceeds cap {}",
                a.degree(),
                b.degree(),
                self.degree_cap
            )));
        }
        let mut out = self.zero();
        for (ea, ca) in &a.terms {
            let wa = a.word_of(ea);
            for (eb, cb) in &b.terms {
                let mut w = wa.clone();
                w.extend(b.word_of(eb));
                out = out.add(&self.nf(&w, ca * cb)?);
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Σ_{a,b ∈ subset} (B_S⁻¹)_{ab} X_a X_b, i.e. Σ X_a X^a for the B-dual basis of the span.
    pub fn casimir_subset(&self, form: &RMat, subset: &[usize]) -> Result<PbwElement> {
        let k = subset.len();
        let bs = RMat::from_fn(k, k, |a, b| form[(subset[a], subset[b])]);
        let scale = bs.abs().max().max(1.0);
        let det_ok = bs.clone().svd(false, false).singular_values.iter().all(|&s| s > 1e-12 * scale);
        let inv = if k == 0 {
            RMat::zeros(0, 0)
        } else if det_ok {
            bs.try_inverse().ok_or_else(|| Error::Form("singular form block".into()))?
        } else {
            return Err(Error::Form("form is degenerate on the requested span".into()));
        };
        let mut words = Vec::new();
        for a in 0..k {
            for b in 0..k {
                let c = inv[(a, b)];
                if c != 0.0 {
                    words.push((vec![subset[a], subset[b]], C64::new(c, 0.0)));
                }
            }
        }
        self.from_words(&words)
    }

    /// Σ_{i ∈ subset} X_i².
    pub fn sum_of_squares(&self, subset: &[usize]) -> Result<PbwElement> {
        let words: Vec<(Vec<usize>, C64)> = subset.iter().map(|&i| (vec![i, i], ONE)).collect();
        self.from_words(&words)
    }

    /// max_i of the largest coefficient of elem·X_i − X_i·elem.
    pub fn centrality_residual(&self, elem: &PbwElement) -> Result<f64> {
        if elem.degree() + 1 > self.degree_cap {
            return Err(Error::Cap("element degree must be at most cap − 1".into()));
        }
        let mut r: f64 = 0.0;
        for i in 0..self.n() {
            let c = self.commutator(elem, &self.generator(i))?;
            r = r.max(c.max_coeff());
        }
        Ok(r)
    }

    /// Substitutes τ(X_i) into every ordered monomial.
    pub fn evaluate(&self, elem: &PbwElement, generators: &[CMat]) -> Result<CMat> {
        if generators.len() != self.n() {
            return Err(Error::Input(format!(
                "expected {} generator matrices, got {}",
                self.n(),
                generators.len()
            )));
        }
        let m = generators[0].nrows();
        if generators.iter().any(|g| g.shape() != (m, m)) {
            return Err(Error::Input("generator matrices must be square of equal size".into()));
        }
        let mut out = CMat::zeros(m, m);
        for (e, c) in &elem.terms {
            let mut p = CMat::identity(m, m);
            for g in elem.word_of(e) {
                p = &p * &generators[g];
            }
            out += p * *c;
        }
        Ok(out)
    }

    /// Conjugates the monomial `word` by exp(ad tH) and compares with e^{Σ α(tH)} · word.
    pub fn ad_scaling_check(&self, h: &[f64], word: &[usize], t: f64) -> Result<AdScaling> {
        let n = self.n();
        if h.len() != n {
            return Err(Error::Input("H must have one coordinate per generator".into()));
        }
        let ad_h = self.structure.ad_vec(h);
        let scale = ad_h.abs().max().max(1.0);
        let mut roots = Vec::with_capacity(word.len());
        for &g in word {
            if g >= n {
                return Err(Error::Input(format!("generator index {} out of range", g)));
            }
            let col = ad_h.column(g);
            let lambda = col[g];
            let off = (0..n).filter(|&k| k != g).map(|k| col[k].abs()).fold(0.0, f64::max);
            if off > 1e-12 * scale {
                return Err(Error::Model(format!("generator {} is not a root vector for H", g + 1)));
            }
            roots.push(lambda);
        }
        let predicted = (t * roots.iter().sum::<f64>()).exp();
        let conj = crate::semigroup::expm(&crate::linalg::complexify(&(ad_h * t)))?;
        let images: Vec<Vec<C64>> = word.iter().map(|&g| conj.column(g).iter().copied().collect()).collect();
        let mut computed = self.zero();
        let mut idx = vec![0usize; word.len()];
        'outer: loop {
            let mut c = ONE;
            for (r, &k) in idx.iter().enumerate() {
                c *= images[r][k];
            }
            if c.norm() > 0.0 {
                computed = computed.add(&self.nf(&idx, c)?);
            }
            for pos in (0..idx.len()).rev() {
                idx[pos] += 1;
                if idx[pos] < n {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
        let expected = self.nf(word, C64::new(predicted, 0.0))?;
        let residual = computed.sub(&expected).max_coeff();
        Ok(AdScaling { predicted, roots, computed, expected, residual })
    }
}

/// Normal form of a word over the adapted frame with the given order.
pub fn nf(word: &[usize], coeff: C64, frame: &CartanFrame, order: Vec<usize>, degree_cap: usize) -> Result<PbwElement> {
    PbwAlgebra::new(frame.structure_adapted.clone(), order, degree_cap)?.nf(word, coeff)
}

fn frame_form(frame: &CartanFrame) -> Result<&RMat> {
    frame
        .form_adapted
        .as_ref()
        .ok_or_else(|| Error::Form("frame carries no invariant form".into()))
}

/// Ω_G = Σ X_i X^i over the adapted frame.
pub fn casimir(frame: &CartanFrame) -> Result<PbwElement> {
    let all: Vec<usize> = (0..frame.dim()).collect();
    PbwAlgebra::from_frame(frame).casimir_subset(frame_form(frame)?, &all)
}

/// Ω_K over the 𝔨 indices of the frame.
pub fn casimir_k(frame: &CartanFrame) -> Result<PbwElement> {
    PbwAlgebra::from_frame(frame).casimir_subset(frame_form(frame)?, &frame.k_indices)
}

/// Ω̄ = Σ Y_i² over the orthonormal frame.
pub fn omega_bar(frame: &CartanFrame) -> Result<PbwElement> {
    let all: Vec<usize> = (0..frame.dim()).collect();
    PbwAlgebra::from_frame(frame).sum_of_squares(&all)
}

pub fn evaluate(elem: &PbwElement, frame: &CartanFrame, generators: &[CMat]) -> Result<CMat> {
    PbwAlgebra::new(frame.structure_adapted.clone(), elem.order.clone(), elem.degree_cap)?.evaluate(elem, generators)
}

/// Largest entry of a matrix, exposed for callers comparing evaluations.
pub fn matrix_max(m: &CMat) -> f64 {
    max_abs(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::{catalog, ModuleRep};

    fn sl2_input() -> PbwAlgebra {
        PbwAlgebra::new(catalog::sl2r().structure, vec![0, 1, 2], DEFAULT_DEGREE_CAP).unwrap()
    }

    #[test]
    fn fe_rewrites_to_ef_minus_h() {
        let a = sl2_input();
        let e = a.nf(&[2, 1], ONE).unwrap();
        let expected = a.from_words(&[(vec![1, 2], ONE), (vec![0], -ONE)]).unwrap();
        assert_eq!(e, expected);
        assert_eq!(e.coeff(&[0, 1, 1]), ONE);
        assert_eq!(e.coeff(&[1, 0, 0]), -ONE);
    }

    #[test]
    fn single_generator_is_fixed() {
        let a = sl2_input();
        assert_eq!(a.nf(&[1], ONE).unwrap(), a.generator(1));
    }

    #[test]
    fn sl2_casimir_normal_form() {
        let spec = catalog::sl2r();
        let a = sl2_input();
        let om = a.casimir_subset(&spec.killing_form(), &[0, 1, 2]).unwrap();
        assert!((om.coeff(&[2, 0, 0]) - C64::new(0.125, 0.0)).norm() < 1e-15);
        assert!((om.coeff(&[0, 1, 1]) - C64::new(0.5, 0.0)).norm() < 1e-15);
        assert!((om.coeff(&[1, 0, 0]) - C64::new(-0.25, 0.0)).norm() < 1e-15);
        assert_eq!(om.terms.len(), 3);
        assert!(a.centrality_residual(&om).unwrap() < 1e-15);
        let std = ModuleRep::sl2_standard();
        let v = a.evaluate(&om, &std.generators).unwrap();
        assert!(crate::linalg::residual(&v, &(CMat::identity(2, 2) * C64::new(0.375, 0.0))) < 1e-15);
    }

    #[test]
    fn unit_and_generators() {
        let a = sl2_input();
        assert_eq!(a.centrality_residual(&a.one()).unwrap(), 0.0);
        let su2 = PbwAlgebra::new(catalog::su2().structure, vec![0, 1, 2], 6).unwrap();
        assert!(su2.centrality_residual(&su2.generator(0)).unwrap() > 0.5);
        let v = a.evaluate(&a.one(), &ModuleRep::sl2_standard().generators).unwrap();
        assert_eq!(v, CMat::identity(2, 2));
    }

    #[test]
    fn abelian_casimir_is_sum_of_squares() {
        let spec = catalog::abelian(3);
        let a = PbwAlgebra::new(spec.structure.clone(), vec![0, 1, 2], 6).unwrap();
        let om = a.casimir_subset(&RMat::identity(3, 3), &[0, 1, 2]).unwrap();
        assert_eq!(om, a.sum_of_squares(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let a = PbwAlgebra::new(catalog::su2().structure, vec![0, 1, 2], 2).unwrap();
        assert!(matches!(a.nf(&[0, 1, 2], ONE), Err(Error::Cap(_))));
    }

    #[test]
    fn degenerate_form_rejected() {
        let h = catalog::heisenberg();
        let a = PbwAlgebra::new(h.structure.clone(), vec![0, 1, 2], 6).unwrap();
        assert!(matches!(a.casimir_subset(&h.killing_form(), &[0, 1, 2]), Err(Error::Form(_))));
    }

    #[test]
    fn ad_scaling_trivial_cases() {
        let a = sl2_input();
        let h = [1.0, 0.0, 0.0];
        let s = a.ad_scaling_check(&h, &[], 0.7).unwrap();
        assert_eq!(s.predicted, 1.0);
        let s = a.ad_scaling_check(&h, &[1, 1], 0.0).unwrap();
        assert_eq!(s.predicted, 1.0);
        assert!(s.residual < 1e-15);
        assert!(matches!(a.ad_scaling_check(&h, &[0, 1], 0.3).map(|s| s.roots), Ok(_)));
        let mixed = [0.0, 1.0, 0.0];
        assert!(matches!(a.ad_scaling_check(&mixed, &[0], 0.3), Err(Error::Model(_))));
    }
}

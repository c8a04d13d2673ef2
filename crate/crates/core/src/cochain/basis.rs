use std::collections::HashMap;

use crate::linalg::{binomial, RMat};

/// Strictly increasing q-tuples over 0..n in lexicographic order.
pub fn combinations(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, q));
    let mut cur = Vec::with_capacity(q);
    fn rec(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    rec(0, n, q, &mut cur, &mut out);
    out
}

/// Sorts `v` and returns the permutation parity; `None` on repeated indices.
pub fn sort_with_sign(v: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut w = v.to_vec();
    let mut sign = 1.0;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some((w, sign))
    }
}

/// Basis of C^q = V ⊗ Λ^q𝔤*: vector index = tuple_index·m + a.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub tuples: Vec<Vec<usize>>,
    pub bigrade: Vec<(usize, usize)>,
    index: HashMap<Vec<usize>, usize>,
}

impl CochainBasis {
    pub fn new(n: usize, q: usize, m: usize, k_indices: &[usize]) -> Self {
        let tuples = combinations(n, q);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let bigrade = tuples
            .iter()
            .map(|t| {
                let k = t.iter().filter(|i| k_indices.contains(i)).count();
                (k, t.len() - k)
            })
            .collect();
        Self { n, q, m, tuples, bigrade, index }
    }

    /// Number of tuples C(n, q).
    pub fn scalar_dim(&self) -> usize {
        self.tuples.len()
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.m
    }

    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// Canonical position and sign of an unsorted tuple; `None` if it has repeats.
    pub fn locate(&self, tuple: &[usize]) -> Option<(usize, f64)> {
        let (sorted, sign) = sort_with_sign(tuple)?;
        self.position(&sorted).map(|p| (p, sign))
    }
}

/// Exterior multiplication e(ω^i): Λ^q → Λ^{q+1}.
pub fn wedge_left(n: usize, i: usize, q: usize) -> RMat {
    let src = CochainBasis::new(n, q, 1, &[]);
    let dst = CochainBasis::new(n, q + 1, 1, &[]);
    let mut m = RMat::zeros(dst.scalar_dim(), src.scalar_dim());
    for (c, t) in src.tuples.iter().enumerate() {
        let mut v = vec![i];
        v.extend_from_slice(t);
        if let Some((r, s)) = dst.locate(&v) {
            m[(r, c)] = s;
        }
    }
    m
}

/// Interior product ι(X_i): Λ^q → Λ^{q−1}, the transpose of e(ω^i) in an orthonormal frame.
pub fn interior(n: usize, i: usize, q: usize) -> RMat {
    assert!(q >= 1);
    wedge_left(n, i, q - 1).transpose()
}

/// Derivation extension to Λ^q of an endomorphism of 𝔤* whose column β is the image of ω^β.
pub fn derivation(mat: &RMat, q: usize) -> RMat {
    let n = mat.nrows();
    let basis = CochainBasis::new(n, q, 1, &[]);
    let d = basis.scalar_dim();
    let mut out = RMat::zeros(d, d);
    for (c, t) in basis.tuples.iter().enumerate() {
        for u in 0..t.len() {
            for g in 0..n {
                let coef = mat[(g, t[u])];
                if coef == 0.0 {
                    continue;
                }
                let mut v = t.clone();
                v[u] = g;
                if let Some((r, s)) = basis.locate(&v) {
                    out[(r, c)] += coef * s;
                }
            }
        }
    }
    out
}

/// ω^{J₁} ∧ ω^{J₂} as (position, sign) in degree |J₁|+|J₂|, or `None` if zero.
pub fn wedge_tuples(basis: &CochainBasis, a: &[usize], b: &[usize]) -> Option<(usize, f64)> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    basis.locate(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_tuples() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn parity() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1.0)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1.0)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn bigrade_counts() {
        let b = CochainBasis::new(3, 2, 2, &[0]);
        assert_eq!(b.bigrade, vec![(1, 1), (1, 1), (0, 2)]);
        assert_eq!(b.dim(), 6);
    }

    #[test]
    fn identity_derivation_counts_degree() {
        let d = derivation(&RMat::identity(4, 4), 2);
        assert_eq!(d, RMat::identity(6, 6) * 2.0);
    }
}

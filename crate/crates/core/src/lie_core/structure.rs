use crate::error::{Error, Result};
use crate::linalg::RMat;

/// Dense structure tensor: `get(i, j, k)` is the coefficient of X_k in [X_i, X_j].
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    n: usize,
    data: Vec<f64>,
}

impl StructureConstants {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n * n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> f64) -> Self {
        let mut s = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    s.data[(i * n + j) * n + k] = f(i, j, k);
                }
            }
        }
        s
    }

    /// Builds the tensor from 0-based `(i, j, k, c)` entries; duplicates add up.
    /// Entries are taken literally, no antisymmetric partner is implied.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, f64)]) -> Result<Self> {
        let mut s = Self::zeros(n);
        for &(i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Input(format!(
                    "structure entry ({}, {}, {}) out of range for dimension {}",
                    i + 1,
                    j + 1,
                    k + 1,
                    n
                )));
            }
            if !c.is_finite() {
                return Err(Error::Input(format!(
                    "non-finite structure constant at ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            s.data[(i * n + j) * n + k] += c;
        }
        Ok(s)
    }

    /// Antisymmetric completion: each `(i, j, k, c)` also sets `(j, i, k, -c)`.
    pub fn from_brackets(n: usize, brackets: &[(usize, usize, usize, f64)]) -> Self {
        let mut s = Self::zeros(n);
        for &(i, j, k, c) in brackets {
            s.data[(i * n + j) * n + k] += c;
            s.data[(j * n + i) * n + k] -= c;
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.n + j) * self.n + k]
    }

    /// Nonzero entries as 0-based tuples in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, f64)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c != 0.0 {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, x| a.max(x.abs()))
    }

    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += x[i] * y[j] * self.get(i, j, k);
                }
            }
        }
        out
    }

    /// ad(X_i) with columns [X_i, X_j]: entry (k, j) = C^k_{ij}.
    pub fn ad(&self, i: usize) -> RMat {
        RMat::from_fn(self.n, self.n, |k, j| self.get(i, j, k))
    }

    /// ad of an arbitrary vector.
    pub fn ad_vec(&self, x: &[f64]) -> RMat {
        let mut m = RMat::zeros(self.n, self.n);
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0.0 {
                m += self.ad(i) * xi;
            }
        }
        m
    }

    pub fn antisymmetry_residual(&self) -> f64 {
        let n = self.n;
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    r = r.max((self.get(i, j, k) + self.get(j, i, k)).abs());
                }
            }
        }
        r
    }

    pub fn jacobi_residual(&self) -> f64 {
        let n = self.n;
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = 0.0;
                        for m in 0..n {
                            s += self.get(i, j, m) * self.get(m, k, l)
                                + self.get(j, k, m) * self.get(m, i, l)
                                + self.get(k, i, m) * self.get(m, j, l);
                        }
                        r = r.max(s.abs());
                    }
                }
            }
        }
        r
    }

    /// Killing form B_ij = tr(ad X_i ad X_j).
    pub fn killing(&self) -> RMat {
        let ads: Vec<RMat> = (0..self.n).map(|i| self.ad(i)).collect();
        RMat::from_fn(self.n, self.n, |i, j| (&ads[i] * &ads[j]).trace())
    }

    /// Restates the constants in the basis Y_a = Σ_i P[i, a] X_i.
    pub fn transform(&self, p: &RMat) -> Result<Self> {
        let n = self.n;
        let p_inv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Input("change of basis is singular".into()))?;
        let cols: Vec<Vec<f64>> = (0..n).map(|a| p.column(a).iter().copied().collect()).collect();
        let mut out = Self::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let v = nalgebra::DVector::from_vec(self.bracket(&cols[a], &cols[b]));
                let w = &p_inv * v;
                for c in 0..n {
                    out.data[(a * n + b) * n + c] = w[c];
                }
            }
        }
        Ok(out)
    }
}

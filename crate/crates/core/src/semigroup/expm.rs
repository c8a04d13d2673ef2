use crate::error::{Error, Result};
use crate::linalg::{is_finite, max_abs, CMat, C64};

/// Matrix exponential by Padé scaling and squaring.
pub fn expm(m: &CMat) -> Result<CMat> {
    if m.nrows() != m.ncols() {
        return Err(Error::Input("expm needs a square matrix".into()));
    }
    if !is_finite(m) {
        return Err(Error::Input("expm input has non-finite entries".into()));
    }
    if m.nrows() == 0 {
        return Ok(m.clone());
    }
    let norm1 = m.column_iter().map(|c| c.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    let out = m.exp();
    if !is_finite(&out) {
        return Err(Error::Scaling(format!(
            "exponential overflows (1-norm of input {:e}, squaring steps ≈ {})",
            norm1,
            norm1.log2().ceil().max(0.0)
        )));
    }
    Ok(out)
}

/// e^{−sA} for many s. Hermitian A shares one eigendecomposition.
#[derive(Clone, Debug)]
pub struct ExpFamily {
    a: CMat,
    eigen: Option<(CMat, Vec<f64>)>,
}

impl ExpFamily {
    pub fn new(a: &CMat) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::Input("expm needs a square matrix".into()));
        }
        if !is_finite(a) {
            return Err(Error::Input("expm input has non-finite entries".into()));
        }
        let hermitian = max_abs(&(a - a.adjoint())) <= 1e-14 * max_abs(a).max(1.0);
        let eigen = (hermitian && a.nrows() > 0).then(|| {
            let e = a.clone().symmetric_eigen();
            (e.eigenvectors, e.eigenvalues.iter().copied().collect())
        });
        Ok(Self { a: a.clone(), eigen })
    }

    pub fn at(&self, s: f64) -> Result<CMat> {
        match &self.eigen {
            Some((v, lam)) => {
                let mut scaled = v.clone();
                for (j, l) in lam.iter().enumerate() {
                    let f = (-s * l).exp();
                    if !f.is_finite() {
                        return Err(Error::Scaling(format!("e^(-s λ) overflows for s λ = {:e}", s * l)));
                    }
                    scaled.column_mut(j).scale_mut(f);
                }
                Ok(scaled * v.adjoint())
            }
            None => expm(&(&self.a * C64::new(-s, 0.0))),
        }
    }
}

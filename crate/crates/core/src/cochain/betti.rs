use serde::Serialize;

use super::complex::CochainComplex;
use crate::error::Result;
use crate::linalg::singular_values;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BettiConfig {
    /// Cutoff = factor · dim · ε · largest singular value.
    pub threshold_factor: f64,
}

impl Default for BettiConfig {
    fn default() -> Self {
        Self { threshold_factor: 1.0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiResult {
    pub q: usize,
    pub betti: usize,
    pub rank_nullity: usize,
    pub agree: bool,
    pub threshold: f64,
    pub singular_values: Vec<f64>,
    pub warning: Option<String>,
}

fn cutoff(sv: &[f64], dim: usize, cfg: &BettiConfig) -> f64 {
    cfg.threshold_factor * dim.max(1) as f64 * f64::EPSILON * sv.first().copied().unwrap_or(0.0)
}

fn near(sv: &[f64], thr: f64) -> Vec<f64> {
    sv.iter().copied().filter(|&s| s > thr / 10.0 && s <= thr * 10.0 && thr > 0.0).collect()
}

/// Kernel dimension of Δ_q, cross-checked against dim ker d_q − rank d_{q−1}.
pub fn betti(cx: &CochainComplex, q: usize, cfg: &BettiConfig) -> Result<BettiResult> {
    let lap = cx.laplacian(q)?.matrix;
    let dim = lap.nrows();
    let sv = singular_values(&lap);
    let thr = cutoff(&sv, dim, cfg);
    let kernel = sv.iter().filter(|&&s| s <= thr).count();
    let mut flagged = near(&sv, thr);

    let rank_of = |k: usize| -> Result<(usize, Vec<f64>)> {
        let d = cx.d_full(k)?.matrix;
        let s = singular_values(&d);
        let t = cutoff(&s, d.nrows().max(d.ncols()), cfg);
        Ok((s.iter().filter(|&&x| x > t).count(), near(&s, t)))
    };
    let (rank_q, near_q) = rank_of(q)?;
    let (rank_prev, near_prev) = if q > 0 { rank_of(q - 1)? } else { (0, Vec::new()) };
    flagged.extend(near_q);
    flagged.extend(near_prev);
    let rank_nullity = dim - rank_q - rank_prev;
    let warning = (!flagged.is_empty()).then(|| format!("singular values within 10x of the cutoff: {:?}", flagged));
    Ok(BettiResult {
        q,
        betti: kernel,
        rank_nullity,
        agree: kernel == rank_nullity,
        threshold: thr,
        singular_values: sv,
        warning,
    })
}

/// Betti numbers in all degrees 0..=n.
pub fn betti_table(cx: &CochainComplex, cfg: &BettiConfig) -> Result<Vec<BettiResult>> {
    (0..=cx.n()).map(|q| betti(cx, q, cfg)).collect()
}

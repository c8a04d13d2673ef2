use nalgebra::{Matrix2, Vector2};
use serde::{Deserialize, Serialize};

use super::decomp::norm_p;
use super::element::{diag, GroupElement, Model};
use crate::error::{Error, Result};

/// Restricted-root normalization for sl(2,ℝ) with H₀ = diag(1, −1).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Convention {
    pub h0: [f64; 2],
    pub alpha_h0: f64,
    pub rho_h0: f64,
    pub killing_h0_h0: f64,
    pub note: String,
}

pub fn convention() -> Convention {
    Convention {
        h0: [1.0, -1.0],
        alpha_h0: 2.0,
        rho_h0: 1.0,
        killing_h0_h0: 8.0,
        note: "x = n a k with a = exp(h H0); rho(h H0) = h; |x|_pz = |x|_p for matrix groups".into(),
    }
}

pub const SPHERICAL_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct SphericalConfig {
    pub quad_nodes: usize,
    pub model: Model,
}

impl Default for SphericalConfig {
    fn default() -> Self {
        Self { quad_nodes: 256, model: Model::Sl2r }
    }
}

impl SphericalConfig {
    pub fn new(quad_nodes: usize) -> Result<Self> {
        let cfg = Self { quad_nodes, model: Model::Sl2r };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.quad_nodes < 8 || self.quad_nodes % 2 != 0 {
            return Err(Error::Input(format!(
                "quadrature needs an even node count >= 8, got {}",
                self.quad_nodes
            )));
        }
        if self.model != Model::Sl2r {
            return Err(Error::Model("spherical function is implemented for sl2r".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SphericalValue {
    pub value: f64,
    pub nodes: usize,
    /// |φ_N − φ_{N/2}|.
    pub richardson_delta: f64,
    pub warning: Option<String>,
}

// e^{ρH(k_θ x)} = 1/‖xᵀ u_θ‖, u_θ = (sin θ, cos θ) the bottom row of k_θ.
// Nodes are equispaced in φ with tan(θ − θ*) = λ tan φ, λ = (σ₂/σ₁)^{1/2},
// θ* the peak of the integrand; this keeps the rule periodic and clusters
// nodes where the integrand has width ~σ₂/σ₁.
fn trapezoid(m: &Matrix2<f64>, nodes: usize) -> f64 {
    let mt = m.transpose();
    let step = std::f64::consts::TAU / nodes as f64;
    let svd = m.svd(true, false);
    let (s, u) = (svd.singular_values, svd.u.unwrap());
    let (hi, lo) = if s[0] >= s[1] { (0, 1) } else { (1, 0) };
    let lambda = (s[lo] / s[hi]).sqrt();
    let mut sum = 0.0;
    if lambda >= 1.0 - 1e-14 {
        for j in 0..nodes {
            let (sn, cs) = (j as f64 * step).sin_cos();
            sum += 1.0 / (mt * Vector2::new(sn, cs)).norm();
        }
        return sum / nodes as f64;
    }
    let peak = u[(0, lo)].atan2(u[(1, lo)]);
    for j in 0..nodes {
        let (sp, cp) = (j as f64 * step).sin_cos();
        let theta = peak + (lambda * sp).atan2(cp);
        let jac = lambda / (cp * cp + lambda * lambda * sp * sp);
        let (sn, cs) = theta.sin_cos();
        sum += jac / (mt * Vector2::new(sn, cs)).norm();
    }
    sum / nodes as f64
}

pub fn spherical_phi0_value(x: &GroupElement, cfg: &SphericalConfig) -> Result<SphericalValue> {
    cfg.validate()?;
    let m = x.real()?;
    let value = trapezoid(&m, cfg.quad_nodes);
    let coarse = trapezoid(&m, cfg.quad_nodes / 2);
    let delta = (value - coarse).abs();
    let warning = (delta > SPHERICAL_TOLERANCE).then(|| {
        format!("precision warning: node-halving difference {:.3e} at {} nodes", delta, cfg.quad_nodes)
    });
    Ok(SphericalValue { value, nodes: cfg.quad_nodes, richardson_delta: delta, warning })
}

pub fn spherical_phi0(x: &GroupElement, cfg: &SphericalConfig) -> Result<f64> {
    Ok(spherical_phi0_value(x, cfg)?.value)
}

/// Successive differences under node doubling starting at `nodes`, and their ratios.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Richardson {
    pub nodes: Vec<usize>,
    pub values: Vec<f64>,
    pub differences: Vec<f64>,
    pub ratios: Vec<f64>,
}

impl Richardson {
    /// Order ≥ 2 means each ratio is ≥ 4 unless the difference already sits at roundoff.
    pub fn at_least_second_order(&self, floor: f64) -> bool {
        self.differences
            .windows(2)
            .all(|w| w[1] <= floor || w[1] * 4.0 <= w[0])
    }
}

pub fn richardson(x: &GroupElement, start: usize, levels: usize) -> Result<Richardson> {
    SphericalConfig::new(start)?;
    let m = x.real()?;
    let nodes: Vec<usize> = (0..levels).map(|l| start << l).collect();
    let values: Vec<f64> = nodes.iter().map(|&n| trapezoid(&m, n)).collect();
    let differences: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let ratios = differences.windows(2).map(|w| w[0] / w[1]).collect();
    Ok(Richardson { nodes, values, differences, ratios })
}

pub const DEFAULT_GROWTH_SLACK: f64 = 0.05;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GrowthFit {
    pub t: Vec<f64>,
    pub values: Vec<f64>,
    pub c: f64,
    pub d: f64,
    /// Smallest C for which the bound holds at every grid point with the fitted d.
    pub envelope_c: f64,
    pub slack: f64,
    pub pass: bool,
}

/// Fits log φ₀(a_t) = −t + d log(1 + t) + log C, with ρ(log a_t) = t.
pub fn growth_fit_values(t: &[f64], values: &[f64], slack: f64) -> Result<GrowthFit> {
    if t.len() != values.len() {
        return Err(Error::Input("grid and values differ in length".into()));
    }
    if t.len() < 3 {
        return Err(Error::Input(format!("growth fit needs at least 3 points, got {}", t.len())));
    }
    if t.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
        return Err(Error::Input("grid must lie in the open positive chamber".into()));
    }
    let in_range = values.iter().all(|&v| v > 0.0 && v <= 1.0);
    let xs: Vec<f64> = t.iter().map(|s| s.ln_1p()).collect();
    let ys: Vec<f64> = t
        .iter()
        .zip(values)
        .map(|(s, v)| if *v > 0.0 { v.ln() + s } else { f64::NEG_INFINITY })
        .collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 {
        return Err(Error::Input("degenerate grid".into()));
    }
    let d = sxy / sxx;
    let c = (my - d * mx).exp();
    let envelope_c = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - d * x).exp())
        .fold(0.0, f64::max);
    let pass = in_range
        && d.is_finite()
        && c.is_finite()
        && d >= 0.0
        && envelope_c <= c * (1.0 + slack);
    Ok(GrowthFit { t: t.to_vec(), values: values.to_vec(), c, d, envelope_c, slack, pass })
}

pub fn growth_fit(t: &[f64], cfg: &SphericalConfig, slack: f64) -> Result<GrowthFit> {
    let values = t
        .iter()
        .map(|&s| spherical_phi0(&GroupElement::Sl2r(diag(s)), cfg))
        .collect::<Result<Vec<_>>>()?;
    growth_fit_values(t, &values, slack)
}

/// (1 + |x|_pz)^r · φ₀(x)^{−2/p}; p = ∞ drops the spherical factor.
pub fn seminorm_weight(x: &GroupElement, r: f64, p: f64, cfg: &SphericalConfig) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::Input(format!("p must be positive, got {}", p)));
    }
    let base = (1.0 + norm_p(x)?).powf(r);
    if p.is_infinite() {
        return Ok(base);
    }
    Ok(base * spherical_phi0(x, cfg)?.powf(-2.0 / p))
}

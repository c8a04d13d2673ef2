use serde::Serialize;

use super::expm::ExpFamily;
use super::quadrature::gauss_legendre_unit;
use crate::error::{Error, Result};
use crate::linalg::{op_norm, CMat};

pub const DEFAULT_OMEGA_CAP: f64 = 1e6;
const CONV_NODES: usize = 64;

/// Nonnegative function sampled on a strictly increasing positive grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sampled {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

impl Sampled {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() < 2 || grid.len() != values.len() {
            return Err(Error::Input("sampled function needs at least two matching samples".into()));
        }
        if grid[0] <= 0.0 || grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Input("sample grid must be positive and strictly increasing".into()));
        }
        if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::Majorant("samples must be finite and nonnegative".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: &[f64], f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid.to_vec(), grid.iter().map(|&t| f(t)).collect())
    }

    /// Cubic interpolation of log f where all four neighbours are positive,
    /// against log t below t = 1 and against t above; linear otherwise.
    /// Power-law extrapolation at both ends.
    pub fn eval(&self, t: f64) -> f64 {
        let g = &self.grid;
        let v = &self.values;
        let n = g.len();
        if t <= 0.0 {
            return if v[0] > 0.0 { self.extrapolate(0, 1, t.max(f64::MIN_POSITIVE)) } else { 0.0 };
        }
        if t < g[0] {
            return self.extrapolate(0, 1, t);
        }
        if t > g[n - 1] {
            return self.extrapolate(n - 2, n - 1, t);
        }
        let i = match g.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
            Ok(i) => return v[i],
            Err(i) => i - 1,
        };
        let lo = i.saturating_sub(1).min(n.saturating_sub(4));
        if n >= 4 && (lo..lo + 4).all(|k| v[k] > 0.0) {
            let abscissa = |x: f64| if g[lo + 1] < 1.0 { x.ln() } else { x };
            let x = abscissa(t);
            let xs: [f64; 4] = std::array::from_fn(|k| abscissa(g[lo + k]));
            let ys: [f64; 4] = std::array::from_fn(|k| v[lo + k].ln());
            let mut y = 0.0;
            for a in 0..4 {
                let mut l = 1.0;
                for b in 0..4 {
                    if a != b {
                        l *= (x - xs[b]) / (xs[a] - xs[b]);
                    }
                }
                y += l * ys[a];
            }
            y.exp()
        } else {
            let w = (t - g[i]) / (g[i + 1] - g[i]);
            v[i] * (1.0 - w) + v[i + 1] * w
        }
    }

    fn extrapolate(&self, a: usize, b: usize, t: f64) -> f64 {
        let (ga, gb, va, vb) = (self.grid[a], self.grid[b], self.values[a], self.values[b]);
        if va > 0.0 && vb > 0.0 {
            let p = (vb / va).ln() / (gb / ga).ln();
            va * (t / ga).powf(p)
        } else {
            let w = (t - ga) / (gb - ga);
            (va * (1.0 - w) + vb * w).max(0.0)
        }
    }

    /// Growth rate from the last two samples, log(v_n/v_{n−1})/(g_n − g_{n−1}).
    pub fn tail_rate(&self) -> f64 {
        let n = self.grid.len();
        let (a, b) = (self.values[n - 2], self.values[n - 1]);
        if a <= 0.0 || b <= 0.0 {
            return f64::NEG_INFINITY;
        }
        (b / a).ln() / (self.grid[n - 1] - self.grid[n - 2])
    }

    /// Upper estimate of ∫₀^∞ e^{−ωs} f(s) ds: power-law head, trapezoid body,
    /// exponential tail bound. Infinite when ω does not exceed the tail rate.
    pub fn laplace(&self, omega: f64) -> f64 {
        let g = &self.grid;
        let v = &self.values;
        let n = g.len();
        let head = if v[0] > 0.0 && v[1] > 0.0 {
            let p = (v[1] / v[0]).ln() / (g[1] / g[0]).ln();
            if p <= -1.0 {
                return f64::INFINITY;
            }
            v[0] * g[0] / (1.0 + p)
        } else {
            v[0] * g[0]
        };
        let mut body = 0.0;
        for k in 0..n - 1 {
            let fa = (-omega * g[k]).exp() * v[k];
            let fb = (-omega * g[k + 1]).exp() * v[k + 1];
            body += 0.5 * (fa + fb) * (g[k + 1] - g[k]);
        }
        let rate = self.tail_rate().max(0.0);
        let tail = if v[n - 1] == 0.0 {
            0.0
        } else if omega <= rate {
            f64::INFINITY
        } else {
            v[n - 1] * (-omega * g[n - 1]).exp() / (omega - rate)
        };
        head.max(0.0) + body + tail
    }
}

/// Log-spaced grid of `points` values over [t0, t1].
pub fn log_grid(t0: f64, t1: f64, points: usize) -> Vec<f64> {
    let (a, b) = (t0.ln(), t1.ln());
    (0..points)
        .map(|k| (a + (b - a) * k as f64 / (points - 1) as f64).exp())
        .collect()
}

/// Sampled majorant functions φ(t) = ‖e^{−tA}‖ and ψ(t) = ‖Be^{−tA}‖.
#[derive(Clone, Debug, Serialize)]
pub struct MajorantData {
    pub phi: Sampled,
    pub psi: Sampled,
    pub omega1: Option<f64>,
}

impl MajorantData {
    pub fn new(phi: Sampled, psi: Sampled) -> Result<Self> {
        if phi.grid != psi.grid {
            return Err(Error::Input("φ and ψ must share a grid".into()));
        }
        Ok(Self { phi, psi, omega1: None })
    }

    /// Samples operator norms of e^{−tA} and Be^{−tA} on `grid`.
    pub fn from_split(a: &CMat, b: &CMat, grid: &[f64]) -> Result<Self> {
        let mut phi = Vec::with_capacity(grid.len());
        let mut psi = Vec::with_capacity(grid.len());
        let family = ExpFamily::new(a)?;
        for &t in grid {
            let e = family.at(t)?;
            phi.push(op_norm(&e));
            psi.push(op_norm(&(b * &e)));
        }
        Self::new(Sampled::new(grid.to_vec(), phi)?, Sampled::new(grid.to_vec(), psi)?)
    }

    pub fn omega0(&self) -> f64 {
        self.phi.tail_rate()
    }

    /// Smallest ω (to bisection accuracy) with ∫e^{−ωs}(φ+ψ₀) ≤ 1 and
    /// ∫e^{−ωs}(φ+ψ₁) ≤ 1/16, where ψ₀ = φ and ψ₁ = ψ.
    pub fn find_omega1(&self, cap: f64) -> Result<f64> {
        let ok = |w: f64| 2.0 * self.phi.laplace(w) <= 1.0 && self.phi.laplace(w) + self.psi.laplace(w) <= 1.0 / 16.0;
        let mut lo = self.omega0().max(0.0);
        let mut hi = lo + 1.0;
        while !ok(hi) {
            lo = hi;
            hi *= 2.0;
            if hi > cap {
                return Err(Error::Majorant(format!("no admissible ω₁ below {:e}", cap)));
            }
        }
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if ok(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-12 * hi {
                break;
            }
        }
        Ok(hi)
    }
}

/// θ_n = ψ₀ * ψ₁^{*n} for n = 0..=n_max on `grid`, by split-at-midpoint
/// Gauss–Legendre quadrature with the substitution s = (t/2)v².
pub fn convolution_series(psi0: &Sampled, psi1: &Sampled, grid: &[f64], n_max: usize) -> Result<Vec<Vec<f64>>> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(grid.iter().map(|&t| psi0.eval(t)).collect::<Vec<f64>>());
    for _ in 1..=n_max {
        let prev = Sampled::new(grid.to_vec(), out.last().unwrap().clone())?;
        out.push(convolve(&prev, psi1, grid));
    }
    Ok(out)
}

/// (f * g)(t) on `grid`, split at t/2 with s = (t/2)v² on each half.
pub fn convolve(f: &Sampled, g: &Sampled, grid: &[f64]) -> Vec<f64> {
    let q = gauss_legendre_unit(CONV_NODES);
    grid.iter()
        .map(|&t| {
            let h = 0.5 * t;
            let mut s = 0.0;
            for &(v, w) in &q {
                let u = h * v * v;
                let jac = t * v * w;
                s += jac * (f.eval(t - u) * g.eval(u) + f.eval(u) * g.eval(t - u));
            }
            s
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaRow {
    pub n: usize,
    pub t: f64,
    pub value: f64,
    pub log_value: f64,
    pub log_bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MajorantReport {
    pub omega0: f64,
    pub omega1: f64,
    pub rows: Vec<ThetaRow>,
    pub partial_sums: Vec<Vec<f64>>,
    pub partial_sums_monotone: bool,
    pub pass: bool,
}

/// Convolutions ψ₀*ψ₁^{*n}(t) against 2^{−n}t^{−2}e^{tω₁}, compared in log space.
pub fn majorant_theta(data: &MajorantData, t_grid: &[f64], n_max: usize) -> Result<MajorantReport> {
    let omega1 = match data.omega1 {
        Some(w) => w,
        None => data.find_omega1(DEFAULT_OMEGA_CAP)?,
    };
    let mut grid: Vec<f64> = data.phi.grid.iter().chain(t_grid.iter()).copied().collect();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    let series = convolution_series(&data.phi, &data.psi, &grid, n_max)?;
    let mut rows = Vec::new();
    let mut partial_sums = Vec::new();
    let mut monotone = true;
    for &t in t_grid {
        let gi = grid.iter().position(|&g| g == t).unwrap();
        let mut acc = 0.0;
        let mut sums = Vec::with_capacity(n_max + 1);
        for (n, row) in series.iter().enumerate() {
            let value = row[gi];
            let log_bound = -(n as f64) * std::f64::consts::LN_2 - 2.0 * t.ln() + t * omega1;
            let log_value = if value > 0.0 { value.ln() } else { f64::NEG_INFINITY };
            rows.push(ThetaRow { n, t, value, log_value, log_bound, pass: log_value <= log_bound });
            let next = acc + value;
            if !(next >= acc) || !next.is_finite() {
                monotone = false;
            }
            acc = next;
            sums.push(acc);
        }
        partial_sums.push(sums);
    }
    let pass = monotone && rows.iter().all(|r| r.pass);
    Ok(MajorantReport { omega0: data.omega0(), omega1, rows, partial_sums, partial_sums_monotone: monotone, pass })
}

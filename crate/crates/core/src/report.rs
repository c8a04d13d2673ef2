//! Verification suites shared by the command line and the test suites.

use nalgebra::Matrix2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::{betti_table, kuga_blocks, BettiConfig, BettiResult, CochainComplex};
use crate::error::{Error, Result};
use crate::group_numerics::{
    self as gn, cartan_kak, convention, growth_fit, iwasawa_nak, iwasawa_nak_gram_schmidt, norm_p, richardson,
    spherical_phi0_value, Convention, GroupElement, SphericalConfig,
};
use crate::io::SemigroupReport;
use crate::lie_core::{catalog, AlgebraSpec, CartanFrame, Check, FrameKind, ModuleRep, ValidationReport};
use crate::linalg::{op_norm, rel_residual, residual, CMat, C64};
use crate::semigroup::{
    dyson_phillips, expm, heat_split, log_grid, majorant_theta, MajorantData, PerturbationSplit, Sampled,
    DEFAULT_ORDER, DEFAULT_QUAD_NODES,
};
use crate::uea::{self, PbwAlgebra};

/// Pinned acceptance tolerances.
#[derive(Clone, Copy, Debug, Serialize, PartialEq)]
pub struct Tolerances {
    pub d_squared: f64,
    pub adjoint: f64,
    pub components: f64,
    pub kuga: f64,
    pub delta0: f64,
    pub casimir: f64,
    pub derivation: f64,
    pub dyson: f64,
    pub dyson_over_tail: f64,
    pub reconstruction: f64,
    pub paths: f64,
    pub spherical: f64,
    pub ad_scaling: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            d_squared: 1e-12,
            adjoint: 1e-10,
            components: 1e-10,
            kuga: 1e-10,
            delta0: 1e-12,
            casimir: 1e-12,
            derivation: 1e-12,
            dyson: 1e-6,
            dyson_over_tail: 1e-8,
            reconstruction: 1e-12,
            paths: 1e-10,
            spherical: 1e-8,
            ad_scaling: 1e-10,
        }
    }
}

impl Tolerances {
    /// Replaces every identity tolerance by `t`.
    pub fn uniform(t: f64) -> Self {
        Self {
            d_squared: t,
            adjoint: t,
            components: t,
            kuga: t,
            delta0: t,
            casimir: t,
            derivation: t,
            dyson: t,
            dyson_over_tail: t,
            reconstruction: t,
            paths: t,
            spherical: t,
            ad_scaling: t,
        }
    }
}

/// Module choice on the command line or in suites.
#[derive(Clone, Debug)]
pub enum ModuleChoice {
    Trivial,
    Adjoint,
    SpinHalf,
    Standard,
    Given(ModuleRep),
}

impl ModuleChoice {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Trivial => "trivial",
            Self::Adjoint => "adjoint",
            Self::SpinHalf => "spin-half",
            Self::Standard => "standard",
            Self::Given(_) => "file",
        }
    }

    pub fn build(&self, spec: &AlgebraSpec) -> Result<ModuleRep> {
        let rep = match self {
            Self::Trivial => ModuleRep::trivial(spec.dim()),
            Self::Adjoint => ModuleRep::adjoint(spec)?,
            Self::SpinHalf => ModuleRep::spin_half(),
            Self::Standard => ModuleRep::sl2_standard(),
            Self::Given(r) => r.clone(),
        };
        if rep.n_generators() != spec.dim() {
            return Err(Error::Input(format!(
                "module has {} generators, algebra has dimension {}",
                rep.n_generators(),
                spec.dim()
            )));
        }
        let hom = rep.homomorphism_residual(&spec.structure);
        if hom > spec.threshold() {
            return Err(Error::Input(format!("module is not a representation (residual {:e})", hom)));
        }
        Ok(rep)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidateReport {
    pub algebra: ValidationReport,
    pub frame_kind: Option<FrameKind>,
    pub k_dim: usize,
    pub p_dim: usize,
    pub frame: Option<ValidationReport>,
    pub frame_error: Option<String>,
    pub pass: bool,
}

/// Axioms of the algebra and the orthonormal frame. A frame that cannot be
/// built is a failed check, not an input error.
pub fn validate_report(spec: &AlgebraSpec) -> Result<ValidateReport> {
    let algebra = spec.validate();
    match CartanFrame::for_spec(spec) {
        Ok(frame) => {
            let checks = frame.check();
            Ok(ValidateReport {
                pass: algebra.pass && checks.pass,
                algebra,
                frame_kind: Some(frame.kind),
                k_dim: frame.k_indices.len(),
                p_dim: frame.p_indices.len(),
                frame: Some(checks),
                frame_error: None,
            })
        }
        Err(Error::Frame(msg)) => Ok(ValidateReport {
            algebra,
            frame_kind: None,
            k_dim: 0,
            p_dim: 0,
            frame: None,
            frame_error: Some(msg),
            pass: false,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub q: usize,
    pub dim: usize,
    pub adjoint_residual: f64,
    pub component_residual: f64,
    pub derivation_residual: Option<f64>,
    pub spectrum: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub algebra: String,
    pub module: String,
    pub d_squared: f64,
    pub degrees: Vec<DegreeReport>,
    pub betti: Vec<usize>,
    pub betti_detail: Vec<BettiResult>,
    pub delta0_residual: Option<f64>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

pub fn complex_for(spec: &AlgebraSpec, rep: &ModuleRep) -> Result<CochainComplex> {
    CochainComplex::new(&CartanFrame::for_spec(spec)?, rep)
}

/// −τ(Ω̄) on a unitary module of a frame with a form, else None.
pub fn delta0_residual(cx: &CochainComplex) -> Result<Option<f64>> {
    if !cx.rep.unitary || cx.frame.form_adapted.is_none() {
        return Ok(None);
    }
    let ob = uea::evaluate(&uea::omega_bar(&cx.frame)?, &cx.frame, &cx.rep.generators)?;
    let lap = cx.laplacian(0)?.matrix;
    Ok(Some(residual(&lap, &(-ob))))
}

pub fn complex_report(
    name: &str,
    spec: &AlgebraSpec,
    module: &ModuleChoice,
    tol: &Tolerances,
    betti_cfg: &BettiConfig,
) -> Result<ComplexReport> {
    let rep = module.build(spec)?;
    let cx = complex_for(spec, &rep)?;
    let n = cx.n();
    let d_squared = cx.d_squared_residual()?;
    let mut degrees = Vec::with_capacity(n + 1);
    for q in 0..=n {
        let (c, w) = cx.delta_parts(q)?;
        let oracle = cx.delta_oracle(q)?;
        let adjoint_residual = rel_residual(&(c.matrix + w.matrix), &oracle.matrix);
        let lap = cx.laplacian(q)?;
        let component_residual = rel_residual(&cx.laplacian_components(q)?.sum(), &lap.matrix);
        let derivation_residual = if (2..=3).contains(&q) { Some(cx.derivation_check(q)?) } else { None };
        let mut spectrum = cx.spectrum(q)?;
        spectrum.sort_by(|a, b| a.partial_cmp(b).unwrap());
        degrees.push(DegreeReport { q, dim: cx.dim(q), adjoint_residual, component_residual, derivation_residual, spectrum });
    }
    let table = betti_table(&cx, betti_cfg)?;
    let delta0 = delta0_residual(&cx)?;
    let worst = |f: &dyn Fn(&DegreeReport) -> f64| degrees.iter().map(f).fold(0.0, f64::max);
    let mut checks = vec![
        Check::new("d_squared", d_squared, tol.d_squared),
        Check::new("adjointness", worst(&|d| d.adjoint_residual), tol.adjoint),
        Check::new("components", worst(&|d| d.component_residual), tol.components),
        Check::new("derivation", worst(&|d| d.derivation_residual.unwrap_or(0.0)), tol.derivation),
    ];
    let disagreements = table.iter().filter(|b| !b.agree).count();
    checks.push(Check::new("betti_rank_nullity", disagreements as f64, 0.0));
    if let Some(r) = delta0 {
        checks.push(Check::new("delta0_casimir", r, tol.delta0));
    }
    let warnings = table.iter().filter_map(|b| b.warning.clone()).collect();
    let pass = checks.iter().all(|c| c.pass);
    Ok(ComplexReport {
        algebra: name.to_string(),
        module: module.name().to_string(),
        d_squared,
        betti: table.iter().map(|b| b.betti).collect(),
        betti_detail: table,
        degrees,
        delta0_residual: delta0,
        checks,
        warnings,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KugaReport {
    pub algebra: String,
    pub module: String,
    pub k_dim: usize,
    pub residual: f64,
    pub printed_residual: f64,
    pub leakage: f64,
    pub pass: bool,
}

pub fn kuga_report(name: &str, spec: &AlgebraSpec, module: &ModuleChoice, tol: &Tolerances) -> Result<KugaReport> {
    let rep = module.build(spec)?;
    let cx = complex_for(spec, &rep)?;
    if cx.frame.kind != FrameKind::Cartan {
        return Err(Error::Form("block decomposition needs a Cartan involution and form".into()));
    }
    let k = kuga_blocks(&cx)?;
    Ok(KugaReport {
        algebra: name.to_string(),
        module: module.name().to_string(),
        k_dim: k.k_dim,
        residual: k.residual,
        printed_residual: k.printed_residual,
        leakage: k.leakage,
        pass: k.residual <= tol.kuga && k.leakage <= tol.kuga,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CasimirReport {
    pub algebra: String,
    pub decomposition_residual: f64,
    pub centrality_residual: f64,
    pub omega_bar_on_module: Option<Vec<Vec<[f64; 2]>>>,
    pub delta0_residual: Option<f64>,
    pub pass: bool,
}

pub fn casimir_report(name: &str, spec: &AlgebraSpec, module: Option<&ModuleChoice>, tol: &Tolerances) -> Result<CasimirReport> {
    let frame = CartanFrame::for_spec(spec)?;
    if frame.kind != FrameKind::Cartan {
        return Err(Error::Form("Casimir identities need a Cartan involution and form".into()));
    }
    let g = uea::casimir(&frame)?;
    let k = uea::casimir_k(&frame)?;
    let bar = uea::omega_bar(&frame)?;
    let decomposition_residual = g.sub(&k.scale(C64::new(2.0, 0.0))).sub(&bar).max_coeff();
    let centrality_residual = PbwAlgebra::from_frame(&frame).centrality_residual(&g)?;
    let (mut omega_bar_on_module, mut delta0) = (None, None);
    if let Some(m) = module {
        let cx = CochainComplex::new(&frame, &m.build(spec)?)?;
        let v = uea::evaluate(&bar, &frame, &cx.rep.generators)?;
        omega_bar_on_module = Some(v.row_iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect());
        delta0 = delta0_residual(&cx)?;
    }
    let pass = decomposition_residual <= tol.casimir
        && centrality_residual <= tol.casimir
        && delta0.map_or(true, |r| r <= tol.delta0);
    Ok(CasimirReport {
        algebra: name.to_string(),
        decomposition_residual,
        centrality_residual,
        omega_bar_on_module,
        delta0_residual: delta0,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MajorantSummary {
    pub omega0: f64,
    pub omega1: f64,
    pub rows_checked: usize,
    pub rows_failed: usize,
    pub partial_sums_monotone: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupCommandReport {
    pub q: usize,
    pub runs: Vec<SemigroupReport>,
    pub majorant: Option<MajorantSummary>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

/// Dyson–Phillips on a split against the exponential oracle.
pub fn dyson_run(split: &PerturbationSplit, t: f64) -> Result<(SemigroupReport, Option<String>)> {
    let r = dyson_phillips(split, t)?;
    let oracle = expm(&((&split.a + &split.b) * C64::new(-t, 0.0)))?;
    let measured_error = op_norm(&(&r.sum - &oracle));
    Ok((
        SemigroupReport {
            t,
            k: split.order,
            measured_error,
            majorant_tail: r.majorant_tail,
            per_term_norms: r.per_term_norms,
        },
        r.warning,
    ))
}

pub fn majorant_summary(data: &MajorantData, n_max: usize) -> Result<MajorantSummary> {
    let t_grid: Vec<f64> = (0..50).map(|k| 0.1 + 0.1 * k as f64).collect();
    let rep = majorant_theta(data, &t_grid, n_max)?;
    let failed = rep.rows.iter().filter(|r| !r.pass).count();
    Ok(MajorantSummary {
        omega0: rep.omega0,
        omega1: rep.omega1,
        rows_checked: rep.rows.len(),
        rows_failed: failed,
        partial_sums_monotone: rep.partial_sums_monotone,
        pass: rep.pass,
    })
}

pub fn semigroup_report(
    spec: &AlgebraSpec,
    module: &ModuleChoice,
    q: usize,
    times: &[f64],
    order: usize,
    nodes: usize,
    tol: &Tolerances,
) -> Result<SemigroupCommandReport> {
    let rep = module.build(spec)?;
    let cx = complex_for(spec, &rep)?;
    if q > cx.n() {
        return Err(Error::Input(format!("degree {} exceeds dimension {}", q, cx.n())));
    }
    let split = heat_split(&cx, q, order, nodes)?;
    let mut runs = Vec::new();
    let mut warnings = Vec::new();
    let mut pass = true;
    for &t in times {
        let (r, w) = dyson_run(&split, t)?;
        pass &= r.measured_error <= tol.dyson && r.measured_error <= r.majorant_tail + tol.dyson_over_tail;
        warnings.extend(w);
        runs.push(r);
    }
    let grid = log_grid(1e-6, 10.0, 160);
    let majorant = match MajorantData::from_split(&split.a, &split.b, &grid).and_then(|d| majorant_summary(&d, 8)) {
        Ok(m) => Some(m),
        Err(Error::Majorant(msg)) => {
            warnings.push(format!("majorant: {}", msg));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(SemigroupCommandReport { q, runs, majorant, warnings, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct SphericalReport {
    pub convention: Convention,
    pub element: [[f64; 2]; 2],
    pub iwasawa_h: f64,
    pub iwasawa_residual: f64,
    pub iwasawa_paths: f64,
    pub kak_a_plus: [f64; 2],
    pub kak_residual: f64,
    pub norm_p: f64,
    pub phi0: f64,
    pub phi0_inverse: f64,
    pub nodes: usize,
    pub richardson_delta: f64,
    pub richardson_ratios: Vec<f64>,
    pub growth_c: f64,
    pub growth_d: f64,
    pub growth_pass: bool,
    pub warnings: Vec<String>,
    pub pass: bool,
}

fn rows(m: &Matrix2<f64>) -> [[f64; 2]; 2] {
    [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
}

pub fn growth_grid() -> Vec<f64> {
    (0..10).map(|i| 0.5 + 0.5 * i as f64).collect()
}

pub fn spherical_report(x: &GroupElement, cfg: &SphericalConfig, tol: &Tolerances) -> Result<SphericalReport> {
    let m = x.real()?;
    let scale = m.amax().max(1.0);
    let a = iwasawa_nak(x)?;
    let b = iwasawa_nak_gram_schmidt(x)?;
    let paths = [(a.n - b.n).amax(), (a.a - b.a).amax(), (a.k - b.k).amax()].into_iter().fold(0.0, f64::max);
    let kak = cartan_kak(x)?;
    let v = spherical_phi0_value(x, cfg)?;
    let inv = GroupElement::sl2r(m.try_inverse().ok_or_else(|| Error::Numerical("singular element".into()))?)?;
    let phi_inv = spherical_phi0_value(&inv, cfg)?.value;
    let rich = richardson(x, 8, 5)?;
    let fit = growth_fit(&growth_grid(), cfg, gn::DEFAULT_GROWTH_SLACK)?;
    let iwasawa_residual = (a.product() - m).amax() / scale;
    let kak_residual = (kak.product() - m).amax() / scale;
    let warnings: Vec<String> = v.warning.iter().cloned().collect();
    let pass = iwasawa_residual <= tol.reconstruction
        && kak_residual <= tol.reconstruction
        && paths <= tol.paths
        && v.value > 0.0
        && v.value <= 1.0
        && (v.value - phi_inv).abs() <= tol.spherical
        && fit.pass;
    Ok(SphericalReport {
        convention: convention(),
        element: rows(&m),
        iwasawa_h: a.h,
        iwasawa_residual,
        iwasawa_paths: paths,
        kak_a_plus: [kak.a_plus[(0, 0)], kak.a_plus[(1, 1)]],
        kak_residual,
        norm_p: norm_p(x)?,
        phi0: v.value,
        phi0_inverse: phi_inv,
        nodes: v.nodes,
        richardson_delta: v.richardson_delta,
        richardson_ratios: rich.ratios,
        growth_c: fit.c,
        growth_d: fit.d,
        growth_pass: fit.pass,
        warnings,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UeaReport {
    pub casimir: Vec<CasimirReport>,
    pub oscillator_centrality: f64,
    pub ad_scaling_worst: f64,
    pub pass: bool,
}

pub fn uea_report(tol: &Tolerances) -> Result<UeaReport> {
    let casimir = vec![
        casimir_report("sl2r", &catalog::sl2r(), None, tol)?,
        casimir_report("su2", &catalog::su2(), Some(&ModuleChoice::SpinHalf), tol)?,
    ];
    let osc = catalog::oscillator();
    let alg = PbwAlgebra::new(osc.structure.clone(), (0..4).collect(), uea::DEFAULT_DEGREE_CAP)?;
    let form = osc.form.as_ref().ok_or_else(|| Error::Form("oscillator form missing".into()))?;
    let oscillator_centrality = alg.centrality_residual(&alg.casimir_subset(form, &[0, 1, 2, 3])?)?;
    let sl2 = PbwAlgebra::new(catalog::sl2r().structure, vec![0, 1, 2], uea::DEFAULT_DEGREE_CAP)?;
    let mut ad_scaling_worst: f64 = 0.0;
    for l in 0..=3usize {
        for k in 0..=8 {
            let t = -1.0 + 0.25 * k as f64;
            let r = sl2.ad_scaling_check(&[1.0, 0.0, 0.0], &vec![1; l], t)?;
            ad_scaling_worst = ad_scaling_worst.max(r.residual / r.predicted.max(1.0));
        }
    }
    let pass = casimir.iter().all(|c| c.pass) && oscillator_centrality <= tol.casimir && ad_scaling_worst <= tol.ad_scaling;
    Ok(UeaReport { casimir, oscillator_centrality, ad_scaling_worst, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupSuite {
    pub random_splits: Vec<SemigroupReport>,
    pub alpha_half: MajorantSummary,
    pub pass: bool,
}

/// Random Hermitian positive definite A with spectrum in [0.5, 2] and ‖B‖ = 0.1‖A‖.
pub fn random_split(rng: &mut ChaCha8Rng, n: usize) -> Result<PerturbationSplit> {
    use rand::Rng;
    let z = CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let q = z.qr().q();
    let d = CMat::from_diagonal(&nalgebra::DVector::from_fn(n, |_, _| C64::new(rng.gen_range(0.5..2.0), 0.0)));
    let a = &q * d * q.adjoint();
    let w = CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let b = &w * C64::new(0.1 * op_norm(&a) / op_norm(&w), 0.0);
    PerturbationSplit::new(a, b, DEFAULT_ORDER, DEFAULT_QUAD_NODES)
}

pub fn semigroup_suite(seed: u64, splits: usize, tol: &Tolerances) -> Result<SemigroupSuite> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampled: Vec<PerturbationSplit> = (0..splits).map(|_| random_split(&mut rng, 8)).collect::<Result<_>>()?;
    let runs: Vec<Vec<SemigroupReport>> = sampled
        .par_iter()
        .map(|s| [0.1, 0.5, 1.0].iter().map(|&t| dyson_run(s, t).map(|r| r.0)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let random_splits: Vec<SemigroupReport> = runs.into_iter().flatten().collect();
    let grid = log_grid(1e-7, 10.0, 320);
    let data = MajorantData::new(
        Sampled::from_fn(&grid, |t| (-t).exp())?,
        Sampled::from_fn(&grid, |t| (-t).exp() / t.sqrt())?,
    )?;
    let alpha_half = majorant_summary(&data, 8)?;
    let pass = alpha_half.pass
        && random_splits
            .iter()
            .all(|r| r.measured_error <= tol.dyson && r.measured_error <= r.majorant_tail + tol.dyson_over_tail);
    Ok(SemigroupSuite { random_splits, alpha_half, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSuite {
    pub convention: Convention,
    pub samples: usize,
    pub reconstruction_worst: f64,
    pub paths_worst: f64,
    pub spherical_symmetry_worst: f64,
    pub phi0_identity: f64,
    pub growth_c: f64,
    pub growth_d: f64,
    pub pass: bool,
}

pub fn group_suite(seed: u64, samples: usize, tol: &Tolerances) -> Result<GroupSuite> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SphericalConfig::default();
    let mut reconstruction_worst: f64 = 0.0;
    let mut paths_worst: f64 = 0.0;
    let mut spherical_symmetry_worst: f64 = 0.0;
    for i in 0..samples {
        let m = gn::random_sl2r(&mut rng);
        let x = GroupElement::sl2r(m)?;
        let scale = m.amax().max(1.0);
        let a = iwasawa_nak(&x)?;
        let b = iwasawa_nak_gram_schmidt(&x)?;
        let kak = cartan_kak(&x)?;
        reconstruction_worst = reconstruction_worst
            .max((a.product() - m).amax() / scale)
            .max((kak.product() - m).amax() / scale);
        paths_worst = paths_worst.max((a.n - b.n).amax()).max((a.a - b.a).amax()).max((a.k - b.k).amax());
        if i < 100 {
            let v = gn::spherical_phi0(&x, &cfg)?;
            let inv = gn::spherical_phi0(&GroupElement::sl2r(m.try_inverse().unwrap_or(m))?, &cfg)?;
            let k = gn::spherical_phi0(&GroupElement::sl2r(gn::rotation(0.7) * m * gn::rotation(-2.1))?, &cfg)?;
            spherical_symmetry_worst = spherical_symmetry_worst.max((v - inv).abs()).max((v - k).abs());
        }
    }
    let phi0_identity = gn::spherical_phi0(&GroupElement::sl2r(Matrix2::identity())?, &cfg)?;
    let fit = growth_fit(&growth_grid(), &cfg, gn::DEFAULT_GROWTH_SLACK)?;
    let pass = reconstruction_worst <= tol.reconstruction
        && paths_worst <= tol.paths
        && spherical_symmetry_worst <= tol.spherical
        && phi0_identity == 1.0
        && fit.pass;
    Ok(GroupSuite {
        convention: convention(),
        samples,
        reconstruction_worst,
        paths_worst,
        spherical_symmetry_worst,
        phi0_identity,
        growth_c: fit.c,
        growth_d: fit.d,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub validate: Vec<(String, ValidateReport)>,
    pub complexes: Vec<ComplexReport>,
    pub kuga: Vec<KugaReport>,
    pub uea: UeaReport,
    pub semigroup: SemigroupSuite,
    pub group: GroupSuite,
    pub warnings: Vec<String>,
    pub pass: bool,
}

pub fn corpus() -> Vec<(&'static str, AlgebraSpec)> {
    vec![
        ("su2", catalog::su2()),
        ("sl2r", catalog::sl2r()),
        ("heisenberg", catalog::heisenberg()),
        ("abelian3", catalog::abelian(3)),
    ]
}

pub fn report_all(seed: u64, tol: &Tolerances) -> Result<FullReport> {
    let betti_cfg = BettiConfig::default();
    let validate = corpus()
        .into_iter()
        .map(|(n, s)| Ok((n.to_string(), validate_report(&s)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut jobs: Vec<(&str, AlgebraSpec, ModuleChoice)> = Vec::new();
    for (n, s) in corpus() {
        jobs.push((n, s.clone(), ModuleChoice::Trivial));
        jobs.push((n, s, ModuleChoice::Adjoint));
    }
    jobs.push(("su2", catalog::su2(), ModuleChoice::SpinHalf));
    jobs.push(("sl2r", catalog::sl2r(), ModuleChoice::Standard));
    let complexes = jobs
        .par_iter()
        .map(|(n, s, m)| complex_report(n, s, m, tol, &betti_cfg))
        .collect::<Result<Vec<_>>>()?;
    let sl2 = catalog::sl2r();
    let kuga = vec![
        kuga_report("sl2r", &sl2, &ModuleChoice::Trivial, tol)?,
        kuga_report("sl2r", &sl2, &ModuleChoice::Adjoint, tol)?,
    ];
    let uea = uea_report(tol)?;
    let semigroup = semigroup_suite(seed, 5, tol)?;
    let group = group_suite(seed, 1000, tol)?;
    let warnings: Vec<String> = complexes
        .iter()
        .flat_map(|c| c.warnings.iter().map(move |w| format!("{}/{}: {}", c.algebra, c.module, w)))
        .collect();
    let pass = validate.iter().all(|v| v.1.pass)
        && complexes.iter().all(|c| c.pass)
        && kuga.iter().all(|k| k.pass)
        && uea.pass
        && semigroup.pass
        && group.pass;
    Ok(FullReport { seed, tolerances: *tol, validate, complexes, kuga, uea, semigroup, group, warnings, pass })
}

pub fn betti_line(betti: &[BettiResult]) -> String {
    betti.iter().map(|b| b.betti.to_string()).collect::<Vec<_>>().join(" ")
}

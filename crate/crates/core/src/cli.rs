//! Command-line front end.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::cochain::BettiConfig;
use crate::error::{Error, Result};
use crate::group_numerics::{GroupElement, Model, SphericalConfig};
use crate::io;
use crate::lie_core::AlgebraSpec;
use crate::report::{self, ModuleChoice, Tolerances};
use crate::semigroup::{DEFAULT_ORDER, DEFAULT_QUAD_NODES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_WARN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const DEFAULT_SEED: u64 = 20240607;

#[derive(Parser, Debug)]
#[command(name = "liehodge", version, about = "Verification suites for Lie algebra Hodge Laplacians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Cochain degree q.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Evolution time (repeatable).
    #[arg(long = "t", global = true)]
    pub t: Vec<f64>,
    /// Dyson–Phillips truncation order K.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Quadrature nodes.
    #[arg(long, global = true)]
    pub nodes: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Exit with code 2 when a check passes with numerical warnings.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Write the JSON artifact here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Override every identity tolerance.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// trivial, adjoint, spin-half, standard or a module JSON path.
    #[arg(long, global = true)]
    pub module: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Algebra axioms and frame checks.
    Validate { algebra: PathBuf },
    /// Δ_q, its spectrum and the component identities.
    Laplacian { algebra: PathBuf },
    /// Block form of Δ₁.
    Kuga { algebra: PathBuf },
    /// Betti numbers from harmonic forms.
    Betti { algebra: PathBuf },
    /// Casimir identities in the enveloping algebra.
    Casimir { algebra: PathBuf },
    /// Heat semigroup and Dyson–Phillips series on C^q.
    Semigroup { algebra: PathBuf },
    /// Group decompositions and the spherical function of an element.
    Spherical { element: PathBuf },
    /// Every suite on the built-in corpus.
    ReportAll,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    model: Model,
    element: [[f64; 2]; 2],
}

/// Printed summary, JSON artifact, pass flag and warnings of one command.
pub struct Outcome {
    pub summary: String,
    pub json: String,
    pub pass: bool,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn new<T: Serialize>(summary: String, value: &T, pass: bool, warnings: Vec<String>) -> Result<Self> {
        Ok(Self { summary, json: serde_json::to_string_pretty(value)? + "\n", pass, warnings })
    }

    pub fn exit_code(&self, strict: bool) -> i32 {
        if !self.pass {
            EXIT_FAIL
        } else if strict && !self.warnings.is_empty() {
            EXIT_WARN
        } else {
            EXIT_PASS
        }
    }
}

fn algebra_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn module_choice(flags: &Flags) -> Result<ModuleChoice> {
    Ok(match flags.module.as_deref().unwrap_or("trivial") {
        "trivial" => ModuleChoice::Trivial,
        "adjoint" => ModuleChoice::Adjoint,
        "spin-half" => ModuleChoice::SpinHalf,
        "standard" => ModuleChoice::Standard,
        path => ModuleChoice::Given(io::load_module(path)?),
    })
}

fn tolerances(flags: &Flags) -> Result<Tolerances> {
    match flags.tolerance {
        Some(t) if !(t > 0.0 && t.is_finite()) => Err(Error::Input("--tolerance must be positive".into())),
        Some(t) => Ok(Tolerances::uniform(t)),
        None => Ok(Tolerances::default()),
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn load(path: &Path) -> Result<(String, AlgebraSpec)> {
    Ok((algebra_name(path), io::load_algebra(path)?))
}

/// Runs one command without touching stdout or the filesystem.
pub fn execute(command: &Command, flags: &Flags) -> Result<Outcome> {
    let tol = tolerances(flags)?;
    match command {
        Command::Validate { algebra } => {
            let (name, spec) = load(algebra)?;
            let r = report::validate_report(&spec)?;
            let mut s = format!("{}: {}\n", name, status(r.pass));
            for c in r.algebra.checks.iter().chain(r.frame.iter().flat_map(|f| f.checks.iter())) {
                s += &format!("  {:<24} {:.3e} (≤ {:.1e}) {}\n", c.name, c.residual, c.threshold, status(c.pass));
            }
            if let Some(e) = &r.frame_error {
                s += &format!("  frame: {}\n", e);
            }
            Outcome::new(s, &r, r.pass, vec![])
        }
        Command::Laplacian { algebra } => {
            let (name, spec) = load(algebra)?;
            let module = module_choice(flags)?;
            let r = report::complex_report(&name, &spec, &module, &tol, &BettiConfig::default())?;
            let cx = report::complex_for(&spec, &module.build(&spec)?)?;
            let mut s = format!("{} / {}: {}\n", name, module.name(), status(r.pass));
            for c in &r.checks {
                s += &format!("  {:<24} {:.3e} {}\n", c.name, c.residual, status(c.pass));
            }
            match flags.degree {
                Some(q) => {
                    if q > cx.n() {
                        return Err(Error::Input(format!("degree {} exceeds dimension {}", q, cx.n())));
                    }
                    let d = &r.degrees[q];
                    s += &format!("  spectrum q={}: {:?}\n", q, d.spectrum);
                    let op = cx.laplacian(q)?;
                    let json = io::linop_to_json(&op)? + "\n";
                    Ok(Outcome { summary: s, json, pass: r.pass, warnings: r.warnings })
                }
                None => {
                    for d in &r.degrees {
                        s += &format!("  spectrum q={}: {:?}\n", d.q, d.spectrum);
                    }
                    let w = r.warnings.clone();
                    Outcome::new(s, &r, r.pass, w)
                }
            }
        }
        Command::Kuga { algebra } => {
            let (name, spec) = load(algebra)?;
            let module = module_choice(flags)?;
            let r = report::kuga_report(&name, &spec, &module, &tol)?;
            let s = format!(
                "{} / {}: {}\n  block residual {:.3e}, leakage {:.3e}, printed-coefficient residual {:.3e}\n",
                name,
                module.name(),
                status(r.pass),
                r.residual,
                r.leakage,
                r.printed_residual
            );
            Outcome::new(s, &r, r.pass, vec![])
        }
        Command::Betti { algebra } => {
            let (name, spec) = load(algebra)?;
            let module = module_choice(flags)?;
            let r = report::complex_report(&name, &spec, &module, &tol, &BettiConfig::default())?;
            let mut s = report::betti_line(&r.betti_detail) + "\n";
            let agree = r.betti_detail.iter().all(|b| b.agree);
            s += &format!("rank cross-check: {}\n", if agree { "agrees" } else { "DISAGREES" });
            for w in &r.warnings {
                s += &format!("warning: {}\n", w);
            }
            Outcome::new(s, &r.betti_detail, agree, r.warnings.clone())
        }
        Command::Casimir { algebra } => {
            let (name, spec) = load(algebra)?;
            let module = flags.module.as_ref().map(|_| module_choice(flags)).transpose()?;
            let r = report::casimir_report(&name, &spec, module.as_ref(), &tol)?;
            let mut s = format!(
                "{}: {}\n  Ω_G − 2Ω_K − Ω̄: {:.3e}\n  centrality: {:.3e}\n",
                name,
                status(r.pass),
                r.decomposition_residual,
                r.centrality_residual
            );
            if let Some(d) = r.delta0_residual {
                s += &format!("  Δ₀ + τ(Ω̄): {:.3e}\n", d);
            }
            Outcome::new(s, &r, r.pass, vec![])
        }
        Command::Semigroup { algebra } => {
            let (name, spec) = load(algebra)?;
            let module = module_choice(flags)?;
            let times = if flags.t.is_empty() { vec![0.5] } else { flags.t.clone() };
            if times.iter().any(|t| !(*t > 0.0 && t.is_finite())) {
                return Err(Error::Input("--t must be positive".into()));
            }
            let r = report::semigroup_report(
                &spec,
                &module,
                flags.degree.unwrap_or(1),
                &times,
                flags.order.unwrap_or(DEFAULT_ORDER),
                flags.nodes.unwrap_or(DEFAULT_QUAD_NODES),
                &tol,
            )?;
            let mut s = format!("{} / {} q={}: {}\n", name, module.name(), r.q, status(r.pass));
            for run in &r.runs {
                s += &format!(
                    "  t={} K={}: measured {:.3e}, majorant tail {:.3e}\n",
                    run.t, run.k, run.measured_error, run.majorant_tail
                );
            }
            if let Some(m) = &r.majorant {
                s += &format!("  majorant ω₁={:.4}: {}/{} rows within bound\n", m.omega1, m.rows_checked - m.rows_failed, m.rows_checked);
            }
            let w = r.warnings.clone();
            Outcome::new(s, &r, r.pass, w)
        }
        Command::Spherical { element } => {
            let raw: ElementJson = serde_json::from_str(&io::read_file(element)?)?;
            if raw.model != Model::Sl2r {
                return Err(Error::Model("spherical numerics are implemented for sl2r".into()));
            }
            let e = raw.element;
            let x = GroupElement::sl2r(Matrix2::new(e[0][0], e[0][1], e[1][0], e[1][1]))?;
            let cfg = SphericalConfig::new(flags.nodes.unwrap_or(256))?;
            let r = report::spherical_report(&x, &cfg, &tol)?;
            let s = format!(
                "sl2r element: {}\n  H = {:.12}, |x|_p = {:.12}, a+ = ({:.12}, {:.12})\n  phi0 = {:.15} ({} nodes, halving difference {:.2e})\n  growth fit C = {:.6}, d = {:.6}: {}\n  convention: alpha(H0) = {}, rho(H0) = {}\n",
                status(r.pass),
                r.iwasawa_h,
                r.norm_p,
                r.kak_a_plus[0],
                r.kak_a_plus[1],
                r.phi0,
                r.nodes,
                r.richardson_delta,
                r.growth_c,
                r.growth_d,
                status(r.growth_pass),
                r.convention.alpha_h0,
                r.convention.rho_h0
            );
            let w = r.warnings.clone();
            Outcome::new(s, &r, r.pass, w)
        }
        Command::ReportAll => {
            let r = report::report_all(flags.seed, &tol)?;
            let mut s = String::new();
            for (n, v) in &r.validate {
                s += &format!("validate {:<12} {}\n", n, status(v.pass));
            }
            for c in &r.complexes {
                s += &format!("complex  {:<12} {:<10} betti {:?} {}\n", c.algebra, c.module, c.betti, status(c.pass));
            }
            for k in &r.kuga {
                s += &format!("kuga     {:<12} {:<10} {:.3e} {}\n", k.algebra, k.module, k.residual, status(k.pass));
            }
            s += &format!("uea      {}\n", status(r.uea.pass));
            s += &format!("semigroup {}\n", status(r.semigroup.pass));
            s += &format!("group    {}\n", status(r.group.pass));
            s += &format!("overall  {}\n", status(r.pass));
            let w = r.warnings.clone();
            Outcome::new(s, &r, r.pass, w)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("LIEHODGE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    configure_threads();
    match execute(&cli.command, &cli.flags) {
        Ok(outcome) => {
            print!("{}", outcome.summary);
            for w in &outcome.warnings {
                eprintln!("warning: {}", w);
            }
            if let Some(path) = &cli.flags.out {
                if let Err(e) = std::fs::write(path, &outcome.json) {
                    eprintln!("error: {}: {}", path.display(), e);
                    return EXIT_INPUT;
                }
            }
            outcome.exit_code(cli.flags.strict)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    }
}

/// Parse, IO and malformed-input errors map to 3; numerical breakdowns to 1.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Numerical(_) | Error::Scaling(_) | Error::Majorant(_) | Error::Cap(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

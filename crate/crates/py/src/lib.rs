//! Python bindings. Matrices cross the boundary as nested lists.

use liehodge::cochain::{betti_table, kuga_blocks, BettiConfig, CochainComplex};
use liehodge::group_numerics::{self as gn, GroupElement, SphericalConfig};
use liehodge::io;
use liehodge::lie_core::{catalog, AlgebraSpec};
use liehodge::linalg::{op_norm, CMat, C64};
use liehodge::report::{self, ModuleChoice, Tolerances};
use liehodge::semigroup::{dyson_phillips, expm, PerturbationSplit};
use nalgebra::Matrix2;
use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: liehodge::Error) -> PyErr {
    match e {
        liehodge::Error::Io(_) => PyOSError::new_err(e.to_string()),
        liehodge::Error::Input(_) | liehodge::Error::Parse(_) | liehodge::Error::Model(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn json<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string_pretty(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

fn to_cmat(rows: Vec<Vec<C64>>) -> PyResult<CMat> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != m) {
        return Err(PyValueError::new_err("ragged matrix"));
    }
    Ok(CMat::from_fn(n, m, |i, j| rows[i][j]))
}

fn from_cmat(m: &CMat) -> Vec<Vec<C64>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect()).collect()
}

fn to_sl2(rows: [[f64; 2]; 2]) -> PyResult<GroupElement> {
    GroupElement::sl2r(Matrix2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])).map_err(py_err)
}

fn from_m2(m: &Matrix2<f64>) -> [[f64; 2]; 2] {
    [[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]
}

fn module_choice(module: &str) -> PyResult<ModuleChoice> {
    Ok(match module {
        "trivial" => ModuleChoice::Trivial,
        "adjoint" => ModuleChoice::Adjoint,
        "spin-half" => ModuleChoice::SpinHalf,
        "standard" => ModuleChoice::Standard,
        path => ModuleChoice::Given(io::load_module(path).map_err(py_err)?),
    })
}

/// A real Lie algebra with optional involution and invariant form.
#[pyclass(frozen)]
struct Algebra {
    spec: AlgebraSpec,
}

#[pymethods]
impl Algebra {
    /// Built-in algebra: su2, sl2r, heisenberg, abelian3, oscillator, affine.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        catalog::by_name(name)
            .map(|spec| Self { spec })
            .ok_or_else(|| PyValueError::new_err(format!("unknown algebra {name}")))
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        io::load_algebra(path).map(|spec| Self { spec }).map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::algebra_from_json(text).map(|spec| Self { spec }).map_err(py_err)
    }

    fn to_json(&self) -> PyResult<String> {
        io::algebra_to_json(&self.spec).map_err(py_err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.spec.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.spec.labels.clone()
    }

    /// Structure, frame and form checks as a JSON report.
    fn validate(&self) -> PyResult<String> {
        json(&report::validate_report(&self.spec).map_err(py_err)?)
    }

    fn is_valid(&self) -> PyResult<bool> {
        Ok(report::validate_report(&self.spec).map_err(py_err)?.pass)
    }

    #[pyo3(signature = (module = None))]
    fn casimir(&self, module: Option<&str>) -> PyResult<String> {
        let m = module.map(module_choice).transpose()?;
        json(&report::casimir_report("algebra", &self.spec, m.as_ref(), &Tolerances::default()).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, labels={:?})", self.spec.dim(), self.spec.labels)
    }
}

/// Cochain complex of an algebra with coefficients in a module.
#[pyclass(frozen)]
struct Complex {
    cx: CochainComplex,
}

#[pymethods]
impl Complex {
    #[new]
    #[pyo3(signature = (algebra, module = "trivial"))]
    fn new(algebra: &Algebra, module: &str) -> PyResult<Self> {
        let rep = module_choice(module)?.build(&algebra.spec).map_err(py_err)?;
        Ok(Self { cx: report::complex_for(&algebra.spec, &rep).map_err(py_err)? })
    }

    #[getter]
    fn top_degree(&self) -> usize {
        self.cx.n()
    }

    fn dim(&self, q: usize) -> usize {
        self.cx.dim(q)
    }

    fn laplacian(&self, q: usize) -> PyResult<Vec<Vec<C64>>> {
        Ok(from_cmat(&self.cx.laplacian(q).map_err(py_err)?.matrix))
    }

    fn differential(&self, q: usize) -> PyResult<Vec<Vec<C64>>> {
        Ok(from_cmat(&self.cx.d_full(q).map_err(py_err)?.matrix))
    }

    fn spectrum(&self, q: usize) -> PyResult<Vec<f64>> {
        self.cx.spectrum(q).map_err(py_err)
    }

    fn betti(&self) -> PyResult<Vec<usize>> {
        let table = betti_table(&self.cx, &BettiConfig::default()).map_err(py_err)?;
        Ok(table.iter().map(|b| b.betti).collect())
    }

    fn d_squared_residual(&self) -> PyResult<f64> {
        self.cx.d_squared_residual().map_err(py_err)
    }

    /// Residual of the degree-1 block decomposition against the Laplacian.
    fn kuga_residual(&self) -> PyResult<f64> {
        Ok(kuga_blocks(&self.cx).map_err(py_err)?.residual)
    }

    fn derivation_residual(&self, q: usize) -> PyResult<f64> {
        self.cx.derivation_check(q).map_err(py_err)
    }
}

/// Truncated Dyson–Phillips sum for e^{−t(A+B)}. Returns (sum, measured error, majorant tail).
#[pyfunction]
#[pyo3(signature = (a, b, t, order = 12, nodes = 32))]
fn dyson_phillips_sum(
    a: Vec<Vec<C64>>,
    b: Vec<Vec<C64>>,
    t: f64,
    order: usize,
    nodes: usize,
) -> PyResult<(Vec<Vec<C64>>, f64, f64)> {
    let (a, b) = (to_cmat(a)?, to_cmat(b)?);
    let split = PerturbationSplit::new(a.clone(), b.clone(), order, nodes).map_err(py_err)?;
    let r = dyson_phillips(&split, t).map_err(py_err)?;
    let exact = expm(&((a + b) * C64::new(-t, 0.0))).map_err(py_err)?;
    Ok((from_cmat(&r.sum), op_norm(&(&r.sum - exact)), r.majorant_tail))
}

#[pyfunction]
fn matrix_exp(a: Vec<Vec<C64>>) -> PyResult<Vec<Vec<C64>>> {
    Ok(from_cmat(&expm(&to_cmat(a)?).map_err(py_err)?))
}

/// x = n·a·k. Returns (n, a, k, h).
#[pyfunction]
fn iwasawa(x: [[f64; 2]; 2]) -> PyResult<([[f64; 2]; 2], [[f64; 2]; 2], [[f64; 2]; 2], f64)> {
    let f = gn::iwasawa_nak(&to_sl2(x)?).map_err(py_err)?;
    Ok((from_m2(&f.n), from_m2(&f.a), from_m2(&f.k), f.h))
}

/// x = k1·a+·k2. Returns (k1, a+, k2).
#[pyfunction]
fn kak(x: [[f64; 2]; 2]) -> PyResult<([[f64; 2]; 2], [[f64; 2]; 2], [[f64; 2]; 2])> {
    let f = gn::cartan_kak(&to_sl2(x)?).map_err(py_err)?;
    Ok((from_m2(&f.k1), from_m2(&f.a_plus), from_m2(&f.k2)))
}

#[pyfunction]
fn norm_p(x: [[f64; 2]; 2]) -> PyResult<f64> {
    gn::norm_p(&to_sl2(x)?).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (x, nodes = 256))]
fn phi0(x: [[f64; 2]; 2], nodes: usize) -> PyResult<f64> {
    let cfg = SphericalConfig::new(nodes).map_err(py_err)?;
    gn::spherical_phi0(&to_sl2(x)?, &cfg).map_err(py_err)
}

/// Full suite as JSON, identical to the report-all command.
#[pyfunction]
#[pyo3(signature = (seed = liehodge::cli::DEFAULT_SEED))]
fn report_all(seed: u64) -> PyResult<String> {
    json(&report::report_all(seed, &Tolerances::default()).map_err(py_err)?)
}

#[pymodule(name = "liehodge")]
fn liehodge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Complex>()?;
    m.add_function(wrap_pyfunction!(dyson_phillips_sum, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_exp, m)?)?;
    m.add_function(wrap_pyfunction!(iwasawa, m)?)?;
    m.add_function(wrap_pyfunction!(kak, m)?)?;
    m.add_function(wrap_pyfunction!(norm_p, m)?)?;
    m.add_function(wrap_pyfunction!(phi0, m)?)?;
    m.add_function(wrap_pyfunction!(report_all, m)?)?;
    Ok(())
}

//! JSON formats for algebras, modules, operators, PBW elements and semigroup reports.
//!
//! Structure indices and PBW orders are 1-based on disk. Matrices are
//! row-major; complex entries are `[re, im]` pairs.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cochain::LinOp;
use crate::error::{Error, Result};
use crate::lie_core::{AlgebraSpec, ModuleRep, DEFAULT_TOLERANCE};
use crate::linalg::{CMat, RMat, C64};
use crate::uea::PbwElement;

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    structure: Vec<(usize, usize, usize, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    form: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    dim_v: usize,
    generators: Vec<Vec<Vec<[f64; 2]>>>,
    gram: Vec<Vec<[f64; 2]>>,
    unitary: bool,
}

#[derive(Serialize, Deserialize)]
struct LinOpJson {
    from: usize,
    to: usize,
    rows: usize,
    cols: usize,
    data: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct PbwTerm {
    exps: Vec<u32>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct PbwJson {
    order: Vec<usize>,
    terms: Vec<PbwTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree_cap: Option<usize>,
}

/// Per-time Dyson–Phillips summary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub t: f64,
    #[serde(rename = "K")]
    pub k: usize,
    pub measured_error: f64,
    pub majorant_tail: f64,
    pub per_term_norms: Vec<f64>,
}

pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {}", path.display(), e))))
}

fn real_matrix(name: &str, rows: &[Vec<f64>], n: usize) -> Result<RMat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Input(format!("{} must be {}×{}", name, n, n)));
    }
    Ok(RMat::from_fn(n, n, |i, j| rows[i][j]))
}

fn real_rows(m: &RMat) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn complex_matrix(name: &str, rows: &[Vec<[f64; 2]>], m: usize) -> Result<CMat> {
    if rows.len() != m || rows.iter().any(|r| r.len() != m) {
        return Err(Error::Input(format!("{} must be {}×{}", name, m, m)));
    }
    Ok(CMat::from_fn(m, m, |i, j| C64::new(rows[i][j][0], rows[i][j][1])))
}

fn complex_rows(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    m.row_iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect()
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraSpec> {
    let raw: AlgebraJson = serde_json::from_str(text)?;
    let mut spec = AlgebraSpec::from_entries(raw.dim, &raw.structure, raw.labels)?;
    if let Some(t) = raw.tolerance {
        spec = AlgebraSpec::new(spec.labels, spec.structure, None, None, t)?;
    }
    if let Some(rows) = &raw.involution {
        spec = spec.with_involution(real_matrix("involution", rows, raw.dim)?)?;
    }
    if let Some(rows) = &raw.form {
        spec = spec.with_form(real_matrix("form", rows, raw.dim)?)?;
    }
    Ok(spec)
}

pub fn algebra_to_json(spec: &AlgebraSpec) -> Result<String> {
    let raw = AlgebraJson {
        dim: spec.dim(),
        labels: Some(spec.labels.clone()),
        structure: spec
            .structure
            .entries()
            .into_iter()
            .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c))
            .collect(),
        involution: spec.involution.as_ref().map(real_rows),
        form: spec.form.as_ref().map(real_rows),
        tolerance: (spec.tolerance != DEFAULT_TOLERANCE).then_some(spec.tolerance),
    };
    Ok(serde_json::to_string_pretty(&raw)?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<AlgebraSpec> {
    algebra_from_json(&read_file(path)?)
}

pub fn module_from_json(text: &str) -> Result<ModuleRep> {
    let raw: ModuleJson = serde_json::from_str(text)?;
    let generators = raw
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| complex_matrix(&format!("generator {}", i + 1), g, raw.dim_v))
        .collect::<Result<Vec<_>>>()?;
    let gram = complex_matrix("gram", &raw.gram, raw.dim_v)?;
    ModuleRep::new(generators, gram, raw.unitary)
}

pub fn module_to_json(rep: &ModuleRep) -> Result<String> {
    let raw = ModuleJson {
        dim_v: rep.dim_v(),
        generators: rep.generators.iter().map(complex_rows).collect(),
        gram: complex_rows(&rep.gram),
        unitary: rep.unitary,
    };
    Ok(serde_json::to_string_pretty(&raw)?)
}

pub fn load_module(path: impl AsRef<Path>) -> Result<ModuleRep> {
    module_from_json(&read_file(path)?)
}

pub fn linop_to_json(op: &LinOp) -> Result<String> {
    let m = &op.matrix;
    let raw = LinOpJson {
        from: op.from,
        to: op.to,
        rows: m.nrows(),
        cols: m.ncols(),
        data: m.transpose().iter().map(|z| [z.re, z.im]).collect(),
    };
    Ok(serde_json::to_string(&raw)?)
}

pub fn linop_from_json(text: &str) -> Result<LinOp> {
    let raw: LinOpJson = serde_json::from_str(text)?;
    if raw.data.len() != raw.rows * raw.cols {
        return Err(Error::Input(format!(
            "operator data has {} entries, expected {}×{}",
            raw.data.len(),
            raw.rows,
            raw.cols
        )));
    }
    let matrix = CMat::from_fn(raw.rows, raw.cols, |i, j| {
        let [re, im] = raw.data[i * raw.cols + j];
        C64::new(re, im)
    });
    Ok(LinOp { matrix, from: raw.from, to: raw.to })
}

pub fn pbw_to_json(e: &PbwElement) -> Result<String> {
    let raw = PbwJson {
        order: e.order.iter().map(|g| g + 1).collect(),
        terms: e.terms.iter().map(|(x, c)| PbwTerm { exps: x.clone(), re: c.re, im: c.im }).collect(),
        degree_cap: Some(e.degree_cap),
    };
    Ok(serde_json::to_string(&raw)?)
}

pub fn pbw_from_json(text: &str) -> Result<PbwElement> {
    let raw: PbwJson = serde_json::from_str(text)?;
    let n = raw.order.len();
    let mut seen = vec![false; n];
    for &g in &raw.order {
        if g == 0 || g > n || seen[g - 1] {
            return Err(Error::Input("order must be a 1-based permutation".into()));
        }
        seen[g - 1] = true;
    }
    let mut terms = BTreeMap::new();
    for t in raw.terms {
        if t.exps.len() != n {
            return Err(Error::Input(format!("exponent vector has {} entries, expected {}", t.exps.len(), n)));
        }
        let c = C64::new(t.re, t.im);
        if c != C64::new(0.0, 0.0) {
            *terms.entry(t.exps).or_insert(C64::new(0.0, 0.0)) += c;
        }
    }
    Ok(PbwElement {
        order: raw.order.iter().map(|g| g - 1).collect(),
        terms,
        degree_cap: raw.degree_cap.unwrap_or(crate::uea::DEFAULT_DEGREE_CAP),
    })
}

//! Python bindings for `qir-core`.
//!
//! Matrices cross the boundary as lists of rows of Python `complex`.
//! Structured results (profiles, reports, campaigns, argmins) come back as
//! plain dicts decoded from the crate's JSON form.

use num_complex::Complex64 as C64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qir_core::config::parse_config;
use qir_core::explore::{self, Argmin, MinimizeOptions};
use qir_core::relations::{mu_bound as core_mu_bound, Evaluation, Relation, DEFAULT_TOL};
use qir_core::{channels, entropy, states, tokens, CMatrix};

fn err(e: qir_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(json_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn matrix_from_rows(rows: Vec<Vec<C64>>) -> PyResult<CMatrix> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(PyValueError::new_err("matrix must be square"));
    }
    Ok(CMatrix::from_fn(n, |i, j| rows[i][j]))
}

fn matrix_to_rows(m: &CMatrix) -> Vec<Vec<C64>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m[(i, j)]).collect())
        .collect()
}

fn relation(name: &str) -> PyResult<Relation> {
    name.parse().map_err(err)
}

/// Density matrix on H_A ⊗ H_B, A the slow index.
#[pyclass(name = "BipartiteState", module = "qir", frozen)]
struct PyState {
    inner: states::BipartiteState,
}

#[pymethods]
impl PyState {
    #[new]
    fn new(d_a: usize, d_b: usize, rho: Vec<Vec<C64>>) -> PyResult<Self> {
        let rho = matrix_from_rows(rho)?;
        Ok(Self {
            inner: states::BipartiteState::new(d_a, d_b, rho).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_pure(d_a: usize, d_b: usize, psi: Vec<C64>) -> PyResult<Self> {
        states::BipartiteState::from_pure(d_a, d_b, &psi)
            .map(Self::from)
            .map_err(err)
    }

    /// `bell:d`, `mixed:dA,dB`, `werner:w`, `haar:dA,dB,seed`, `induced:dA,dB,seed`.
    #[staticmethod]
    fn parse(token: &str) -> PyResult<Self> {
        tokens::parse_state(token).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn max_entangled(d: usize) -> PyResult<Self> {
        states::max_entangled(d).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn max_mixed(d_a: usize, d_b: usize) -> PyResult<Self> {
        states::max_mixed(d_a, d_b).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn werner(w: f64) -> PyResult<Self> {
        states::werner(w).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn haar_pure(d_a: usize, d_b: usize, seed: u64) -> PyResult<Self> {
        states::haar_random_pure(d_a, d_b, seed)
            .map(Self::from)
            .map_err(err)
    }

    #[staticmethod]
    fn random_mixed(d_a: usize, d_b: usize, rank_env: usize, seed: u64) -> PyResult<Self> {
        states::random_mixed(d_a, d_b, rank_env, seed)
            .map(Self::from)
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner: states::BipartiteState = serde_json::from_str(text).map_err(json_err)?;
        inner.validate().map_err(err)?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(json_err)
    }

    #[getter]
    fn d_a(&self) -> usize {
        self.inner.d_a()
    }

    #[getter]
    fn d_b(&self) -> usize {
        self.inner.d_b()
    }

    #[getter]
    fn rho(&self) -> Vec<Vec<C64>> {
        matrix_to_rows(self.inner.rho())
    }

    fn reduced_a(&self) -> Vec<Vec<C64>> {
        matrix_to_rows(&self.inner.reduced_a())
    }

    fn reduced_b(&self) -> Vec<Vec<C64>> {
        matrix_to_rows(&self.inner.reduced_b())
    }

    fn purity(&self) -> f64 {
        self.inner.purity()
    }

    fn __repr__(&self) -> String {
        format!(
            "BipartiteState(d_a={}, d_b={})",
            self.inner.d_a(),
            self.inner.d_b()
        )
    }
}

impl From<states::BipartiteState> for PyState {
    fn from(inner: states::BipartiteState) -> Self {
        Self { inner }
    }
}

/// Orthonormal eigenbasis of an observable on A; column i is |x_i⟩.
#[pyclass(name = "ObservableBasis", module = "qir", frozen)]
struct PyBasis {
    inner: states::ObservableBasis,
}

#[pymethods]
impl PyBasis {
    #[new]
    fn new(vectors: Vec<Vec<C64>>) -> PyResult<Self> {
        let m = matrix_from_rows(vectors)?;
        states::ObservableBasis::new(m).map(Self::from).map_err(err)
    }

    /// `comp:d`, `fourier:d`, `haar:d,seed`.
    #[staticmethod]
    fn parse(token: &str) -> PyResult<Self> {
        tokens::parse_basis(token).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn computational(d: usize) -> PyResult<Self> {
        states::computational_basis(d).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn fourier(d: usize) -> PyResult<Self> {
        states::fourier_basis(d).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn random(d: usize, seed: u64) -> PyResult<Self> {
        states::random_basis(d, seed).map(Self::from).map_err(err)
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn vectors(&self) -> Vec<Vec<C64>> {
        matrix_to_rows(self.inner.vectors())
    }

    fn ket(&self, i: usize) -> PyResult<Vec<C64>> {
        if i >= self.inner.d() {
            return Err(PyValueError::new_err(format!("index {i} out of range")));
        }
        Ok(self.inner.ket(i))
    }

    fn __repr__(&self) -> String {
        format!("ObservableBasis(d={})", self.inner.d())
    }
}

impl From<states::ObservableBasis> for PyBasis {
    fn from(inner: states::ObservableBasis) -> Self {
        Self { inner }
    }
}

#[pyfunction]
fn shannon(p: Vec<f64>) -> PyResult<f64> {
    entropy::shannon(&p).map_err(err)
}

#[pyfunction]
fn vn_entropy(rho: Vec<Vec<C64>>) -> PyResult<f64> {
    entropy::vn_entropy(&matrix_from_rows(rho)?).map_err(err)
}

/// H(A|B).
#[pyfunction]
fn cond_entropy(state: &PyState) -> PyResult<f64> {
    entropy::cond_entropy(&state.inner).map_err(err)
}

/// H(X|B).
#[pyfunction]
fn uncertainty(x: &PyBasis, state: &PyState) -> PyResult<f64> {
    entropy::uncertainty(&x.inner, &state.inner).map_err(err)
}

/// ℑ(X|ρ).
#[pyfunction]
fn irreality(x: &PyBasis, state: &PyState) -> PyResult<f64> {
    entropy::irreality(&x.inner, &state.inner).map_err(err)
}

#[pyfunction]
fn profile<'py>(py: Python<'py>, x: &PyBasis, state: &PyState) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &entropy::profile(&x.inner, &state.inner).map_err(err)?)
}

/// −2 ln max |⟨x_i|y_j⟩|.
#[pyfunction]
fn mu_bound(x: &PyBasis, y: &PyBasis) -> PyResult<f64> {
    core_mu_bound(&x.inner, &y.inner).map_err(err)
}

#[pyfunction]
fn dephase(x: &PyBasis, state: &PyState) -> PyResult<PyState> {
    channels::dephase(&x.inner, &state.inner)
        .map(PyState::from)
        .map_err(err)
}

/// `n` applications of M_Y^ε.
#[pyfunction]
#[pyo3(signature = (y, eps, state, n = 1))]
fn monitor(y: &PyBasis, eps: f64, state: &PyState, n: usize) -> PyResult<PyState> {
    channels::monitor_n(&y.inner, eps, n, &state.inner)
        .map(PyState::from)
        .map_err(err)
}

#[pyfunction]
fn dephasings_commute(x: &PyBasis, y: &PyBasis) -> PyResult<bool> {
    channels::dephasings_commute(&x.inner, &y.inner).map_err(err)
}

/// `(name, alias)` of every relation.
#[pyfunction]
fn relations() -> Vec<(&'static str, &'static str)> {
    Relation::ALL
        .iter()
        .map(|r| (r.name(), r.alias()))
        .collect()
}

/// Reports of every relation, keyed by relation name. `eps` enables the
/// monitoring bound.
#[pyfunction]
#[pyo3(signature = (x, y, state, eps = None, tol = DEFAULT_TOL))]
fn evaluate<'py>(
    py: Python<'py>,
    x: &PyBasis,
    y: &PyBasis,
    state: &PyState,
    eps: Option<f64>,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let e = Evaluation::compute(&x.inner, &y.inner, &state.inner, eps).map_err(err)?;
    let reports: serde_json::Map<String, serde_json::Value> = Relation::ALL
        .iter()
        .map(|&r| {
            let v = serde_json::to_value(e.reports(r, tol)).map_err(json_err)?;
            Ok((r.name().to_string(), v))
        })
        .collect::<PyResult<_>>()?;
    to_py(py, &reports)
}

/// Signed slack of one relation; identities report minus their residual.
#[pyfunction]
#[pyo3(signature = (relation_name, x, y, state, eps = None))]
fn slack(
    relation_name: &str,
    x: &PyBasis,
    y: &PyBasis,
    state: &PyState,
    eps: Option<f64>,
) -> PyResult<f64> {
    let rel = relation(relation_name)?;
    let e = Evaluation::compute(&x.inner, &y.inner, &state.inner, eps).map_err(err)?;
    Ok(e.slack(rel))
}

/// Campaign from config text (`key = value` lines).
#[pyfunction]
#[pyo3(signature = (config = "", workers = None))]
fn run_campaign<'py>(
    py: Python<'py>,
    config: &str,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = parse_config(config).map_err(err)?;
    let res = py
        .detach(|| match workers {
            Some(w) => explore::run_campaign_with_workers(&cfg, w),
            None => explore::run_campaign(&cfg),
        })
        .map_err(err)?;
    to_py(py, &res)
}

/// Irreality of X and H(Y|B) along M_Y^ε for each ε in `grid`.
#[pyfunction]
fn sweep<'py>(
    py: Python<'py>,
    x: &PyBasis,
    y: &PyBasis,
    state: &PyState,
    grid: Vec<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let trace = explore::monitoring_sweep(&x.inner, &y.inner, &state.inner, &grid).map_err(err)?;
    to_py(py, &trace)
}

/// Smallest slack found for `relation` over pure states on dA × dB.
#[pyfunction]
#[pyo3(signature = (relation_name, d_a, d_b, restarts = 50, seed = 0))]
fn minimize<'py>(
    py: Python<'py>,
    relation_name: &str,
    d_a: usize,
    d_b: usize,
    restarts: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let rel = relation(relation_name)?;
    let opts = MinimizeOptions {
        restarts,
        seed,
        ..Default::default()
    };
    let m = py
        .detach(|| explore::minimize_slack(rel, d_a, d_b, &opts))
        .map_err(err)?;
    to_py(py, &m)
}

/// Re-evaluates a saved argmin (JSON text) and returns its slack.
#[pyfunction]
fn replay(argmin_json: &str) -> PyResult<f64> {
    let a: Argmin = serde_json::from_str(argmin_json).map_err(json_err)?;
    a.replay().map_err(err)
}

#[pymodule]
fn qir(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_TOL", DEFAULT_TOL)?;
    m.add_class::<PyState>()?;
    m.add_class::<PyBasis>()?;
    m.add_function(wrap_pyfunction!(shannon, m)?)?;
    m.add_function(wrap_pyfunction!(vn_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(cond_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(uncertainty, m)?)?;
    m.add_function(wrap_pyfunction!(irreality, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(mu_bound, m)?)?;
    m.add_function(wrap_pyfunction!(dephase, m)?)?;
    m.add_function(wrap_pyfunction!(monitor, m)?)?;
    m.add_function(wrap_pyfunction!(dephasings_commute, m)?)?;
    m.add_function(wrap_pyfunction!(relations, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(slack, m)?)?;
    m.add_function(wrap_pyfunction!(run_campaign, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(minimize, m)?)?;
    m.add_function(wrap_pyfunction!(replay, m)?)?;
    Ok(())
}

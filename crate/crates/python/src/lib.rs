//! Python bindings for the `covprune` solvers.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use covprune::search::Engine;
use covprune::{approx, coverage, flow, oracle, search};

fn to_py_err(e: covprune::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_engine(name: &str) -> PyResult<Engine> {
    name.parse::<Engine>().map_err(PyValueError::new_err)
}

/// An ordered set of half-open intervals `[start, end)`.
#[pyclass(module = "covprune_py", name = "IntervalSet", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyIntervalSet {
    inner: covprune::IntervalSet,
}

#[pymethods]
impl PyIntervalSet {
    #[new]
    fn new(pairs: Vec<(u64, u64)>) -> PyResult<Self> {
        let inner = covprune::IntervalSet::from_pairs(pairs).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __getitem__(&self, index: usize) -> PyResult<(u64, u64)> {
        self.inner
            .get(index)
            .map(|iv| (iv.start, iv.end))
            .ok_or_else(|| PyIndexError::new_err("interval index out of range"))
    }

    fn __repr__(&self) -> String {
        format!("IntervalSet(n={})", self.inner.len())
    }

    /// `(start, end)` of the covered span, or `None` when empty.
    fn span(&self) -> Option<(u64, u64)> {
        self.inner.span().map(|s| (s.start, s.end))
    }

    fn pairs(&self) -> Vec<(u64, u64)> {
        self.inner.iter().map(|iv| (iv.start, iv.end)).collect()
    }
}

/// Result of a solver run.
#[pyclass(module = "covprune_py", name = "Solution", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PySolution {
    kept: Vec<usize>,
    achieved_mincov: u64,
    achieved_maxcov: u64,
    method: String,
    flow_solves: u64,
    augmentations: u64,
    tree_nodes: u64,
    subsets: u64,
}

#[pymethods]
impl PySolution {
    fn __repr__(&self) -> String {
        format!(
            "Solution(method={:?}, kept={}, mincov={}, maxcov={})",
            self.method,
            self.kept.len(),
            self.achieved_mincov,
            self.achieved_maxcov
        )
    }
}

impl From<covprune::Solution> for PySolution {
    fn from(s: covprune::Solution) -> Self {
        Self {
            kept: s.kept,
            achieved_mincov: s.achieved_mincov,
            achieved_maxcov: s.achieved_maxcov,
            method: s.method.as_str().to_string(),
            flow_solves: s.work.flow_solves,
            augmentations: s.work.augmentations,
            tree_nodes: s.work.tree_nodes,
            subsets: s.work.subsets,
        }
    }
}

/// Returns `(delimiters, segment_cov)`.
#[pyfunction]
fn coverage_profile(set: &PyIntervalSet) -> (Vec<u64>, Vec<u64>) {
    let p = coverage::coverage_profile(&set.inner);
    (p.delimiters, p.segment_cov)
}

#[pyfunction]
fn mincov_span(set: &PyIntervalSet) -> u64 {
    coverage::mincov_span(&set.inner)
}

#[pyfunction]
fn maxcov(set: &PyIntervalSet) -> u64 {
    coverage::maxcov(&set.inner)
}

#[pyfunction]
fn cov_at(set: &PyIntervalSet, p: u64) -> u64 {
    coverage::cov_at(&set.inner, p)
}

/// Subset with coverage within `[t, k]` on the span, or `None`.
#[pyfunction]
#[pyo3(signature = (set, k, t, warm_start = true))]
fn decide(set: &PyIntervalSet, k: u64, t: u64, warm_start: bool) -> PyResult<Option<PySolution>> {
    flow::decide(&set.inner, k, t, warm_start)
        .map(|o| o.map(PySolution::from))
        .map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (set, k, engine = "tailored"))]
fn solve_exact(py: Python<'_>, set: &PyIntervalSet, k: u64, engine: &str) -> PyResult<PySolution> {
    let engine = parse_engine(engine)?;
    let inner = set.inner.clone();
    py.detach(move || search::solve_exact(&inner, k, engine))
        .map(PySolution::from)
        .map_err(to_py_err)
}

#[pyfunction]
fn approx_prune(py: Python<'_>, set: &PyIntervalSet, k: u64) -> PyResult<PySolution> {
    let inner = set.inner.clone();
    py.detach(move || approx::approx_prune(&inner, k))
        .map(PySolution::from)
        .map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (set, k, limit = oracle::DEFAULT_LIMIT))]
fn brute_force_opt(set: &PyIntervalSet, k: u64, limit: usize) -> PyResult<PySolution> {
    oracle::brute_force_opt(&set.inner, k, limit)
        .map(PySolution::from)
        .map_err(to_py_err)
}

#[pyfunction]
fn opt_upper_bound(set: &PyIntervalSet, k: u64) -> u64 {
    search::opt_upper_bound(&set.inner, k)
}

#[pyfunction]
#[pyo3(signature = (n, span_length = 1_000_000, seed = 1))]
fn generate_instance(n: usize, span_length: u64, seed: u64) -> PyIntervalSet {
    PyIntervalSet {
        inner: covprune::cli::generate_instance(n, span_length, seed),
    }
}

#[pymodule]
fn covprune_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntervalSet>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(coverage_profile, m)?)?;
    m.add_function(wrap_pyfunction!(mincov_span, m)?)?;
    m.add_function(wrap_pyfunction!(maxcov, m)?)?;
    m.add_function(wrap_pyfunction!(cov_at, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(solve_exact, m)?)?;
    m.add_function(wrap_pyfunction!(approx_prune, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_opt, m)?)?;
    m.add_function(wrap_pyfunction!(opt_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(generate_instance, m)?)?;
    Ok(())
}

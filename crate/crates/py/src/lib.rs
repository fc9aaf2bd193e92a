//! Python bindings for `berge_core`.

use berge_core::berge as search;
use berge_core::bounds;
use berge_core::connectivity::is_2connected;
use berge_core::constructions;
use berge_core::enumerate::{extremal_number as core_extremal, Caps, Mode};
use berge_core::shrink;
use berge_core::verify::{self as core_verify, Grid, Theorem};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: berge_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A Berge witness as `(length, base vertices, edge indices)`.
type Witness = (usize, Vec<usize>, Vec<usize>);

fn witness(r: search::SearchResult) -> Witness {
    match r.witness {
        Some(w) => (r.length, w.base, w.edges),
        None => (r.length, Vec::new(), Vec::new()),
    }
}

#[pyclass(name = "Hypergraph", module = "berge", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: berge_core::Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = berge_core::Hypergraph::new(n, r, &edges).map_err(err)?;
        Ok(PyHypergraph { inner })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyHypergraph { inner: berge_core::Hypergraph::from_json(s).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.to_data().edges
    }

    fn __len__(&self) -> usize {
        self.inner.num_edges()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph({})", self.inner.to_json())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn is_sperner(&self) -> bool {
        self.inner.is_sperner()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_two_connected(&self) -> bool {
        is_2connected(&self.inner)
    }

    fn is_happy(&self) -> bool {
        self.inner.is_happy()
    }

    #[pyo3(signature = (cutoff=None))]
    fn circumference(&self, cutoff: Option<usize>) -> usize {
        search::circumference(&self.inner, cutoff).length
    }

    #[pyo3(signature = (cutoff=None))]
    fn longest_cycle(&self, cutoff: Option<usize>) -> Witness {
        witness(search::circumference(&self.inner, cutoff))
    }

    #[pyo3(signature = (cutoff=None))]
    fn longest_path(&self, cutoff: Option<usize>) -> Witness {
        witness(search::longest_berge_path(&self.inner, cutoff))
    }
}

#[pyfunction]
fn f(n: usize, k: usize, r: usize, a: usize) -> PyResult<BigUint> {
    bounds::f(n, k, r, a).map_err(err)
}

#[pyfunction]
fn fstar(n: usize, k: usize, r: usize, a: usize) -> PyResult<BigUint> {
    bounds::fstar(n, k, r, a).map_err(err)
}

#[pyfunction]
fn hsp(n: usize, l: usize, r: usize, d: usize) -> PyResult<BigUint> {
    bounds::hsp(n, l, r, d).map_err(err)
}

#[pyfunction]
fn main_cycle_bound(n: usize, k: usize, r: usize) -> PyResult<BigUint> {
    bounds::main_cycle_bound(n, k, r).map_err(err)
}

#[pyfunction]
fn main_path_bound(n: usize, k: usize, r: usize) -> PyResult<BigUint> {
    bounds::main_path_bound(n, k, r).map_err(err)
}

#[pyfunction]
fn build_hnka(n: usize, k: usize, a: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: constructions::build_hnka(n, k, a).map_err(err)?.hypergraph })
}

#[pyfunction]
fn build_hcal(n: usize, k: usize, r: usize, a: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: constructions::build_hcal(n, k, r, a).map_err(err)?.hypergraph })
}

#[pyfunction]
fn build_fnkrs(k: usize, r: usize, s: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: constructions::build_fnkrs(k, r, s).map_err(err)?.hypergraph })
}

/// Shrink trace as JSON.
#[pyfunction]
fn reduce_to_happy(h: &PyHypergraph, k: usize) -> PyResult<String> {
    Ok(shrink::reduce_to_happy(&h.inner, k).map_err(err)?.to_json())
}

/// `(max edges, a maximizer)` over Sperner `r⁻`-graphs with no long cycle
/// (`mode="cycle"`, 2-connected) or path (`mode="path"`, connected).
#[pyfunction]
#[pyo3(signature = (n, k, r, mode, workers=1))]
fn extremal_number(n: usize, k: usize, r: usize, mode: &str, workers: usize) -> PyResult<(usize, Option<PyHypergraph>)> {
    let mode = match mode {
        "cycle" => Mode::Cycle,
        "path" => Mode::Path,
        other => return Err(PyValueError::new_err(format!("mode must be 'cycle' or 'path', got {other:?}"))),
    };
    let ex = core_extremal(n, k, r, mode, &Caps::from_env(), workers.max(1)).map_err(err)?;
    Ok((ex.max_edges, ex.witness.map(|inner| PyHypergraph { inner })))
}

/// Verification report as CSV text.
#[pyfunction]
#[pyo3(signature = (theorem, nmax, ks, rs, nmin=1, samples=100, seed=0, workers=1))]
#[allow(clippy::too_many_arguments)]
fn verify(
    theorem: &str,
    nmax: usize,
    ks: Vec<usize>,
    rs: Vec<usize>,
    nmin: usize,
    samples: usize,
    seed: u64,
    workers: usize,
) -> PyResult<String> {
    let t: Theorem = theorem.parse().map_err(err)?;
    let mut g = Grid::new(nmax, &ks, &rs);
    g.nmin = nmin;
    g.samples = samples;
    g.seed = seed;
    g.workers = workers.max(1);
    Ok(core_verify::verify(t, &g).map_err(err)?.to_csv())
}

#[pymodule]
fn berge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(fstar, m)?)?;
    m.add_function(wrap_pyfunction!(hsp, m)?)?;
    m.add_function(wrap_pyfunction!(main_cycle_bound, m)?)?;
    m.add_function(wrap_pyfunction!(main_path_bound, m)?)?;
    m.add_function(wrap_pyfunction!(build_hnka, m)?)?;
    m.add_function(wrap_pyfunction!(build_hcal, m)?)?;
    m.add_function(wrap_pyfunction!(build_fnkrs, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_to_happy, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_number, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

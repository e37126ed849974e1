//! Python bindings. Complexes are facet lists, colourings are lists of
//! colour classes, and reports come back as plain dicts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use nervekit::nerve::CoverAnalysis;
use nervekit::search::{self, Theorem, DEFAULT_SEED};
use nervekit::{sperner, ColouredComplex, Cover, Error, FieldSpec, SimplicialComplex};

fn err(e: Error) -> PyErr {
    match e {
        Error::TheoremViolation(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn field(s: &str) -> PyResult<FieldSpec> {
    s.parse().map_err(err)
}

fn complex(facets: Vec<Vec<usize>>) -> PyResult<SimplicialComplex> {
    SimplicialComplex::from_facets(facets).map_err(err)
}

fn coloured(facets: Vec<Vec<usize>>, colours: Vec<Vec<usize>>) -> PyResult<ColouredComplex> {
    ColouredComplex::new(complex(facets)?, colours).map_err(err)
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Reduced Betti numbers in degrees `-1..=dim`.
#[pyfunction]
#[pyo3(signature = (facets, field = "q"))]
fn reduced_betti(facets: Vec<Vec<usize>>, field: &str) -> PyResult<Vec<usize>> {
    let x = complex(facets)?;
    let b = nervekit::reduced_betti(&x, self::field(field)?);
    Ok((-1..=x.dim()).map(|i| b.get(i)).collect())
}

/// Facets of the nerve of the cover given by the members' facet lists.
#[pyfunction]
fn nerve(members: Vec<Vec<Vec<usize>>>) -> PyResult<Vec<Vec<usize>>> {
    let cover = cover(members, None)?;
    let n = nervekit::nerve::nerve(&cover).map_err(err)?;
    Ok(n.facets().into_iter().map(|s| s.vertices().to_vec()).collect())
}

fn cover(members: Vec<Vec<Vec<usize>>>, host: Option<Vec<Vec<usize>>>) -> PyResult<Cover> {
    let members = members.into_iter().map(complex).collect::<PyResult<Vec<_>>>()?;
    match host {
        None => Ok(Cover::from_members(members)),
        Some(h) => Cover::new(complex(h)?, members).map_err(err),
    }
}

/// Mixed nerve report; `l` defaults to one less than the number of members.
#[pyfunction]
#[pyo3(signature = (members, k = -1, l = None, field = "q", host = None))]
fn mixed<'py>(
    py: Python<'py>,
    members: Vec<Vec<Vec<usize>>>,
    k: isize,
    l: Option<isize>,
    field: &str,
    host: Option<Vec<Vec<usize>>>,
) -> PyResult<Bound<'py, PyAny>> {
    let c = cover(members, host)?;
    let l = l.unwrap_or(c.len() as isize - 1);
    let a = CoverAnalysis::new(&c, self::field(field)?).map_err(err)?;
    to_py(py, &a.mixed_report(k, l).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (facets, colours, field = "q"))]
fn meshulam<'py>(
    py: Python<'py>,
    facets: Vec<Vec<usize>>,
    colours: Vec<Vec<usize>>,
    field: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let k = coloured(facets, colours)?;
    to_py(py, &sperner::check_meshulam(&k, self::field(field)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (facets, colours, k = -1, field = "q"))]
fn remixed<'py>(
    py: Python<'py>,
    facets: Vec<Vec<usize>>,
    colours: Vec<Vec<usize>>,
    k: isize,
    field: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let kc = coloured(facets, colours)?;
    to_py(py, &sperner::check_remixed(&kc, k, self::field(field)?).map_err(err)?)
}

/// `m_facets` describes the pseudomanifold on the colour set.
#[pyfunction]
#[pyo3(signature = (facets, colours, m_facets, field = "f2"))]
fn polytopal<'py>(
    py: Python<'py>,
    facets: Vec<Vec<usize>>,
    colours: Vec<Vec<usize>>,
    m_facets: Vec<Vec<usize>>,
    field: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let k = coloured(facets, colours)?;
    let m = complex(m_facets)?;
    to_py(py, &sperner::polytopal_meshulam(&k, &m, self::field(field)?).map_err(err)?)
}

/// Seeded counterexample search for one theorem; returns the tally.
#[pyfunction]
#[pyo3(signature = (theorem, trials = 100, seed = DEFAULT_SEED))]
fn search_theorem<'py>(py: Python<'py>, theorem: &str, trials: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let t: Theorem = theorem.parse().map_err(err)?;
    to_py(py, &search::run(t, seed, trials).map_err(err)?)
}

#[pymodule(name = "nervekit")]
fn nervekit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(reduced_betti, m)?)?;
    m.add_function(wrap_pyfunction!(nerve, m)?)?;
    m.add_function(wrap_pyfunction!(mixed, m)?)?;
    m.add_function(wrap_pyfunction!(meshulam, m)?)?;
    m.add_function(wrap_pyfunction!(remixed, m)?)?;
    m.add_function(wrap_pyfunction!(polytopal, m)?)?;
    m.add_function(wrap_pyfunction!(search_theorem, m)?)?;
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    Ok(())
}

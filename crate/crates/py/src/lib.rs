//! Python bindings. `run` exposes the whole command line; the rest are
//! direct calls for the common cases.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use icosa::elliptic::{CurveQ5, DEFAULT_CAP};
use icosa::klein::{klein_solve as solve, PrincipalQuintic};
use icosa::ring::{ideal_from_key, IdealKey};

fn py_err(e: icosa::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// j-invariant of E0 as `a + b*sqrt5`.
#[pyfunction]
fn j_invariant() -> String {
    CurveQ5::e0().j_invariant().to_string()
}

/// Number of points of E0 over the residue field of the ideal `key`
/// (`"3:0"`, `"11:4"`, ...), point at infinity included.
#[pyfunction]
fn count_points(key: &str) -> PyResult<u64> {
    let ideal = IdealKey::parse(key).and_then(|k| ideal_from_key(&k)).map_err(py_err)?;
    CurveQ5::e0().reduce(&ideal).and_then(|c| c.count_points(DEFAULT_CAP)).map_err(py_err)
}

/// Real solutions `(embedding, j, m, n, residual)` of the Klein system for
/// the E0 quintic; numbers are decimal strings.
#[pyfunction]
fn klein_solve(embedding: i8) -> PyResult<Vec<(i8, String, String, String, f64)>> {
    let sols = solve(&PrincipalQuintic::e0(), embedding).map_err(py_err)?;
    Ok(sols.into_iter().map(|s| (s.embedding, s.j.to_decimal(30), s.m.to_decimal(30), s.n.to_decimal(30), s.residual)).collect())
}

#[pyfunction]
fn selftest() -> Vec<(String, bool)> {
    icosa::cli::selftest().into_iter().map(|(name, ok)| (name.to_string(), ok)).collect()
}

/// Run the command-line tool with `args` (no program name); returns
/// `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("icosa".to_string()).chain(args);
    let code = icosa::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

#[pymodule]
fn icosa_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(j_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(count_points, m)?)?;
    m.add_function(wrap_pyfunction!(klein_solve, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}

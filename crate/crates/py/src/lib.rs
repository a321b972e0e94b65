//! Python bindings. Points cross the boundary as `(x, y)` tuples and
//! structured reports as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use nothree::extensible::{self, ConstructionConfig};
use nothree::gadgets::{self, ParabolaParams};
use nothree::greedy::{self, Engine, GreedyVariant};
use nothree::numtheory;
use nothree::GridPoint;

type Point = (i64, i64);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_grid(points: Vec<Point>) -> Vec<GridPoint> {
    points.into_iter().map(GridPoint::from).collect()
}

fn to_tuples(points: &[GridPoint]) -> Vec<Point> {
    points.iter().map(|q| (q.x, q.y)).collect()
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_engine(engine: &str) -> PyResult<Engine> {
    match engine {
        "fast" => Ok(Engine::Fast),
        "oracle" => Ok(Engine::Oracle),
        _ => Err(PyValueError::new_err(format!("unknown engine {engine:?}"))),
    }
}

/// First collinear triple found, or `None` if the points are in general position.
#[pyfunction]
#[pyo3(signature = (points, brute = false))]
fn find_collinear(points: Vec<Point>, brute: bool) -> Option<(Point, Point, Point)> {
    let pts = to_grid(points);
    let w = if brute { nothree::verify_brute(&pts) } else { nothree::verify_fast(&pts) };
    w.map(|w| ((w.a.x, w.a.y), (w.b.x, w.b.y), (w.c.x, w.c.y)))
}

#[pyfunction]
fn in_general_position(points: Vec<Point>) -> bool {
    nothree::verify_fast(&to_grid(points)).is_none()
}

/// Canonical `(a, b, c)` of the line `a*x + b*y = c` through two points.
#[pyfunction]
fn line_through(p: Point, q: Point) -> PyResult<(i64, i64, i64)> {
    let l = nothree::line_through(p.into(), q.into()).map_err(value_error)?;
    Ok((l.a, l.b, l.c))
}

#[pyfunction]
#[pyo3(signature = (p, a = 0, b = 0))]
fn parabola_points(p: u64, a: u64, b: u64) -> PyResult<Vec<Point>> {
    let params = ParabolaParams::new(p, a, b).map_err(value_error)?;
    Ok(to_tuples(&gadgets::parabola_points(&params)))
}

/// The unique `(a, b)` whose parabola mod `p` passes through both points.
#[pyfunction]
fn fit_parabola(p: u64, p0: Point, p1: Point) -> PyResult<(u64, u64)> {
    let params = gadgets::fit_parabola(p, p0.into(), p1.into()).map_err(value_error)?;
    Ok((params.a(), params.b()))
}

#[pyfunction]
#[pyo3(signature = (n, variant = "lexle", engine = "fast"))]
fn greedy_points(n: i64, variant: &str, engine: &str) -> PyResult<Vec<Point>> {
    if n < 1 {
        return Err(PyValueError::new_err(format!("n must be positive, got {n}")));
    }
    let variant: GreedyVariant = variant.parse().map_err(PyValueError::new_err)?;
    Ok(to_tuples(&parse_engine(engine)?.run(n, variant).points))
}

/// Greedy counts against the published table, as a dict.
#[pyfunction]
#[pyo3(signature = (engine = "fast", sizes = None))]
fn table1_check<'py>(py: Python<'py>, engine: &str, sizes: Option<Vec<i64>>) -> PyResult<Bound<'py, PyAny>> {
    let engine = parse_engine(engine)?;
    let sizes = sizes.unwrap_or_else(|| greedy::TABLE1_SIZES.to_vec());
    if sizes.is_empty() || sizes.len() > greedy::TABLE1_SIZES.len() || sizes[..] != greedy::TABLE1_SIZES[..sizes.len()] {
        return Err(PyValueError::new_err("sizes must be a nonempty prefix of the table sizes"));
    }
    let report = py.detach(|| greedy::table1_check_sizes(engine, &sizes));
    to_py(py, &report)
}

/// Runs the extensible construction. Returns `(points, square_records)`.
#[pyfunction]
#[pyo3(signature = (eps = 0.5, c = 24.0, n_max = 20, n_min = None))]
fn build_extensible<'py>(
    py: Python<'py>,
    eps: f64,
    c: f64,
    n_max: u32,
    n_min: Option<u32>,
) -> PyResult<(Vec<Point>, Bound<'py, PyAny>)> {
    let mut cfg = ConstructionConfig::new(eps, c, n_max).map_err(value_error)?;
    if let Some(n_min) = n_min {
        cfg = cfg.with_n_min(n_min).map_err(value_error)?;
    }
    let state = py.detach(|| extensible::build(cfg)).map_err(value_error)?;
    let records: Vec<_> = state.records().collect();
    Ok((to_tuples(&state.accepted), to_py(py, &records)?))
}

/// `(N, count, ratio)` rows of `|S ∩ [1, N]^2| * ln(N)^(1+eps) / N`.
#[pyfunction]
#[pyo3(signature = (points, grids, eps = 0.5))]
fn density(points: Vec<Point>, grids: Vec<i64>, eps: f64) -> Vec<(i64, u64, f64)> {
    extensible::density_report(&to_grid(points), &grids, eps)
        .into_iter()
        .map(|r| (r.n, r.count, r.ratio))
        .collect()
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    numtheory::is_prime(n)
}

/// Largest prime strictly below `x`.
#[pyfunction]
fn prev_prime(x: u64) -> Option<u64> {
    numtheory::prev_prime(x)
}

#[pyfunction]
fn check_claim_sum<'py>(py: Python<'py>, n: u32, eps: f64) -> PyResult<Bound<'py, PyAny>> {
    let report = numtheory::check_claim_sum(n, eps).map_err(value_error)?;
    to_py(py, &report)
}

#[pyfunction]
fn bhp_gap_holds(x: u64) -> PyResult<bool> {
    numtheory::bhp_gap_holds(x).map_err(value_error)
}

#[pymodule]
#[pyo3(name = "nothree")]
fn nothree_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(find_collinear, m)?)?;
    m.add_function(wrap_pyfunction!(in_general_position, m)?)?;
    m.add_function(wrap_pyfunction!(line_through, m)?)?;
    m.add_function(wrap_pyfunction!(parabola_points, m)?)?;
    m.add_function(wrap_pyfunction!(fit_parabola, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_points, m)?)?;
    m.add_function(wrap_pyfunction!(table1_check, m)?)?;
    m.add_function(wrap_pyfunction!(build_extensible, m)?)?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(prev_prime, m)?)?;
    m.add_function(wrap_pyfunction!(check_claim_sum, m)?)?;
    m.add_function(wrap_pyfunction!(bhp_gap_holds, m)?)?;
    Ok(())
}

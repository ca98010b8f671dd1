//! Python bindings for `cuoco-core`.
//!
//! Vertices and sides are named by strings (`"A"`, `"a"`, ...); structured
//! results come back as plain dicts, tuples and floats.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cuoco_core::checks::{check_triangle, random_triangles, summarize};
use cuoco_core::circles::{circumcircle as core_circumcircle, incircle as core_incircle, measured_tangent_lengths};
use cuoco_core::cosine_law;
use cuoco_core::cuoco::{self as cfg, Pair};
use cuoco_core::figure::{self, FigureData, FigureKind, FigureSpec};
use cuoco_core::geometry::{self, classify, metrics, RIGHT_ANGLE_EPS};
use cuoco_core::three_sum::{self, InterpretOptions, Interpretation, ThreeSum};
use cuoco_core::{Point, Vertex};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vertex(name: &str) -> PyResult<Vertex> {
    match name {
        "A" | "a" => Ok(Vertex::A),
        "B" | "b" => Ok(Vertex::B),
        "C" | "c" => Ok(Vertex::C),
        _ => Err(PyValueError::new_err(format!("unknown vertex or side `{name}`"))),
    }
}

fn xy(p: Point) -> (f64, f64) {
    (p.x, p.y)
}

/// A non-degenerate triangle, stored counterclockwise.
#[pyclass(name = "Triangle", module = "cuoco", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
pub struct PyTriangle(geometry::Triangle);

#[pymethods]
impl PyTriangle {
    /// Triangle with vertices `a`, `b`, `c` given as `(x, y)` pairs.
    #[new]
    fn new(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> PyResult<Self> {
        geometry::Triangle::new(Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(c.0, c.1))
            .map(Self)
            .map_err(value_err)
    }

    /// Canonical placement of a triangle with sides `a`, `b`, `c`.
    #[staticmethod]
    fn from_sides(a: f64, b: f64, c: f64) -> PyResult<Self> {
        geometry::triangle_from_sides(a, b, c).map(Self).map_err(value_err)
    }

    #[getter]
    fn vertices(&self) -> [(f64, f64); 3] {
        self.0.vertices().map(xy)
    }

    /// Side lengths `(a, b, c)`.
    #[getter]
    fn sides(&self) -> [f64; 3] {
        Vertex::ALL.map(|v| self.0.side(v))
    }

    /// Angles `(alpha, beta, gamma)` in radians.
    #[getter]
    fn angles(&self) -> [f64; 3] {
        Vertex::ALL.map(|v| self.0.angle(v))
    }

    #[getter]
    fn area(&self) -> f64 {
        0.5 * self.0.twice_signed_area()
    }

    /// `(kind, vertex)`: kind is "acute", "right" or "obtuse"; vertex is None when acute.
    #[pyo3(signature = (eps = RIGHT_ANGLE_EPS))]
    fn classify(&self, eps: f64) -> (&'static str, Option<&'static str>) {
        let c = classify(&metrics(&self.0), eps);
        (c.name(), c.vertex().map(Vertex::name))
    }

    fn metrics<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let m = metrics(&self.0);
        let d = PyDict::new(py);
        for (k, v) in [
            ("a", m.a),
            ("b", m.b),
            ("c", m.c),
            ("alpha", m.alpha),
            ("beta", m.beta),
            ("gamma", m.gamma),
            ("s", m.s),
            ("area", m.area),
        ] {
            d.set_item(k, v)?;
        }
        Ok(d)
    }

    fn __repr__(&self) -> String {
        let [a, b, c] = self.0.vertices();
        format!("Triangle(({}, {}), ({}, {}), ({}, {}))", a.x, a.y, b.x, b.y, c.x, c.y)
    }
}

/// Third side opposite the included angle `gamma` (radians).
#[pyfunction]
fn third_side(a: f64, b: f64, gamma: f64) -> PyResult<f64> {
    cosine_law::third_side(a, b, gamma).map_err(value_err)
}

#[pyfunction]
fn cos_from_sides(a: f64, b: f64, c: f64) -> PyResult<f64> {
    cosine_law::cos_from_sides(a, b, c).map_err(value_err)
}

/// Signed projection, defect and residual of the Euclidean form at `vertex`.
#[pyfunction]
fn euclid_defect<'py>(py: Python<'py>, t: &PyTriangle, at: &str) -> PyResult<Bound<'py, PyDict>> {
    let e = cosine_law::euclid_defect(&t.0, vertex(at)?);
    let d = PyDict::new(py);
    d.set_item("vertex", e.vertex.name())?;
    d.set_item("projection", e.projection)?;
    d.set_item("defect", e.defect)?;
    d.set_item("residual", e.residual)?;
    d.set_item("opposite_squared", e.opposite_squared)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (t, tol = 1e-9))]
fn verify_cosine_identity(t: &PyTriangle, tol: f64) -> ([f64; 3], bool) {
    let r = cosine_law::verify_cosine_identity(&metrics(&t.0), tol);
    (r.residuals, r.pass)
}

/// The six-panel decomposition of the exterior squares.
#[pyclass(name = "Decomposition", module = "cuoco", frozen)]
pub struct PyDecomposition(cfg::CuocoDecomposition);

#[pymethods]
impl PyDecomposition {
    #[new]
    fn new(t: &PyTriangle) -> Self {
        Self(cfg::build(&t.0))
    }

    /// `(R, S, T)` from the dot-product route.
    #[getter]
    fn pair_areas(&self) -> [f64; 3] {
        self.0.pair_areas.to_array()
    }

    /// `(R, S, T)` from side lengths and cosines.
    #[getter]
    fn pair_areas_trig(&self) -> [f64; 3] {
        Pair::ALL.map(|p| cfg::panel_area_trig(p, &self.0.metrics))
    }

    /// Panel label to signed area, in label order.
    fn panels<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for p in &self.0.panels {
            d.set_item(p.label.name(), p.signed_area)?;
        }
        Ok(d)
    }

    /// Corners of one panel.
    fn panel_quad(&self, label: &str) -> PyResult<[(f64, f64); 4]> {
        let p = self
            .0
            .panels
            .iter()
            .find(|p| p.label.name() == label)
            .ok_or_else(|| PyValueError::new_err(format!("unknown panel `{label}`")))?;
        Ok(p.quad.map(xy))
    }

    /// Corners of the square on `side`.
    fn square(&self, side: &str) -> PyResult<[(f64, f64); 4]> {
        Ok(self.0.square(vertex(side)?).vertices.map(xy))
    }

    /// Equality chain for the square on `side`, as `(expression, value)` pairs.
    #[pyo3(signature = (side = "a"))]
    fn derivation(&self, side: &str) -> PyResult<Vec<(String, f64)>> {
        let d = cfg::derive_for_side(&self.0, vertex(side)?);
        Ok(d.chain.into_iter().map(|s| (s.expression, s.value)).collect())
    }

    #[pyo3(signature = (tol = 1e-9))]
    fn verify_pairs(&self, tol: f64) -> ([f64; 3], bool) {
        let r = cfg::verify_pairs(&self.0, tol);
        (r.differences, r.pass)
    }
}

#[pyfunction]
fn decompose(t: &PyTriangle) -> PyDecomposition {
    PyDecomposition::new(t)
}

/// `(R, S, T)` in exact integer arithmetic for integer vertices.
#[pyfunction]
fn exact_pair_areas(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> [i64; 3] {
    cfg::exact_pair_areas(a, b, c).to_array()
}

/// Solution `(x, y, z)` of `x+y=L, x+z=M, y+z=N`.
#[pyfunction]
#[allow(non_snake_case)]
fn solve(L: f64, M: f64, N: f64) -> (f64, f64, f64) {
    let s = three_sum::solve(&ThreeSum::new(L, M, N));
    (s.x, s.y, s.z)
}

#[pyfunction]
#[allow(non_snake_case)]
fn all_positive(L: f64, M: f64, N: f64) -> bool {
    three_sum::all_positive(&ThreeSum::new(L, M, N))
}

/// Reads the system off `t` as squares, sides or angles and cross-checks the solution.
#[pyfunction]
#[pyo3(signature = (t, kind, tol = 1e-9))]
fn interpret<'py>(py: Python<'py>, t: &PyTriangle, kind: &str, tol: f64) -> PyResult<Bound<'py, PyDict>> {
    let kind = match kind {
        "squares" => Interpretation::Squares,
        "sides" => Interpretation::Sides,
        "angles" => Interpretation::Angles,
        _ => return Err(PyValueError::new_err(format!("unknown interpretation `{kind}`"))),
    };
    let r = three_sum::interpret(
        &t.0,
        kind,
        InterpretOptions {
            tol,
            ..Default::default()
        },
    );
    let d = PyDict::new(py);
    d.set_item("kind", r.kind.name())?;
    d.set_item("system", (r.system.l, r.system.m, r.system.n))?;
    d.set_item("solution", r.solution.to_array())?;
    d.set_item(
        "counterparts",
        r.matches.iter().map(|m| m.counterpart.clone()).collect::<Vec<_>>(),
    )?;
    d.set_item("max_deviation", r.max_deviation)?;
    d.set_item("all_positive", r.all_positive)?;
    d.set_item("classification", r.classification.name())?;
    d.set_item("pass", r.pass)?;
    Ok(d)
}

#[pyfunction]
fn incircle<'py>(py: Python<'py>, t: &PyTriangle) -> PyResult<Bound<'py, PyDict>> {
    let c = core_incircle(&t.0);
    let d = PyDict::new(py);
    d.set_item("center", xy(c.center))?;
    d.set_item("radius", c.radius)?;
    d.set_item("tangent_points", c.tangent_points.map(xy))?;
    d.set_item("tangent_lengths", c.tangent_lengths)?;
    d.set_item("measured_tangent_lengths", measured_tangent_lengths(&c))?;
    Ok(d)
}

#[pyfunction]
fn circumcircle<'py>(py: Python<'py>, t: &PyTriangle) -> PyResult<Bound<'py, PyDict>> {
    let c = core_circumcircle(&t.0);
    let d = PyDict::new(py);
    d.set_item("center", xy(c.center))?;
    d.set_item("radius", c.radius)?;
    d.set_item("splits", c.splits.map(|s| (s.toward_next, s.toward_prev)))?;
    Ok(d)
}

/// SVG drawing of `t` for one figure kind.
#[pyfunction]
#[pyo3(signature = (t, kind, palette = 0, labels = true, precision = 6, omit_degenerate = false))]
fn render_figure(
    t: &PyTriangle,
    kind: &str,
    palette: usize,
    labels: bool,
    precision: u8,
    omit_degenerate: bool,
) -> PyResult<String> {
    let kind: FigureKind = kind.parse().map_err(value_err)?;
    let spec = FigureSpec {
        kind,
        palette,
        labels,
        precision,
        omit_degenerate,
    };
    let d = cfg::build(&t.0);
    let inc = core_incircle(&t.0);
    let circ = core_circumcircle(&t.0);
    let data = match kind {
        FigureKind::EuclidDefect => FigureData::Triangle(&t.0),
        FigureKind::Incircle => FigureData::Incircle(&inc),
        FigureKind::Circumcircle => FigureData::Circumcircle(&circ),
        FigureKind::Cuoco | FigureKind::CuocoPairs | FigureKind::CuocoObtuse => FigureData::Decomposition(&d),
    };
    figure::render(data, &spec).map_err(value_err)
}

/// Every check on one triangle as `(name, residual, passed)`.
#[pyfunction]
#[pyo3(signature = (t, tol = 1e-9))]
fn check(t: &PyTriangle, tol: f64) -> Vec<(&'static str, f64, bool)> {
    check_triangle(&t.0, tol)
        .into_iter()
        .map(|c| (c.name, c.residual, c.pass))
        .collect()
}

/// Seeded sweep over random triangles; returns per-check maxima and the first failure.
#[pyfunction]
#[pyo3(signature = (count, seed = 42, tol = 1e-9))]
fn fuzz<'py>(py: Python<'py>, count: usize, seed: u64, tol: f64) -> PyResult<Bound<'py, PyDict>> {
    let triangles = random_triangles(seed, count);
    let results: Vec<_> = triangles.iter().map(|t| check_triangle(t, tol)).collect();
    let s = summarize(&triangles, &results);
    let d = PyDict::new(py);
    d.set_item("count", s.count)?;
    d.set_item(
        "max_residual",
        s.checks.iter().map(|c| (c.name, c.max_residual)).collect::<Vec<_>>(),
    )?;
    d.set_item("pass", s.pass())?;
    d.set_item(
        "first_failure",
        s.first_failure.map(|(i, t, names)| (i, PyTriangle(t), names)),
    )?;
    Ok(d)
}

#[pymodule]
pub fn cuoco(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTriangle>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(third_side, m)?)?;
    m.add_function(wrap_pyfunction!(cos_from_sides, m)?)?;
    m.add_function(wrap_pyfunction!(euclid_defect, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cosine_identity, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(exact_pair_areas, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(all_positive, m)?)?;
    m.add_function(wrap_pyfunction!(interpret, m)?)?;
    m.add_function(wrap_pyfunction!(incircle, m)?)?;
    m.add_function(wrap_pyfunction!(circumcircle, m)?)?;
    m.add_function(wrap_pyfunction!(render_figure, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz, m)?)?;
    Ok(())
}

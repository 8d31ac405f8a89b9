//! Python bindings for the cabled concordance calculator.
//!
//! The module mirrors the CLI: knot expressions, symmetric polynomials,
//! integral lattices, the invariant reports (as plain dicts with the same
//! field names as the JSON output), and the deterministic verify suites.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use cabled_core::invariants::{self, InvariantReport, ReportValue};
use cabled_core::knots::KnotExpr;
use cabled_core::lattice::{self, IntLattice};
use cabled_core::sympoly::SymPoly;
use cabled_core::verify;
use cabled_core::CableSign;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sign_from_str(text: &str) -> PyResult<CableSign> {
    match text {
        "plus" | "+" => Ok(CableSign::Plus),
        "minus" | "-" => Ok(CableSign::Minus),
        other => Err(PyValueError::new_err(format!(
            "sign must be 'plus' or 'minus', got '{other}'"
        ))),
    }
}

fn report_dict<'py>(py: Python<'py>, r: &InvariantReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("name", &r.name)?;
    match r.value {
        ReportValue::Exact { value } => {
            d.set_item("status", "exact")?;
            d.set_item("value", value)?;
        }
        ReportValue::UpperBound { value } => {
            d.set_item("status", "upper_bound")?;
            d.set_item("value", value)?;
        }
        ReportValue::Interval { lo, hi } => {
            d.set_item("status", "interval")?;
            d.set_item("lo", lo)?;
            d.set_item("hi", hi)?;
        }
        ReportValue::Unknown => {
            d.set_item("status", "unknown")?;
        }
    }
    d.set_item("provenance", &r.provenance)?;
    Ok(d)
}

/// Symmetric Laurent polynomial in the basis T_i = t^i + t^-i.
#[pyclass(name = "SymPoly", from_py_object)]
#[derive(Clone)]
struct PySymPoly {
    inner: SymPoly,
}

#[pymethods]
impl PySymPoly {
    /// Parse from the T-basis syntax, e.g. "-1 + T1".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PySymPoly { inner: SymPoly::parse_tbasis(text).map_err(value_err)? })
    }

    /// Parse from monomial syntax, e.g. "t - 1 + t^-1".
    #[staticmethod]
    fn parse_monomial(text: &str) -> PyResult<Self> {
        Ok(PySymPoly { inner: SymPoly::parse_monomial(text).map_err(value_err)? })
    }

    #[staticmethod]
    fn one() -> Self {
        PySymPoly { inner: SymPoly::one() }
    }

    fn tbasis(&self) -> String {
        self.inner.to_tbasis_string()
    }

    fn monomial(&self) -> String {
        self.inner.to_monomial_string()
    }

    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    fn t0(&self) -> BigInt {
        self.inner.t0()
    }

    fn eval_at_one(&self) -> BigInt {
        self.inner.eval_at_one()
    }

    fn second_derivative_at_one(&self) -> BigInt {
        self.inner.second_derivative_at_one()
    }

    fn add(&self, other: &PySymPoly) -> Self {
        PySymPoly { inner: self.inner.add(&other.inner) }
    }

    fn mul(&self, other: &PySymPoly) -> Self {
        PySymPoly { inner: self.inner.mul(&other.inner) }
    }

    /// Substitute t -> t^p for p >= 1.
    fn substitute_power(&self, p: u32) -> PyResult<Self> {
        if p < 1 {
            return Err(PyValueError::new_err("substitution power must be at least 1"));
        }
        Ok(PySymPoly { inner: self.inner.substitute_power(p) })
    }

    fn __str__(&self) -> String {
        self.inner.to_tbasis_string()
    }

    fn __repr__(&self) -> String {
        format!("SymPoly('{}')", self.inner.to_tbasis_string())
    }

    fn __eq__(&self, other: &PySymPoly) -> bool {
        self.inner == other.inner
    }
}

/// Knot expression: unknot, torus(p,q), K(n), cable2(q; ...), sum, mirror.
#[pyclass(name = "KnotExpr", from_py_object)]
#[derive(Clone)]
struct PyKnotExpr {
    inner: KnotExpr,
}

#[pymethods]
impl PyKnotExpr {
    /// Parse the canonical grammar, e.g. "cable2(5; K(1))".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyKnotExpr { inner: KnotExpr::parse(text).map_err(value_err)? })
    }

    #[staticmethod]
    fn unknot() -> Self {
        PyKnotExpr { inner: KnotExpr::unknot() }
    }

    #[staticmethod]
    fn torus(p: i64, q: i64) -> PyResult<Self> {
        Ok(PyKnotExpr { inner: KnotExpr::torus(p, q).map_err(value_err)? })
    }

    #[staticmethod]
    fn family_k(n: i64) -> Self {
        PyKnotExpr { inner: KnotExpr::family_k(n) }
    }

    #[staticmethod]
    fn cable2(q: i64, companion: PyKnotExpr) -> PyResult<Self> {
        Ok(PyKnotExpr { inner: KnotExpr::cable2(q, companion.inner).map_err(value_err)? })
    }

    #[staticmethod]
    fn sum(parts: Vec<PyKnotExpr>) -> PyResult<Self> {
        let parts = parts.into_iter().map(|p| p.inner).collect();
        Ok(PyKnotExpr { inner: KnotExpr::sum(parts).map_err(value_err)? })
    }

    #[staticmethod]
    fn mirror(inner: PyKnotExpr) -> Self {
        PyKnotExpr { inner: KnotExpr::mirror(inner.inner) }
    }

    fn alexander(&self) -> PySymPoly {
        PySymPoly { inner: self.inner.alexander() }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("KnotExpr('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyKnotExpr) -> bool {
        self.inner == other.inner
    }
}

/// Integral symmetric bilinear form, stored as a full matrix.
#[pyclass(name = "IntLattice", from_py_object)]
#[derive(Clone)]
struct PyIntLattice {
    inner: IntLattice,
}

#[pymethods]
impl PyIntLattice {
    /// Parse either the text format (rank first, then entries) or an
    /// inline literal like "[[-2,1],[1,-2]]".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyIntLattice { inner: IntLattice::parse(text).map_err(value_err)? })
    }

    #[staticmethod]
    fn diag(entries: Vec<i64>) -> Self {
        PyIntLattice { inner: IntLattice::diag(&entries) }
    }

    #[staticmethod]
    fn minus_e8() -> Self {
        PyIntLattice { inner: IntLattice::minus_e8() }
    }

    fn direct_sum(&self, other: &PyIntLattice) -> Self {
        PyIntLattice { inner: self.inner.direct_sum(&other.inner) }
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn determinant(&self) -> BigInt {
        self.inner.determinant()
    }

    fn definiteness(&self) -> String {
        self.inner.definiteness().to_string()
    }

    /// Numbers of positive and negative squares and their difference.
    fn signature(&self) -> PyResult<(usize, usize, i64)> {
        self.inner.signature().map_err(value_err)
    }

    fn is_even(&self) -> bool {
        self.inner.is_even()
    }

    fn is_characteristic(&self, v: Vec<i64>) -> PyResult<bool> {
        self.inner.is_characteristic(&v).map_err(value_err)
    }

    /// Correction-term lower bound as a dict with keys
    /// numerator, bound, attained, interior.
    #[pyo3(signature = (radius=3, max_rank=12))]
    fn d_lower_bound<'py>(
        &self,
        py: Python<'py>,
        radius: u32,
        max_rank: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let db = self.inner.d_lower_bound(radius, max_rank).map_err(value_err)?;
        let d = PyDict::new(py);
        d.set_item("numerator", db.numerator)?;
        d.set_item("bound", db.bound.to_string())?;
        d.set_item("attained", db.attained)?;
        d.set_item("interior", db.interior)?;
        Ok(d)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntLattice('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyIntLattice) -> bool {
        self.inner == other.inner
    }
}

/// Casson invariant of +1-surgery on the knot.
#[pyfunction]
fn casson_plus_one(knot: &PyKnotExpr) -> PyResult<i64> {
    invariants::casson_plus_one(&knot.inner).map_err(value_err)
}

/// d1 by the lens-space surgery formula at the given slope.
#[pyfunction]
#[pyo3(signature = (knot, slope, assume_lens=false))]
fn d1_lens<'py>(
    py: Python<'py>,
    knot: &PyKnotExpr,
    slope: i64,
    assume_lens: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let desc = invariants::SurgeryDesc::new(knot.inner.clone(), slope).map_err(value_err)?;
    let r = invariants::d1_lens(&desc, assume_lens).map_err(value_err)?;
    report_dict(py, &r)
}

/// Closed-form d1 of the torus knot T(2,q).
#[pyfunction]
fn d1_torus_two_strand(py: Python<'_>, q: i64) -> PyResult<Bound<'_, PyDict>> {
    let r = invariants::d1_torus_two_strand(q).map_err(value_err)?;
    report_dict(py, &r)
}

/// d1 of the two-strand cable with parameter q around the companion.
#[pyfunction]
fn d1_cable_two_strand<'py>(
    py: Python<'py>,
    companion: &PyKnotExpr,
    q: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = invariants::d1_cable_two_strand(&companion.inner, q).map_err(value_err)?;
    report_dict(py, &r)
}

/// tau of the two-strand cable with parameter q around the companion.
#[pyfunction]
fn tau_cable_two_strand<'py>(
    py: Python<'py>,
    companion: &PyKnotExpr,
    q: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = invariants::tau_cable_two_strand(&companion.inner, q).map_err(value_err)?;
    report_dict(py, &r)
}

/// ds of the two-strand cable at q = 4k +- 1 around the companion.
#[pyfunction]
fn ds_cable<'py>(
    py: Python<'py>,
    companion: &PyKnotExpr,
    k: i64,
    sign: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let r = invariants::ds_cable(&companion.inner, k, sign_from_str(sign)?).map_err(value_err)?;
    report_dict(py, &r)
}

/// Build a knot with |d1| = a and 2|tau| = b; returns a dict with the
/// expression and both verified reports.
#[pyfunction]
fn bound_gap_witness(py: Python<'_>, a: i64, b: i64, n: i64) -> PyResult<Bound<'_, PyDict>> {
    let w = invariants::bound_gap_witness(a, b, n).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("expr", w.expr.to_string())?;
    d.set_item("d1", report_dict(py, &w.d1)?)?;
    d.set_item("tau", report_dict(py, &w.tau)?)?;
    Ok(d)
}

/// Fox-Milnor factorization test; returns "is_fm_form", "not_fm_form" or
/// "undecided".
#[pyfunction]
fn fox_milnor_check(poly: &PySymPoly) -> PyResult<&'static str> {
    let status = invariants::fox_milnor_check(&poly.inner).map_err(value_err)?;
    Ok(match status {
        invariants::FmStatus::IsFmForm => "is_fm_form",
        invariants::FmStatus::NotFmForm => "not_fm_form",
        invariants::FmStatus::Undecided => "undecided",
    })
}

/// Every invariant the calculator knows for the expression, as a dict with
/// keys expr, alexander, reports.
#[pyfunction]
#[pyo3(signature = (knot, assume_lens=None))]
fn report_all<'py>(
    py: Python<'py>,
    knot: &PyKnotExpr,
    assume_lens: Option<i64>,
) -> PyResult<Bound<'py, PyDict>> {
    let full = invariants::report_all(&knot.inner, assume_lens).map_err(value_err)?;
    let reports = PyList::empty(py);
    for r in &full.reports {
        reports.append(report_dict(py, r)?)?;
    }
    let d = PyDict::new(py);
    d.set_item("expr", full.expr)?;
    d.set_item("alexander", full.alexander)?;
    d.set_item("reports", reports)?;
    Ok(d)
}

/// Two-sided d1 certificate for the cable parameter q = 4k +- 1.
#[pyfunction]
#[pyo3(signature = (k, sign="plus"))]
fn cable_d1_certificate<'py>(py: Python<'py>, k: i64, sign: &str) -> PyResult<Bound<'py, PyDict>> {
    let cert = lattice::cable_d1_certificate(k, sign_from_str(sign)?).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("q", cert.q)?;
    d.set_item("upper", cert.upper)?;
    d.set_item("lower", cert.lower)?;
    Ok(d)
}

/// Run a deterministic check suite; returns a dict with keys suite, seed,
/// passed, total, failures.
#[pyfunction]
#[pyo3(signature = (name, seed=None))]
fn verify_suite<'py>(py: Python<'py>, name: &str, seed: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let seed = seed.unwrap_or(verify::DEFAULT_SEED);
    let Some(report) = verify::run_suite(name, seed) else {
        return Err(PyValueError::new_err(format!(
            "unknown suite '{}'; expected one of: {}",
            name,
            verify::suite_names().join(", ")
        )));
    };
    let failures = PyList::empty(py);
    for c in &report.checks {
        if let Err(message) = &c.outcome {
            let f = PyDict::new(py);
            f.set_item("id", &c.id)?;
            f.set_item("provenance", &c.provenance)?;
            f.set_item("message", message)?;
            failures.append(f)?;
        }
    }
    let d = PyDict::new(py);
    d.set_item("suite", report.suite.clone())?;
    d.set_item("seed", report.seed)?;
    d.set_item("passed", report.passed())?;
    d.set_item("total", report.checks.len())?;
    d.set_item("failures", failures)?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "cabled")]
fn cabled_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymPoly>()?;
    m.add_class::<PyKnotExpr>()?;
    m.add_class::<PyIntLattice>()?;
    m.add_function(wrap_pyfunction!(casson_plus_one, m)?)?;
    m.add_function(wrap_pyfunction!(d1_lens, m)?)?;
    m.add_function(wrap_pyfunction!(d1_torus_two_strand, m)?)?;
    m.add_function(wrap_pyfunction!(d1_cable_two_strand, m)?)?;
    m.add_function(wrap_pyfunction!(tau_cable_two_strand, m)?)?;
    m.add_function(wrap_pyfunction!(ds_cable, m)?)?;
    m.add_function(wrap_pyfunction!(bound_gap_witness, m)?)?;
    m.add_function(wrap_pyfunction!(fox_milnor_check, m)?)?;
    m.add_function(wrap_pyfunction!(report_all, m)?)?;
    m.add_function(wrap_pyfunction!(cable_d1_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add("DEFAULT_SEED", verify::DEFAULT_SEED)?;
    Ok(())
}

//! Python bindings for the `bizeta` crate.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

use bizeta::exactalg::{rat, rational_to_json, series_expand, RationalFunction, SubsetI, Var};
use bizeta::lattices::{a_matrix, b_matrix, LatticeFamily, LinearFormMatrix};
use bizeta::oracle::{self, PrimeLevel, DEFAULT_BUDGET};
use bizeta::weyl::{self, SignedPermutation};
use bizeta::zeta::{self, GlobalStyle, ZetaKind};
use bizeta::{Error, Verdict};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidArgument(_) | Error::Parse(_) | Error::BudgetExceeded { .. } => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.getattr("loads")?.call1((v.to_string(),))
}

fn verdict_to_py<'py>(py: Python<'py>, v: &Verdict) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &v.to_json())
}

/// One of F(n, delta), G(n), H(n).
#[pyclass(name = "LatticeFamily", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLatticeFamily {
    inner: LatticeFamily,
}

fn render(m: &LinearFormMatrix, format: &str) -> PyResult<String> {
    match format {
        "plain" => Ok(m.to_plain()),
        "latex" => Ok(m.to_latex()),
        "json" => Ok(m.to_json().to_string()),
        _ => Err(PyValueError::new_err(format!("unknown format {format:?}"))),
    }
}

#[pymethods]
impl PyLatticeFamily {
    #[new]
    #[pyo3(signature = (family, n, delta = 0))]
    fn new(family: &str, n: usize, delta: usize) -> PyResult<Self> {
        let fam = family.parse().map_err(py_err)?;
        Ok(PyLatticeFamily { inner: LatticeFamily::new(fam, n, delta).map_err(py_err)? })
    }

    #[getter]
    fn family(&self) -> String {
        self.inner.family.to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn delta(&self) -> usize {
        self.inner.delta
    }

    /// `(h, a, b)`
    #[getter]
    fn ranks(&self) -> (usize, usize, usize) {
        (self.inner.h_rank(), self.inner.a(), self.inner.b())
    }

    #[pyo3(signature = (format = "plain"))]
    fn a_matrix(&self, format: &str) -> PyResult<String> {
        render(&a_matrix(&self.inner), format)
    }

    #[pyo3(signature = (format = "plain"))]
    fn b_matrix(&self, format: &str) -> PyResult<String> {
        render(&b_matrix(&self.inner), format)
    }

    fn __repr__(&self) -> String {
        format!("LatticeFamily({})", self.inner)
    }
}

/// Exact rational function in q, T1, T2, X, Z, t.
#[pyclass(name = "RationalFunction", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRational {
    inner: RationalFunction,
}

fn parse_var(name: &str) -> PyResult<Var> {
    name.parse().map_err(PyValueError::new_err)
}

#[pymethods]
impl PyRational {
    #[getter]
    fn numerator(&self) -> String {
        self.inner.num().to_string()
    }

    #[getter]
    fn denominator(&self) -> String {
        self.inner.den().to_string()
    }

    fn latex(&self) -> String {
        bizeta::exactalg::rational_to_latex(&self.inner)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &rational_to_json(&self.inner))
    }

    /// Substitute integers for the named variables, e.g. `f.evaluate({"q": 3})`.
    fn evaluate(&self, values: std::collections::HashMap<String, i64>) -> PyResult<Self> {
        let point = values.iter().map(|(k, &v)| Ok((parse_var(k)?, rat(v)))).collect::<PyResult<Vec<_>>>()?;
        Ok(PyRational { inner: self.inner.eval_partial(&point).map_err(py_err)? })
    }

    /// Coefficients of `var^0 ..= var^order` as strings.
    #[pyo3(signature = (order, var = "T2"))]
    fn series(&self, order: usize, var: &str) -> PyResult<Vec<String>> {
        let s = series_expand(&self.inner, parse_var(var)?, order).map_err(py_err)?;
        Ok(s.coefficients.iter().map(|c| c.to_string()).collect())
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyRational { inner: &self.inner * &other.inner }
    }

    fn __add__(&self, other: &Self) -> Self {
        PyRational { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyRational { inner: &self.inner - &other.inner }
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyRational { inner: self.inner.checked_div(&other.inner).map_err(py_err)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RationalFunction({})", self.inner)
    }
}

fn kind(name: &str) -> PyResult<ZetaKind> {
    name.parse().map_err(py_err)
}

/// Closed-form local zeta function: kind is "cc", "irr", "k" or "twist".
#[pyfunction]
#[pyo3(signature = (family, kind_name = "cc"))]
fn local_zeta(family: &PyLatticeFamily, kind_name: &str) -> PyResult<PyRational> {
    let fam = &family.inner;
    let z = match kind(kind_name)? {
        ZetaKind::K => zeta::specialize_class_number(&zeta::zeta_cc_closed(fam)),
        ZetaKind::Twist => zeta::specialize_twist(&zeta::zeta_irr_closed(fam)),
        k => zeta::zeta_closed(fam, k),
    }
    .map_err(py_err)?;
    Ok(PyRational { inner: z.value })
}

#[pyfunction]
#[pyo3(signature = (family, number_field = false))]
fn global_class_zeta(family: &PyLatticeFamily, number_field: bool) -> String {
    let style = if number_field { GlobalStyle::NumberField } else { GlobalStyle::Rational };
    zeta::emit_global(&family.inner, style)
}

#[pyfunction]
fn f_poly(family: &PyLatticeFamily, subset: Vec<usize>) -> PyResult<PyRational> {
    let s = SubsetI::new(family.inner.n, subset).map_err(py_err)?;
    Ok(PyRational { inner: zeta::f_poly(&family.inner, &s).map_err(py_err)? })
}

#[pyfunction]
#[pyo3(signature = (family, kind_name = "cc"))]
fn verify_funceq(family: &PyLatticeFamily, kind_name: &str) -> PyResult<bool> {
    Ok(zeta::verify_funceq(&family.inner, kind(kind_name)?).map_err(py_err)?.ok)
}

#[pyfunction]
#[pyo3(signature = (n, delta = 0))]
fn verify_stat_f<'py>(py: Python<'py>, n: usize, delta: usize) -> PyResult<Bound<'py, PyAny>> {
    verdict_to_py(py, &weyl::verify_stat_f(n, delta).map_err(py_err)?)
}

#[pyfunction]
fn verify_stat_gh<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    verdict_to_py(py, &weyl::verify_stat_gh(n).map_err(py_err)?)
}

#[pyfunction]
fn verify_reiner<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    verdict_to_py(py, &weyl::verify_reiner(n).map_err(py_err)?)
}

/// Statistics of a signed permutation given by its window, e.g. `[2, -3, 1]`.
#[pyfunction]
fn signed_permutation_stats<'py>(py: Python<'py>, window: Vec<i32>) -> PyResult<Bound<'py, PyAny>> {
    let w = SignedPermutation::new(window).map_err(py_err)?;
    json_to_py(py, &weyl::stats(&w).to_json())
}

fn level(p: u64, n: u32) -> PyResult<PrimeLevel> {
    PrimeLevel::new(p, n).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (family, p, level_n, budget = DEFAULT_BUDGET))]
fn census<'py>(py: Python<'py>, family: &PyLatticeFamily, p: u64, level_n: u32, budget: u128) -> PyResult<Bound<'py, PyAny>> {
    let c = oracle::census_b(&family.inner, &level(p, level_n)?, budget).map_err(py_err)?;
    json_to_py(py, &c.to_json())
}

#[pyfunction]
#[pyo3(signature = (family, p, level_n, budget = DEFAULT_BUDGET))]
fn verify_census<'py>(py: Python<'py>, family: &PyLatticeFamily, p: u64, level_n: u32, budget: u128) -> PyResult<Bound<'py, PyAny>> {
    let (v, _) = oracle::verify_nir(&family.inner, &level(p, level_n)?, budget).map_err(py_err)?;
    verdict_to_py(py, &v)
}

/// `[(class size, number of classes), ...]` from the commutator matrix.
#[pyfunction]
#[pyo3(signature = (family, p, level_n, budget = DEFAULT_BUDGET))]
fn conjugacy_classes(family: &PyLatticeFamily, p: u64, level_n: u32, budget: u128) -> PyResult<Vec<(u128, u128)>> {
    Ok(oracle::cc_counts_via_a(&family.inner, &level(p, level_n)?, budget).map_err(py_err)?.classes)
}

/// Same as `conjugacy_classes`, by orbit search in the finite group.
#[pyfunction]
#[pyo3(signature = (family, p, level_n, budget = DEFAULT_BUDGET))]
fn group_classes(family: &PyLatticeFamily, p: u64, level_n: u32, budget: u128) -> PyResult<Vec<(u128, u128)>> {
    Ok(oracle::direct_group_oracle(&family.inner, &level(p, level_n)?, budget).map_err(py_err)?.classes)
}

#[pymodule]
fn pybizeta(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyLatticeFamily>()?;
    m.add_class::<PyRational>()?;
    m.add_function(wrap_pyfunction!(local_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(global_class_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(f_poly, m)?)?;
    m.add_function(wrap_pyfunction!(verify_funceq, m)?)?;
    m.add_function(wrap_pyfunction!(verify_stat_f, m)?)?;
    m.add_function(wrap_pyfunction!(verify_stat_gh, m)?)?;
    m.add_function(wrap_pyfunction!(verify_reiner, m)?)?;
    m.add_function(wrap_pyfunction!(signed_permutation_stats, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(verify_census, m)?)?;
    m.add_function(wrap_pyfunction!(conjugacy_classes, m)?)?;
    m.add_function(wrap_pyfunction!(group_classes, m)?)?;
    Ok(())
}

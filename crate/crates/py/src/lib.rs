//! Python bindings. Every exact number crosses the boundary as a
//! `fractions.Fraction`; inputs accept `int` or `Fraction`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use moduli_euler::genfun::{chibar_table, SeriesName, DEFAULT_ORDER};
use moduli_euler::open::{chi_open, Method};
use moduli_euler::oracle::{
    burnside_quotient, enumerate_stable_rooted_trees, Factor, GroupChoice, MarkedPermutation,
    PermutationGroupAction, StableTree,
};
use moduli_euler::quotient::{QuotientKind, QuotientSpec};
use moduli_euler::verify::{self, Suite, VerifyOptions};
use moduli_euler::{PowerSeries, Rational};

create_exception!(moduli_euler_py, ModuliError, PyValueError);

fn err(e: moduli_euler::Error) -> PyErr {
    ModuliError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Reads an `int` or `Fraction` through its decimal string.
fn rational(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let s = x.str()?.to_string();
    s.parse().map_err(err)
}

/// A truncated power series with exact rational coefficients.
#[pyclass(name = "Series", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySeries(PowerSeries);

#[pymethods]
impl PySeries {
    #[new]
    fn new(coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let cs = coeffs.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        Ok(PySeries(PowerSeries::from_coeffs(cs)))
    }

    /// One of D, E, K1, K2, K1_vertex, K1_loop, K2_type1 .. K2_type7.
    #[staticmethod]
    #[pyo3(signature = (name, order = DEFAULT_ORDER))]
    fn named(name: &str, order: usize) -> PyResult<Self> {
        let name: SeriesName = name.parse().map_err(err)?;
        Ok(PySeries(name.compute(order).map_err(err)?))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.0.coeffs())
    }

    /// `n! [t^n]` for each retained n.
    fn egf_values<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, &self.0.egf_values())
    }

    fn exp(&self) -> PyResult<Self> {
        self.0.exp().map(PySeries).map_err(err)
    }

    fn log1p(&self) -> PyResult<Self> {
        self.0.log1p().map(PySeries).map_err(err)
    }

    fn reciprocal(&self) -> PyResult<Self> {
        self.0.reciprocal().map(PySeries).map_err(err)
    }

    fn derivative(&self) -> PyResult<Self> {
        self.0.derivative().map(PySeries).map_err(err)
    }

    /// `self(inner)`; `inner` must have zero constant term.
    fn compose(&self, inner: &PySeries) -> PyResult<Self> {
        PowerSeries::compose(&self.0, &inner.0).map(PySeries).map_err(err)
    }

    fn __add__(&self, other: &PySeries) -> Self {
        PySeries(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PySeries) -> Self {
        PySeries(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PySeries) -> Self {
        PySeries(&self.0 * &other.0)
    }

    fn __eq__(&self, other: &PySeries) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.0)
    }
}

/// A permutation of the markings `1..=n`.
#[pyclass(name = "Permutation", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPermutation(MarkedPermutation);

#[pymethods]
impl PyPermutation {
    /// Cycle notation, e.g. `Permutation(6, "(1 2)(3 4)")`.
    #[new]
    fn new(n: u32, cycles: &str) -> PyResult<Self> {
        MarkedPermutation::parse(n, cycles).map(PyPermutation).map_err(err)
    }

    #[staticmethod]
    fn from_images(images: Vec<u32>) -> PyResult<Self> {
        MarkedPermutation::from_images(&images).map(PyPermutation).map_err(err)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    /// 1-based images of `1..=n`.
    fn images(&self) -> Vec<u32> {
        self.0.images()
    }

    fn cycle_type(&self) -> Vec<u32> {
        self.0.cycle_type().to_vec()
    }

    /// `self ∘ other`; `other` acts first.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyPermutation).map_err(err)
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    fn __eq__(&self, other: &PyPermutation) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Permutation({}, \"{}\")", self.0.n(), self.0)
    }
}

/// A finite group acting on `M_{0,n}` by permuting markings.
#[pyclass(name = "GroupAction", frozen)]
struct PyGroupAction(PermutationGroupAction);

#[pymethods]
impl PyGroupAction {
    /// Closure of the given generators acting on `M_{0,n}`.
    #[new]
    fn new(n: u32, generators: Vec<PyRef<'_, PyPermutation>>) -> PyResult<Self> {
        let gens = generators.iter().map(|g| vec![g.0.clone()]).collect();
        PermutationGroupAction::from_generators(vec![Factor::genus0(n)], gens)
            .map(PyGroupAction)
            .map_err(err)
    }

    /// `klein`, `d4`, `sj:<j>` or `custom:<cycles>,...`.
    #[staticmethod]
    fn named(n: u32, group: &str) -> PyResult<Self> {
        let choice: GroupChoice = group.parse().map_err(err)?;
        choice.action(n).map(PyGroupAction).map_err(err)
    }

    /// The action used as oracle for a tabulated genus-0 quotient.
    #[staticmethod]
    #[pyo3(signature = (kind, sizes, j = None))]
    fn for_quotient(kind: &str, sizes: Vec<u32>, j: Option<u32>) -> PyResult<Self> {
        let kind: QuotientKind = kind.parse().map_err(err)?;
        let spec = QuotientSpec::new(kind, sizes, j).map_err(err)?;
        PermutationGroupAction::for_quotient(&spec).map(PyGroupAction).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn is_group(&self) -> bool {
        self.0.is_group()
    }

    /// `(coefficients of P(q), P(1))` from the twisted point count.
    fn burnside<'py>(&self, py: Python<'py>) -> PyResult<(Bound<'py, PyList>, Bound<'py, PyAny>)> {
        let b = burnside_quotient(&self.0).map_err(err)?;
        b.check_counts().map_err(err)?;
        Ok((fractions(py, b.polynomial.coeffs())?, fraction(py, &b.chi)?))
    }
}

/// `chi(M_{g,n})`; `method` is `closed`, `strata` or `recursive`.
#[pyfunction(name = "chi_open")]
#[pyo3(signature = (genus, n, method = "closed"))]
fn chi_open_py<'py>(py: Python<'py>, genus: u8, n: u32, method: &str) -> PyResult<Bound<'py, PyAny>> {
    let method: Method = method.parse().map_err(err)?;
    fraction(py, &chi_open(genus, n, method).map_err(err)?)
}

/// `[(n, chi(M-bar_{g,n}))]` for every stable `n <= max_n`.
#[pyfunction]
#[pyo3(signature = (genus, max_n, order = DEFAULT_ORDER))]
fn chi_compact<'py>(
    py: Python<'py>,
    genus: u8,
    max_n: u32,
    order: usize,
) -> PyResult<Vec<(u32, Bound<'py, PyAny>)>> {
    chibar_table(genus, max_n, order)
        .map_err(err)?
        .iter()
        .map(|(n, v)| Ok((*n, fraction(py, v)?)))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (kind, sizes, j = None))]
fn quotient<'py>(py: Python<'py>, kind: &str, sizes: Vec<u32>, j: Option<u32>) -> PyResult<Bound<'py, PyAny>> {
    let kind: QuotientKind = kind.parse().map_err(err)?;
    let spec = QuotientSpec::new(kind, sizes, j).map_err(err)?;
    fraction(py, &spec.chi().map_err(err)?)
}

/// `(number of stable rooted trees, sum of their contributions)`.
#[pyfunction]
fn trees<'py>(py: Python<'py>, n: u32) -> PyResult<(usize, Bound<'py, PyAny>)> {
    let trees = enumerate_stable_rooted_trees(n).map_err(err)?;
    let sum: Rational = trees.iter().map(StableTree::contribution).sum();
    Ok((trees.len(), fraction(py, &sum)?))
}

/// `[(check, passed, detail)]` for one suite or `all`.
#[pyfunction]
#[pyo3(signature = (suite = "all", order = DEFAULT_ORDER, cases = 500, seed = None))]
fn verify_suite(suite: &str, order: usize, cases: usize, seed: Option<u64>) -> PyResult<Vec<(String, bool, String)>> {
    let suite: Suite = suite.parse().map_err(err)?;
    let defaults = VerifyOptions::default();
    let options = VerifyOptions {
        order,
        cases,
        seed: seed.unwrap_or(defaults.seed),
    };
    Ok(verify::run(suite, &options)
        .checks
        .into_iter()
        .map(|c| (c.name, c.passed, c.detail))
        .collect())
}

#[pymodule]
fn moduli_euler_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ModuliError", m.py().get_type::<ModuliError>())?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGroupAction>()?;
    m.add_function(wrap_pyfunction!(chi_open_py, m)?)?;
    m.add_function(wrap_pyfunction!(chi_compact, m)?)?;
    m.add_function(wrap_pyfunction!(quotient, m)?)?;
    m.add_function(wrap_pyfunction!(trees, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}

//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! on the way out and as `int`, `str` or `Fraction` on the way in.

use ::medial as core;
use core::{ClassIIISpec, ClassLabel, MultiIndex, RandomizedConfig, Rational, SymbolicConfig};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};

create_exception!(medial, ResourceExceeded, PyException);
create_exception!(medial, ParseError, PyValueError);

fn to_py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::ResourceExceeded { .. } => ResourceExceeded::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn rational_from_py(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(PyTypeError::new_err("floats are not exact; pass an int, str or Fraction"));
    }
    let text = obj.str()?.to_string();
    text.parse::<Rational>()
        .map_err(|e| PyValueError::new_err(format!("invalid rational {text:?}: {e}")))
}

fn rational_to_py<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn rationals_to_py<'py>(py: Python<'py>, qs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = qs.iter().map(|q| rational_to_py(py, q)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn rationals_from_py(items: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<Rational>> {
    items.iter().map(rational_from_py).collect()
}

/// A polynomial with rational coefficients in `x1, …, xn`.
#[pyclass(name = "Polynomial", module = "medial", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial {
    inner: core::Polynomial,
}

impl From<core::Polynomial> for PyPolynomial {
    fn from(inner: core::Polynomial) -> Self {
        PyPolynomial { inner }
    }
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(expr: &str, arity: usize) -> PyResult<Self> {
        core::parse(expr, arity)
            .map(Into::into)
            .map_err(|e| ParseError::new_err(e.to_string()))
    }

    /// Build from a mapping of exponent tuples to coefficients.
    #[staticmethod]
    fn from_terms(arity: usize, terms: &Bound<'_, PyDict>) -> PyResult<Self> {
        let mut parsed = Vec::with_capacity(terms.len());
        for (k, v) in terms.iter() {
            let exps: Vec<u32> = k.extract()?;
            parsed.push((MultiIndex::new(exps), rational_from_py(&v)?));
        }
        core::Polynomial::from_terms(arity, parsed)
            .map(Into::into)
            .map_err(to_py_err)
    }

    #[getter]
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    /// Total degree, or `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<u32> {
        self.inner.degree().finite()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (alpha, c) in self.inner.terms() {
            out.set_item(PyTuple::new(py, alpha.exponents())?, rational_to_py(py, c)?)?;
        }
        Ok(out)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        point: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let point = rationals_from_py(point)?;
        let value = self.inner.evaluate(&point).map_err(to_py_err)?;
        rational_to_py(py, &value)
    }

    #[pyo3(signature = (*args))]
    fn __call__<'py>(
        &self,
        py: Python<'py>,
        args: &Bound<'py, PyTuple>,
    ) -> PyResult<Bound<'py, PyAny>> {
        self.evaluate(py, args.iter().collect())
    }

    fn substitute(&self, args: Vec<PyRef<'_, PyPolynomial>>) -> PyResult<Self> {
        let args: Vec<_> = args.iter().map(|a| a.inner.clone()).collect();
        self.inner.substitute(&args).map(Into::into).map_err(to_py_err)
    }

    /// Partial derivative with respect to `x_{i+1}` (0-based `i`).
    fn derivative(&self, i: usize) -> PyResult<Self> {
        self.inner.partial_derivative(i).map(Into::into).map_err(to_py_err)
    }

    /// Homogeneous components keyed by degree.
    fn components<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (k, c) in core::decompose(&self.inner).components() {
            out.set_item(*k, PyPolynomial::from(c.clone()))?;
        }
        Ok(out)
    }

    fn taylor_shift(&self, shift: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let shift = rationals_from_py(shift)?;
        core::taylor_shift(&self.inner, &shift).map(Into::into).map_err(to_py_err)
    }

    /// `P(x + b) - b`.
    fn conjugate(&self, b: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(core::conjugate_translate(&self.inner, &rational_from_py(b)?).into())
    }

    fn permute(&self, sigma: Vec<usize>) -> PyResult<Self> {
        core::permute(&self.inner, &sigma).map(Into::into).map_err(to_py_err)
    }

    /// Merge variables `i < j` (0-based).
    fn identify(&self, i: usize, j: usize) -> PyResult<Self> {
        core::identify(&self.inner, i, j).map(Into::into).map_err(to_py_err)
    }

    fn essential_variables(&self) -> Vec<usize> {
        core::essential_variables(&self.inner)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner.checked_add(&other.inner).map(Into::into).map_err(to_py_err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner.checked_sub(&other.inner).map(Into::into).map_err(to_py_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.inner.checked_mul(&other.inner).map(Into::into).map_err(to_py_err)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, k: u32, modulo: Option<Bound<'_, PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyTypeError::new_err("modular exponentiation is not supported"));
        }
        Ok(self.inner.pow(k).into())
    }

    fn __str__(&self) -> String {
        core::format(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?}, {})", core::format(&self.inner), self.inner.arity())
    }
}

fn label_to_py<'py>(py: Python<'py>, label: &ClassLabel) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("kind", label.kind())?;
    match label {
        ClassLabel::Univariate { index, body } => {
            d.set_item("index", *index)?;
            d.set_item("body", PyPolynomial::from(body.clone()))?;
        }
        ClassLabel::Affine { coefficients } => {
            d.set_item("coefficients", rationals_to_py(py, coefficients)?)?;
        }
        ClassLabel::ShiftedMonomial(spec) => {
            d.set_item("a", rational_to_py(py, spec.a())?)?;
            d.set_item("b", rational_to_py(py, spec.b())?)?;
            d.set_item("alpha", spec.alpha().exponents().to_vec())?;
        }
    }
    Ok(d)
}

fn verdict_to_py<'py>(py: Python<'py>, v: &core::Verdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("bisymmetric", v.is_bisymmetric())?;
    match v {
        core::Verdict::Bisymmetric(label) => {
            d.set_item("class", label_to_py(py, label)?)?;
            d.set_item("witness", py.None())?;
        }
        core::Verdict::NotBisymmetric(w) => {
            let rows = w
                .matrix
                .iter()
                .map(|row| rationals_to_py(py, row))
                .collect::<PyResult<Vec<_>>>()?;
            let wd = PyDict::new(py);
            wd.set_item("matrix", PyList::new(py, rows)?)?;
            wd.set_item("lhs", rational_to_py(py, &w.lhs)?)?;
            wd.set_item("rhs", rational_to_py(py, &w.rhs)?)?;
            d.set_item("class", py.None())?;
            d.set_item("witness", wd)?;
        }
    }
    Ok(d)
}

fn spec_from_py(
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    alpha: Vec<u32>,
) -> PyResult<ClassIIISpec> {
    ClassIIISpec::new(rational_from_py(a)?, rational_from_py(b)?, MultiIndex::new(alpha))
        .map_err(to_py_err)
}

/// Decide bisymmetry via the structural classification.
#[pyfunction]
fn classify<'py>(py: Python<'py>, p: &PyPolynomial) -> PyResult<Bound<'py, PyDict>> {
    let v = core::classify(&p.inner).map_err(to_py_err)?;
    verdict_to_py(py, &v)
}

/// Decide bisymmetry by expanding the defining identity.
#[pyfunction]
#[pyo3(signature = (p, term_ceiling = core::bisymmetry::DEFAULT_TERM_CEILING))]
fn check_symbolic<'py>(
    py: Python<'py>,
    p: &PyPolynomial,
    term_ceiling: u128,
) -> PyResult<Bound<'py, PyDict>> {
    let v = core::check_symbolic(&p.inner, &SymbolicConfig { term_ceiling }).map_err(to_py_err)?;
    verdict_to_py(py, &v)
}

/// Search for a counterexample on random integer matrices.
#[pyfunction]
#[pyo3(signature = (
    p,
    trials = core::bisymmetry::DEFAULT_TRIALS,
    bound = core::bisymmetry::DEFAULT_BOUND,
    seed = core::bisymmetry::DEFAULT_SEED,
))]
fn check_randomized<'py>(
    py: Python<'py>,
    p: &PyPolynomial,
    trials: u32,
    bound: u64,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = RandomizedConfig { trials, bound, seed };
    let v = core::check_randomized(&p.inner, &cfg).map_err(to_py_err)?;
    verdict_to_py(py, &v)
}

/// The symbolic difference of the bisymmetry identity in `n^2` variables.
#[pyfunction]
fn bisymmetry_difference(p: &PyPolynomial) -> PyResult<PyPolynomial> {
    core::bisymmetry_difference(&p.inner).map(Into::into).map_err(to_py_err)
}

/// Both sides of the identity at an `n x n` matrix.
#[pyfunction]
fn evaluate_sides<'py>(
    py: Python<'py>,
    p: &PyPolynomial,
    matrix: Vec<Vec<Bound<'py, PyAny>>>,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let matrix = matrix.into_iter().map(rationals_from_py).collect::<PyResult<Vec<_>>>()?;
    let (lhs, rhs) = core::evaluate_sides(&p.inner, &matrix).map_err(to_py_err)?;
    Ok((rational_to_py(py, &lhs)?, rational_to_py(py, &rhs)?))
}

/// `a * prod (x_i + b)^alpha_i - b`.
#[pyfunction]
fn construct(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, alpha: Vec<u32>) -> PyResult<PyPolynomial> {
    Ok(core::construct_class_iii(&spec_from_py(a, b, alpha)?).into())
}

/// Whether `construct(a, b, alpha)` has integer coefficients.
#[pyfunction]
fn integrality_check(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, alpha: Vec<u32>) -> PyResult<bool> {
    core::integrality_check(&spec_from_py(a, b, alpha)?).map_err(to_py_err)
}

/// The values `a*b^k` for `k < |alpha|` followed by `a*b^|alpha| - b`.
#[pyfunction]
fn integrality_values<'py>(
    py: Python<'py>,
    a: &Bound<'py, PyAny>,
    b: &Bound<'py, PyAny>,
    alpha: Vec<u32>,
) -> PyResult<Bound<'py, PyList>> {
    let rep = core::integrality_report(&spec_from_py(a, b, alpha)?).map_err(to_py_err)?;
    rationals_to_py(py, &rep.values)
}

#[pymodule]
#[pyo3(name = "medial")]
fn medial_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add("ResourceExceeded", m.py().get_type::<ResourceExceeded>())?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(check_symbolic, m)?)?;
    m.add_function(wrap_pyfunction!(check_randomized, m)?)?;
    m.add_function(wrap_pyfunction!(bisymmetry_difference, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_sides, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(integrality_check, m)?)?;
    m.add_function(wrap_pyfunction!(integrality_values, m)?)?;
    Ok(())
}

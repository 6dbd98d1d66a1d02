//! Python bindings: the module `galinv` exposes exact matrices and
//! polynomials, the generator families, the invariant-form solver, form
//! analysis, the Poisson bracket, and the paper verification registry.
//!
//! Rational scalars cross the boundary as `fractions.Fraction` (or the
//! string grammar `-?digits(/digits)?`, or plain ints); everything stays
//! exact end to end.

use num::bigint::BigInt;
use num::rational::BigRational;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use galinv::exact::{Matrix as CoreMatrix, Rational};
use galinv::forms::{
    four_momentum as core_four_momentum, four_velocity as core_four_velocity,
    galilean_form as core_galilean_form, translation_defect as core_translation_defect,
    BilinearForm as CoreForm, FourVector, GalileanParameters,
};
use galinv::groups::{
    boost_algebra_generators, boost_family, cayley_rotation as core_cayley_rotation,
    rotation_algebra_generators, GeneratorFamily as CoreFamily, GeneratorKind,
};
use galinv::invariants::{
    solve_invariant_forms as core_solve, verify_invariance as core_verify, FormBasis as CoreBasis,
    InvarianceProblem,
};
use galinv::poisson::PoissonStructure as CoreStructure;
use galinv::poly::Polynomial as CorePolynomial;
use galinv::report::run_verification;

fn value_err(message: impl Into<String>) -> PyErr {
    PyValueError::new_err(message.into())
}

fn extract_rational(value: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(text) = value.extract::<String>() {
        return Rational::parse(&text).map_err(|e| value_err(e.to_string()));
    }
    if let Ok(int) = value.extract::<BigInt>() {
        return Ok(Rational::from_big(BigRational::from_integer(int)));
    }
    if let Ok(fraction) = value.extract::<BigRational>() {
        return Ok(Rational::from_big(fraction));
    }
    Err(PyTypeError::new_err(
        "expected a Fraction, int, or rational string like \"3/4\"",
    ))
}

fn extract_vector(values: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<Rational>> {
    values.iter().map(extract_rational).collect()
}

fn fraction(r: &Rational) -> BigRational {
    r.as_big().clone()
}

/// Dense matrix of exact rationals.
#[pyclass(name = "Matrix", frozen, from_py_object)]
#[derive(Clone)]
struct PyMatrix {
    inner: CoreMatrix,
}

#[pymethods]
impl PyMatrix {
    /// Matrix from a list of rows; entries are Fractions, ints, or strings.
    #[new]
    fn new(entries: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(value_err("matrix needs at least one row and column"));
        }
        let cols = entries[0].len();
        if entries.iter().any(|row| row.len() != cols) {
            return Err(value_err("all rows must have equal length"));
        }
        let mut data = Vec::with_capacity(entries.len() * cols);
        for row in &entries {
            for value in row {
                data.push(extract_rational(value)?);
            }
        }
        Ok(PyMatrix {
            inner: CoreMatrix::new(entries.len(), cols, data),
        })
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_err("dimension must be positive"));
        }
        Ok(PyMatrix {
            inner: CoreMatrix::identity(n),
        })
    }

    #[staticmethod]
    fn zeros(rows: usize, cols: usize) -> PyResult<Self> {
        if rows == 0 || cols == 0 {
            return Err(value_err("dimensions must be positive"));
        }
        Ok(PyMatrix {
            inner: CoreMatrix::zeros(rows, cols),
        })
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    #[getter]
    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn entry(&self, row: usize, col: usize) -> PyResult<BigRational> {
        if row >= self.inner.rows() || col >= self.inner.cols() {
            return Err(value_err("index out of bounds"));
        }
        Ok(fraction(self.inner.get(row, col)))
    }

    /// All entries as Fractions, row by row.
    fn entries(&self) -> Vec<Vec<BigRational>> {
        (0..self.inner.rows())
            .map(|r| {
                (0..self.inner.cols())
                    .map(|c| fraction(self.inner.get(r, c)))
                    .collect()
            })
            .collect()
    }

    fn transpose(&self) -> Self {
        PyMatrix {
            inner: self.inner.transpose(),
        }
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// Reduced row echelon form and the pivot column list.
    fn rref(&self) -> (Self, Vec<usize>) {
        let (m, pivots) = self.inner.rref();
        (PyMatrix { inner: m }, pivots)
    }

    /// Canonical right-kernel basis, as column vectors.
    fn nullspace(&self) -> Vec<Self> {
        self.inner
            .nullspace()
            .into_iter()
            .map(|m| PyMatrix { inner: m })
            .collect()
    }

    fn inverse(&self) -> PyResult<Self> {
        if !self.inner.is_square() {
            return Err(value_err("inverse requires a square matrix"));
        }
        self.inner
            .inverse()
            .map(|m| PyMatrix { inner: m })
            .map_err(|e| value_err(e.to_string()))
    }

    /// Exact Moore–Penrose pseudo-inverse.
    fn pseudo_inverse(&self) -> Self {
        PyMatrix {
            inner: self.inner.pseudo_inverse(),
        }
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn is_antisymmetric(&self) -> bool {
        self.inner.is_antisymmetric()
    }

    fn scale(&self, k: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: self.inner.scale(&extract_rational(k)?),
        })
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        if (self.inner.rows(), self.inner.cols()) != (other.inner.rows(), other.inner.cols()) {
            return Err(value_err("dimension mismatch"));
        }
        Ok(PyMatrix {
            inner: &self.inner + &other.inner,
        })
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        if (self.inner.rows(), self.inner.cols()) != (other.inner.rows(), other.inner.cols()) {
            return Err(value_err("dimension mismatch"));
        }
        Ok(PyMatrix {
            inner: &self.inner - &other.inner,
        })
    }

    fn __neg__(&self) -> Self {
        PyMatrix {
            inner: -&self.inner,
        }
    }

    fn __matmul__(&self, other: &Self) -> PyResult<Self> {
        self.mul(other)
    }

    fn mul(&self, other: &Self) -> PyResult<Self> {
        if self.inner.cols() != other.inner.rows() {
            return Err(value_err(format!(
                "dimension mismatch: {}x{} @ {}x{}",
                self.inner.rows(),
                self.inner.cols(),
                other.inner.rows(),
                other.inner.cols()
            )));
        }
        Ok(PyMatrix {
            inner: &self.inner * &other.inner,
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix({}x{})", self.inner.rows(), self.inner.cols())
    }
}

/// Sparse multivariate polynomial over exact rationals.
#[pyclass(name = "Polynomial", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    inner: CorePolynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Parses `text` over the ordered variable list, e.g.
    /// `Polynomial.parse("3/2*x1^2*t - x2", ["x1", "x2", "t"])`.
    #[staticmethod]
    fn parse(text: &str, variables: Vec<String>) -> PyResult<Self> {
        CorePolynomial::parse(text, &variables)
            .map(|inner| PyPolynomial { inner })
            .map_err(|e| value_err(e.to_string()))
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.inner.vars().to_vec()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> u32 {
        self.inner.total_degree()
    }

    fn partial(&self, index: usize) -> PyResult<Self> {
        if index >= self.inner.vars().len() {
            return Err(value_err("variable index out of range"));
        }
        Ok(PyPolynomial {
            inner: self.inner.partial(index),
        })
    }

    fn eval(&self, point: Vec<Bound<'_, PyAny>>) -> PyResult<BigRational> {
        if point.len() != self.inner.vars().len() {
            return Err(value_err(
                "evaluation point length must equal variable count",
            ));
        }
        Ok(fraction(&self.inner.eval(&extract_vector(point)?)))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.check_ring(other)?;
        Ok(PyPolynomial {
            inner: self.inner.add(&other.inner),
        })
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.check_ring(other)?;
        Ok(PyPolynomial {
            inner: self.inner.sub(&other.inner),
        })
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.check_ring(other)?;
        Ok(PyPolynomial {
            inner: self.inner.mul(&other.inner),
        })
    }

    fn __neg__(&self) -> Self {
        PyPolynomial {
            inner: self.inner.neg(),
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

impl PyPolynomial {
    fn check_ring(&self, other: &Self) -> PyResult<()> {
        if self.inner.vars() != other.inner.vars() {
            return Err(value_err("polynomial variable lists differ"));
        }
        Ok(())
    }
}

/// One constraint source: an explicit element, a parametric family, or an
/// algebra element.
#[pyclass(name = "GeneratorFamily", frozen, from_py_object)]
#[derive(Clone)]
struct PyFamily {
    inner: CoreFamily,
}

#[pymethods]
impl PyFamily {
    /// The parametric boost family on n spatial dimensions.
    #[staticmethod]
    fn boosts(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_err("spatial dimension must be at least 1"));
        }
        Ok(PyFamily {
            inner: boost_family(n),
        })
    }

    /// The n boost algebra generators.
    #[staticmethod]
    fn boost_algebra(n: usize) -> PyResult<Vec<Self>> {
        if n == 0 {
            return Err(value_err("spatial dimension must be at least 1"));
        }
        Ok(boost_algebra_generators(n)
            .into_iter()
            .map(|inner| PyFamily { inner })
            .collect())
    }

    /// The n(n-1)/2 rotation algebra generators.
    #[staticmethod]
    fn rotations(n: usize) -> PyResult<Vec<Self>> {
        if n == 0 {
            return Err(value_err("spatial dimension must be at least 1"));
        }
        Ok(rotation_algebra_generators(n)
            .into_iter()
            .map(|inner| PyFamily { inner })
            .collect())
    }

    #[staticmethod]
    fn explicit(matrix: &PyMatrix) -> PyResult<Self> {
        if !matrix.inner.is_square() {
            return Err(value_err("group elements must be square"));
        }
        Ok(PyFamily {
            inner: CoreFamily::explicit(matrix.inner.clone()),
        })
    }

    #[staticmethod]
    fn algebra(matrix: &PyMatrix) -> PyResult<Self> {
        if !matrix.inner.is_square() {
            return Err(value_err("algebra elements must be square"));
        }
        Ok(PyFamily {
            inner: CoreFamily::algebra(matrix.inner.clone()),
        })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner.kind() {
            GeneratorKind::Explicit(_) => "explicit",
            GeneratorKind::Parametric { .. } => "parametric",
            GeneratorKind::Algebra(_) => "algebra",
        }
    }

    /// Evaluates a parametric family at concrete parameter values.
    fn evaluate(&self, params: Vec<Bound<'_, PyAny>>) -> PyResult<PyMatrix> {
        let GeneratorKind::Parametric {
            parameter_count, ..
        } = self.inner.kind()
        else {
            return Err(PyTypeError::new_err(
                "evaluate requires a parametric family",
            ));
        };
        if params.len() != *parameter_count {
            return Err(value_err(format!(
                "expected {parameter_count} parameters, got {}",
                params.len()
            )));
        }
        Ok(PyMatrix {
            inner: self.inner.evaluate(&extract_vector(params)?),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "GeneratorFamily(kind={}, dimension={})",
            self.kind(),
            self.inner.dimension()
        )
    }
}

/// Canonical basis of an invariant-form solution space.
#[pyclass(name = "FormBasis", frozen)]
struct PyBasis {
    inner: CoreBasis,
}

#[pymethods]
impl PyBasis {
    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn forms(&self) -> Vec<PyMatrix> {
        self.inner
            .forms()
            .iter()
            .map(|m| PyMatrix { inner: m.clone() })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "FormBasis(dimension={}, count={})",
            self.inner.dimension(),
            self.inner.len()
        )
    }
}

/// A bilinear form with its Gram matrix.
#[pyclass(name = "BilinearForm", frozen, from_py_object)]
#[derive(Clone)]
struct PyForm {
    inner: CoreForm,
}

#[pymethods]
impl PyForm {
    #[new]
    fn new(gram: &PyMatrix) -> PyResult<Self> {
        if !gram.inner.is_square() {
            return Err(value_err("gram matrix must be square"));
        }
        Ok(PyForm {
            inner: CoreForm::new(gram.inner.clone()),
        })
    }

    /// The boost-invariant form with parameters (a, a0).
    #[staticmethod]
    fn galilean(a: Vec<Bound<'_, PyAny>>, a0: &Bound<'_, PyAny>) -> PyResult<Self> {
        if a.is_empty() {
            return Err(value_err("a needs at least one component"));
        }
        let params = GalileanParameters::new(extract_vector(a)?, extract_rational(a0)?);
        Ok(PyForm {
            inner: core_galilean_form(&params),
        })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn gram(&self) -> PyMatrix {
        PyMatrix {
            inner: self.inner.gram().clone(),
        }
    }

    fn evaluate(
        &self,
        x: Vec<Bound<'_, PyAny>>,
        y: Vec<Bound<'_, PyAny>>,
    ) -> PyResult<BigRational> {
        let d = self.inner.dimension();
        if x.len() != d || y.len() != d {
            return Err(value_err("vector length must equal the form dimension"));
        }
        let x = FourVector::new(extract_vector(x)?);
        let y = FourVector::new(extract_vector(y)?);
        Ok(fraction(&self.inner.evaluate(&x, &y)))
    }

    /// (symmetric part, antisymmetric part); they sum back to the form.
    fn split(&self) -> (Self, Self) {
        let (sym, antisym) = self.inner.split();
        (PyForm { inner: sym }, PyForm { inner: antisym })
    }

    fn rank_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = self.inner.rank_report();
        let dict = PyDict::new(py);
        dict.set_item("rank", report.rank)?;
        dict.set_item("nondegenerate", report.nondegenerate)?;
        let radical: Vec<Vec<BigRational>> = report
            .radical_basis
            .iter()
            .map(|v| v.coordinates().iter().map(fraction).collect())
            .collect();
        dict.set_item("radical_basis", radical)?;
        Ok(dict)
    }

    /// The involution A* = G⁻¹AᵀG for symmetric invertible grams.
    fn adjoint(&self, a: &PyMatrix) -> PyResult<PyMatrix> {
        if a.inner.rows() != self.inner.dimension() || !a.inner.is_square() {
            return Err(value_err("operator dimension mismatch"));
        }
        self.inner
            .adjoint(&a.inner)
            .map(|inner| PyMatrix { inner })
            .map_err(|e| value_err(e.to_string()))
    }

    fn is_isometry(&self, a: &PyMatrix) -> PyResult<bool> {
        if a.inner.rows() != self.inner.dimension() || !a.inner.is_square() {
            return Err(value_err("operator dimension mismatch"));
        }
        Ok(self.inner.is_isometry(&a.inner))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("BilinearForm(dimension={})", self.inner.dimension())
    }
}

/// Constant-bivector Poisson structure on polynomial observables.
#[pyclass(name = "PoissonStructure", frozen)]
struct PyStructure {
    inner: CoreStructure,
}

impl PyStructure {
    fn coerce_observable(&self, value: &Bound<'_, PyAny>) -> PyResult<CorePolynomial> {
        if let Ok(poly) = value.extract::<PyPolynomial>() {
            if poly.inner.vars() != self.inner.observable_vars() {
                return Err(value_err(
                    "observable ring mismatch: use this structure's observable_vars",
                ));
            }
            return Ok(poly.inner);
        }
        if let Ok(text) = value.extract::<String>() {
            return self
                .inner
                .parse_observable(&text)
                .map_err(|e| value_err(e.to_string()));
        }
        Err(PyTypeError::new_err("expected a Polynomial or str"))
    }
}

#[pymethods]
impl PyStructure {
    /// Builds κ · pinv(gram) from a form whose gram is exactly
    /// antisymmetric; κ defaults to 1/4.
    #[staticmethod]
    #[pyo3(signature = (form, kappa=None))]
    fn from_form(form: &PyForm, kappa: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let kappa = match kappa {
            Some(value) => extract_rational(value)?,
            None => Rational::new(1, 4),
        };
        CoreStructure::from_form(&form.inner, kappa)
            .map(|inner| PyStructure { inner })
            .map_err(|e| value_err(e.to_string()))
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn bivector(&self) -> PyMatrix {
        PyMatrix {
            inner: self.inner.bivector().clone(),
        }
    }

    #[getter]
    fn kappa(&self) -> BigRational {
        fraction(self.inner.convention_factor())
    }

    #[getter]
    fn observable_vars(&self) -> Vec<String> {
        self.inner.observable_vars().to_vec()
    }

    /// {f, g}; observables are Polynomials over `observable_vars` or
    /// strings parsed over them.
    fn bracket(&self, f: &Bound<'_, PyAny>, g: &Bound<'_, PyAny>) -> PyResult<PyPolynomial> {
        let f = self.coerce_observable(f)?;
        let g = self.coerce_observable(g)?;
        Ok(PyPolynomial {
            inner: self.inner.bracket(&f, &g),
        })
    }

    /// Components of the Hamiltonian field X_f, one per coordinate.
    fn hamiltonian_field(&self, f: &Bound<'_, PyAny>) -> PyResult<Vec<PyPolynomial>> {
        let f = self.coerce_observable(f)?;
        Ok(self
            .inner
            .hamiltonian_field(&f)
            .components()
            .iter()
            .map(|p| PyPolynomial { inner: p.clone() })
            .collect())
    }

    fn jacobi_defect(
        &self,
        f: &Bound<'_, PyAny>,
        g: &Bound<'_, PyAny>,
        h: &Bound<'_, PyAny>,
    ) -> PyResult<PyPolynomial> {
        let f = self.coerce_observable(f)?;
        let g = self.coerce_observable(g)?;
        let h = self.coerce_observable(h)?;
        Ok(PyPolynomial {
            inner: self.inner.jacobi_defect(&f, &g, &h),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "PoissonStructure(dimension={}, kappa={})",
            self.inner.dimension(),
            self.inner.convention_factor()
        )
    }
}

/// Solves for all forms invariant under every given generator family.
#[pyfunction]
fn solve_invariant_forms(dimension: usize, generators: Vec<PyFamily>) -> PyResult<PyBasis> {
    if dimension == 0 {
        return Err(value_err("dimension must be positive"));
    }
    for family in &generators {
        if family.inner.dimension() != dimension {
            return Err(value_err(format!(
                "generator dimension {} does not match problem dimension {dimension}",
                family.inner.dimension()
            )));
        }
    }
    let problem = InvarianceProblem::new(
        dimension,
        generators.into_iter().map(|f| f.inner).collect(),
    );
    Ok(PyBasis {
        inner: core_solve(&problem),
    })
}

/// Checks one Gram matrix against one generator family; returns a dict with
/// `invariant` and the violated entries.
#[pyfunction]
fn verify_invariance<'py>(
    py: Python<'py>,
    gram: &PyMatrix,
    family: &PyFamily,
) -> PyResult<Bound<'py, PyDict>> {
    if !gram.inner.is_square() || gram.inner.rows() != family.inner.dimension() {
        return Err(value_err("gram and generator dimensions must agree"));
    }
    let report = core_verify(&gram.inner, &family.inner);
    let dict = PyDict::new(py);
    dict.set_item("invariant", report.is_invariant())?;
    let violations: Vec<(usize, usize, String)> = report
        .violations
        .into_iter()
        .map(|v| (v.row, v.col, v.value))
        .collect();
    dict.set_item("violations", violations)?;
    Ok(dict)
}

/// Exact rational rotation from an antisymmetric spatial matrix, embedded
/// with an untouched time coordinate.
#[pyfunction]
fn cayley_rotation(s: &PyMatrix) -> PyResult<PyMatrix> {
    core_cayley_rotation(&s.inner)
        .map(|inner| PyMatrix { inner })
        .map_err(|e| value_err(e.to_string()))
}

/// `g(x + shift, y + shift) − g(x, y)` for the boost-invariant form (a, a0).
#[pyfunction]
fn translation_defect(
    a: Vec<Bound<'_, PyAny>>,
    a0: &Bound<'_, PyAny>,
    shift: Vec<Bound<'_, PyAny>>,
    x: Vec<Bound<'_, PyAny>>,
    y: Vec<Bound<'_, PyAny>>,
) -> PyResult<BigRational> {
    if a.is_empty() {
        return Err(value_err("a needs at least one component"));
    }
    let d = a.len() + 1;
    if shift.len() != d || x.len() != d || y.len() != d {
        return Err(value_err(format!("events and shift must have length {d}")));
    }
    let params = GalileanParameters::new(extract_vector(a)?, extract_rational(a0)?);
    let defect = core_translation_defect(
        &params,
        &FourVector::new(extract_vector(shift)?),
        &FourVector::new(extract_vector(x)?),
        &FourVector::new(extract_vector(y)?),
    );
    Ok(fraction(&defect))
}

/// `(v, 1)` as a list of Fractions.
#[pyfunction]
fn four_velocity(v: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<BigRational>> {
    let vector = core_four_velocity(&extract_vector(v)?);
    Ok(vector.coordinates().iter().map(fraction).collect())
}

/// `(m v, m)` as a list of Fractions.
#[pyfunction]
fn four_momentum(m: &Bound<'_, PyAny>, v: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<BigRational>> {
    let vector = core_four_momentum(&extract_rational(m)?, &extract_vector(v)?);
    Ok(vector.coordinates().iter().map(fraction).collect())
}

/// Runs the paper verification registry for spatial dimension n (1 to 4);
/// returns one dict per check.
#[pyfunction]
fn verify_paper(py: Python<'_>, dim: usize) -> PyResult<Vec<Bound<'_, PyDict>>> {
    if !(1..=4).contains(&dim) {
        return Err(value_err("dim must be between 1 and 4"));
    }
    let report = run_verification(dim);
    report
        .checks
        .into_iter()
        .map(|check| {
            let dict = PyDict::new(py);
            dict.set_item("claim_id", check.claim_id)?;
            dict.set_item("paper_location", check.paper_location)?;
            dict.set_item("status", check.status.as_str())?;
            dict.set_item("detail", check.detail)?;
            Ok(dict)
        })
        .collect()
}

#[pymodule(name = "galinv")]
fn galinv_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyBasis>()?;
    m.add_class::<PyForm>()?;
    m.add_class::<PyStructure>()?;
    m.add_function(wrap_pyfunction!(solve_invariant_forms, m)?)?;
    m.add_function(wrap_pyfunction!(verify_invariance, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_rotation, m)?)?;
    m.add_function(wrap_pyfunction!(translation_defect, m)?)?;
    m.add_function(wrap_pyfunction!(four_velocity, m)?)?;
    m.add_function(wrap_pyfunction!(four_momentum, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

//! Python bindings. Errors map to `ValueError` for bad arguments and to the
//! module's own exception types for resource limits and incomplete searches.

use diffbase as db;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(diffbase, ResourceError, PyRuntimeError, "Input exceeds a hard resource cap.");
create_exception!(diffbase, BudgetExhausted, PyRuntimeError, "The search ran out of nodes.");

fn err(e: db::Error) -> PyErr {
    match e {
        db::Error::Domain(_) | db::Error::InvalidInput(_) => PyValueError::new_err(e.to_string()),
        db::Error::Resource(_) => ResourceError::new_err(e.to_string()),
        db::Error::BudgetExhausted { .. } => BudgetExhausted::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn json_to_py(py: Python<'_>, s: String) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

/// A cyclic group `C_n`, a dihedral group `D_2n` or the interval `[0, n]`.
#[pyclass(name = "GroupSpec", module = "diffbase", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyGroupSpec(db::GroupSpec);

#[pymethods]
impl PyGroupSpec {
    #[new]
    fn new(kind: &str, n: u32) -> PyResult<Self> {
        let kind: db::GroupKind = kind.parse().map_err(err)?;
        Ok(PyGroupSpec(db::GroupSpec::new(kind, n).map_err(err)?))
    }

    #[staticmethod]
    fn cyclic(n: u32) -> PyResult<Self> {
        Self::new("cyclic", n)
    }

    #[staticmethod]
    fn dihedral(n: u32) -> PyResult<Self> {
        Self::new("dihedral", n)
    }

    #[staticmethod]
    fn interval(n: u32) -> PyResult<Self> {
        Self::new("interval", n)
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.0.kind {
            db::GroupKind::Cyclic => "cyclic",
            db::GroupKind::Dihedral => "dihedral",
            db::GroupKind::Interval => "interval",
        }
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n
    }

    /// Number of elements (points, for an interval).
    #[getter]
    fn order(&self) -> usize {
        self.0.points()
    }

    fn mul(&self, g: u32, h: u32) -> PyResult<u32> {
        Ok(self.0.mul(db::Element(g), db::Element(h)).map_err(err)?.0)
    }

    fn inv(&self, g: u32) -> PyResult<u32> {
        Ok(self.0.inv(db::Element(g)).map_err(err)?.0)
    }

    /// `a·b⁻¹`.
    fn difference(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.0.difference(db::Element(a), db::Element(b)).map_err(err)?.0)
    }

    fn __repr__(&self) -> String {
        format!("GroupSpec('{}', {})", self.kind(), self.0.n)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "Basis", module = "diffbase", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyBasis(db::Basis);

#[pymethods]
impl PyBasis {
    #[new]
    fn new(group: PyGroupSpec, elems: Vec<u32>) -> PyResult<Self> {
        Ok(PyBasis(db::Basis::new(group.0, elems).map_err(err)?))
    }

    #[getter]
    fn group(&self) -> PyGroupSpec {
        PyGroupSpec(self.0.group())
    }

    #[getter]
    fn elems(&self) -> Vec<u32> {
        self.0.elems().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn is_difference_basis(&self) -> bool {
        db::is_difference_basis(&self.0)
    }

    /// Elements not of the form `a·b⁻¹`.
    fn uncovered(&self) -> Vec<u32> {
        db::group::uncovered(&self.0)
    }

    fn translate(&self, g: u32) -> PyResult<Self> {
        Ok(PyBasis(self.0.translate(db::Element(g)).map_err(err)?))
    }

    /// `(A, B')` with `B = A ∪ s·B'`.
    fn split(&self) -> PyResult<(Vec<u32>, Vec<u32>)> {
        db::split_dihedral_basis(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Basis({}, {})", self.0.group(), self.0)
    }
}

#[pyclass(name = "SearchOutcome", module = "diffbase", frozen, get_all)]
struct PySearchOutcome {
    delta: u32,
    witness: PyBasis,
    certified: bool,
    nodes_expanded: u64,
    wall_time: f64,
}

#[pymethods]
impl PySearchOutcome {
    fn __repr__(&self) -> String {
        format!(
            "SearchOutcome(delta={}, certified={}, witness={})",
            self.delta,
            if self.certified { "True" } else { "False" },
            self.witness.0
        )
    }
}

/// `ð = Δ/√N`, exact as a pair and truncated to four decimals for display.
#[pyclass(name = "Characteristic", module = "diffbase", frozen, get_all)]
struct PyCharacteristic {
    delta: u64,
    order: u64,
    value: f64,
    exact: bool,
    decimal: String,
}

#[pymethods]
impl PyCharacteristic {
    fn __str__(&self) -> String {
        db::characteristic(self.delta, self.order).to_string()
    }

    fn __repr__(&self) -> String {
        format!("Characteristic({}/sqrt({}) = {})", self.delta, self.order, self.__str__())
    }
}

/// GF(p^k) with elements as coefficient lists, constant term first.
#[pyclass(name = "Field", module = "diffbase", frozen)]
struct PyField(db::FieldSpec);

#[pymethods]
impl PyField {
    #[new]
    fn new(p: u32, k: u32) -> PyResult<Self> {
        Ok(PyField(db::make_field(p, k).map_err(err)?))
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.p()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.0.modulus().to_vec()
    }

    fn element(&self, code: u32) -> PyResult<Vec<u32>> {
        if code >= self.0.q() {
            return Err(PyValueError::new_err(format!("code {code} out of range")));
        }
        Ok(self.0.element(code).coeffs)
    }

    fn add(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(self.0.add(&self.elem(a)?, &self.elem(b)?).coeffs)
    }

    fn mul(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(self.0.mul(&self.elem(a)?, &self.elem(b)?).coeffs)
    }

    fn pow(&self, a: Vec<u32>, e: u64) -> PyResult<Vec<u32>> {
        Ok(self.0.pow(&self.elem(a)?, e).coeffs)
    }

    fn primitive_element(&self) -> Vec<u32> {
        db::primitive_element(&self.0).coeffs
    }

    /// Discrete log to the base of `primitive_element()`; `None` for zero.
    fn log(&self, x: Vec<u32>) -> PyResult<Option<u32>> {
        let t = db::dlog_table(&self.0).map_err(err)?;
        Ok(t.log(&self.0, &self.elem(x)?))
    }

    fn __repr__(&self) -> String {
        format!("Field({}, {})", self.0.p(), self.0.k())
    }
}

impl PyField {
    fn elem(&self, mut coeffs: Vec<u32>) -> PyResult<db::FieldElement> {
        let (p, k) = (self.0.p(), self.0.k() as usize);
        if coeffs.len() > k || coeffs.iter().any(|&c| c >= p) {
            return Err(PyValueError::new_err(format!(
                "expected at most {k} coefficients below {p}, got {coeffs:?}"
            )));
        }
        coeffs.resize(k, 0);
        Ok(db::FieldElement { coeffs })
    }
}

#[pyfunction]
fn is_difference_basis(basis: &PyBasis) -> bool {
    db::is_difference_basis(&basis.0)
}

fn config(
    group: db::GroupSpec,
    budget: Option<u64>,
    width: Option<usize>,
    witness_only: bool,
) -> db::SearchConfig {
    let mut cfg = db::SearchConfig::for_spec(group).with_budget(budget);
    if let Some(w) = width {
        cfg.parallel_width = w;
    }
    cfg.witness_only = witness_only;
    cfg
}

/// Least difference basis by exact search. Without a budget the search runs
/// to completion and the result is certified.
#[pyfunction]
#[pyo3(signature = (group, budget=None, width=None, witness_only=false))]
fn min_difference_basis(
    py: Python<'_>,
    group: PyGroupSpec,
    budget: Option<u64>,
    width: Option<usize>,
    witness_only: bool,
) -> PyResult<PySearchOutcome> {
    let cfg = config(group.0, budget, width, witness_only);
    let out = py.detach(|| db::min_difference_basis(group.0, &cfg)).map_err(err)?;
    Ok(PySearchOutcome {
        delta: out.delta,
        witness: PyBasis(out.witness),
        certified: out.certified,
        nodes_expanded: out.nodes_expanded,
        wall_time: out.wall_time.as_secs_f64(),
    })
}

/// A basis of exactly `k` elements, or `None` when none exists.
#[pyfunction]
#[pyo3(signature = (group, k, budget=None, width=None))]
fn find_basis_of_size(
    py: Python<'_>,
    group: PyGroupSpec,
    k: usize,
    budget: Option<u64>,
    width: Option<usize>,
) -> PyResult<Option<PyBasis>> {
    let cfg = config(group.0, budget, width, true);
    let out = py.detach(|| db::find_basis_of_size(group.0, k, &cfg)).map_err(err)?;
    Ok(out.map(PyBasis))
}

#[pyfunction]
fn characteristic(delta: u64, order: u64) -> PyResult<PyCharacteristic> {
    if delta == 0 || order == 0 {
        return Err(PyValueError::new_err("delta and order must be positive"));
    }
    let c = db::characteristic(delta, order);
    Ok(PyCharacteristic { delta, order, value: c.value(), exact: c.is_exact(), decimal: c.decimal() })
}

/// Every applicable bound with its rule and witness, as a dict.
#[pyfunction]
fn bound_report(py: Python<'_>, group: PyGroupSpec) -> PyResult<Py<PyAny>> {
    let r = db::bound_report(group.0, &db::bounds::NoCache);
    let s = serde_json::to_string(&r).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    json_to_py(py, s)
}

/// Perfect `(q²+q+1, q+1, 1)` difference set as a basis of `C_{q²+q+1}`.
#[pyfunction]
fn singer_set(q: u32) -> PyResult<PyBasis> {
    Ok(PyBasis(db::singer_set(q).map_err(err)?.into_basis()))
}

/// `(modulus, elements)` of a Sidon set of size `q` in `Z_{q²−1}`.
#[pyfunction]
fn bose_chowla_set(q: u32) -> PyResult<(u32, Vec<u32>)> {
    let s = db::bose_chowla_set(q).map_err(err)?;
    Ok((s.modulus, s.elems))
}

#[pyfunction]
fn dihedral_basis_from_cyclic(basis: &PyBasis) -> PyResult<PyBasis> {
    Ok(PyBasis(db::dihedral_basis_from_cyclic(&basis.0).map_err(err)?.into_basis()))
}

#[pyfunction]
fn subgroup_transversal_basis(group: PyGroupSpec, m: u32) -> PyResult<PyBasis> {
    Ok(PyBasis(db::subgroup_transversal_basis(group.0, m).map_err(err)?.into_basis()))
}

#[pyfunction]
fn cyclic_basis_from_interval(basis: &PyBasis, n: u32) -> PyResult<PyBasis> {
    Ok(PyBasis(db::cyclic_basis_from_interval(&basis.0, n).map_err(err)?.into_basis()))
}

/// Consecutive prime powers `q < q'` in `[lo, hi]` with
/// `11(q'+1)² > 12q² + 14q + 16`, as `(q, q')` pairs.
#[pyfunction]
fn verify_gap_inequality(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    db::bounds::verify_gap_inequality(lo, hi).violators.iter().map(|v| (v.q, v.next)).collect()
}

#[pymodule]
#[pyo3(name = "diffbase")]
fn diffbase_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ResourceError", m.py().get_type::<ResourceError>())?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add_class::<PyGroupSpec>()?;
    m.add_class::<PyBasis>()?;
    m.add_class::<PySearchOutcome>()?;
    m.add_class::<PyCharacteristic>()?;
    m.add_class::<PyField>()?;
    m.add_function(wrap_pyfunction!(is_difference_basis, m)?)?;
    m.add_function(wrap_pyfunction!(min_difference_basis, m)?)?;
    m.add_function(wrap_pyfunction!(find_basis_of_size, m)?)?;
    m.add_function(wrap_pyfunction!(characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(singer_set, m)?)?;
    m.add_function(wrap_pyfunction!(bose_chowla_set, m)?)?;
    m.add_function(wrap_pyfunction!(dihedral_basis_from_cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(subgroup_transversal_basis, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_basis_from_interval, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gap_inequality, m)?)?;
    Ok(())
}

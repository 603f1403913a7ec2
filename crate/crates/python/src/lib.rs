//! Python bindings: `import hyperroot`.

use ::hyperroot as core;
use core::{asymptotics, bounds, cartan, qseries, roots, Error, MultTable, RootVector};
use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    match e {
        Error::DegenerateDivisor(_) | Error::Integrality { .. } => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A generalized Cartan matrix with its own multiplicity table.
#[pyclass(name = "Gcm", module = "hyperroot")]
struct PyGcm {
    gcm: core::Gcm,
    table: MultTable,
}

impl PyGcm {
    fn wrap(gcm: core::Gcm) -> Self {
        let table = MultTable::new(&gcm);
        PyGcm { gcm, table }
    }

    fn root(&self, coords: Vec<i64>) -> PyResult<RootVector> {
        let (expected, found) = (self.gcm.rank(), coords.len());
        let vector = RootVector::new(coords);
        if found != expected {
            return Err(err(Error::RankMismatch { vector, expected, found }));
        }
        Ok(vector)
    }
}

#[pymethods]
impl PyGcm {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        core::Gcm::new(rows).map(Self::wrap).map_err(err)
    }

    /// Parses text (`"2,-1;-1,2"`), JSON or a preset name.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_gcm(text).map(Self::wrap).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.gcm.rank()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<i64>> {
        self.gcm.rows()
    }

    #[getter]
    fn symmetrizer(&self) -> Option<Vec<i64>> {
        self.gcm.symmetrizer().map(<[i64]>::to_vec)
    }

    /// Classification of an indecomposable matrix as a dict with keys
    /// `kind`, `hyperbolic`, `compact_hyperbolic` and `lorentzian`.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let t = cartan::classify_indecomposable(&self.gcm).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("kind", t.kind.to_string())?;
        d.set_item("hyperbolic", t.flags.hyperbolic)?;
        d.set_item("compact_hyperbolic", t.flags.compact_hyperbolic)?;
        d.set_item("lorentzian", t.flags.lorentzian)?;
        Ok(d)
    }

    fn classification(&self) -> String {
        match cartan::classify(&self.gcm).single() {
            Some(t) => t.to_string(),
            None => "decomposable".into(),
        }
    }

    /// Affinization by the highest root (finite type only).
    fn extend(&self) -> PyResult<Self> {
        cartan::extend(&self.gcm).map(Self::wrap).map_err(err)
    }

    fn overextend(&self) -> PyResult<Self> {
        cartan::overextend(&self.gcm).map(Self::wrap).map_err(err)
    }

    fn extend_at(&self, attach: usize) -> PyResult<Self> {
        cartan::extend_at(&self.gcm, attach).map(Self::wrap).map_err(err)
    }

    fn norm(&self, root: Vec<i64>) -> PyResult<i64> {
        roots::norm(&self.gcm, &self.root(root)?).map_err(err)
    }

    fn is_real_root(&self, root: Vec<i64>) -> PyResult<bool> {
        Ok(roots::is_real_root(&self.gcm, &self.root(root)?))
    }

    /// Peterson recursion; results are kept for later calls on this matrix.
    fn mult(&mut self, py: Python<'_>, root: Vec<i64>) -> PyResult<BigUint> {
        let alpha = self.root(root)?;
        let PyGcm { gcm, table } = self;
        py.detach(|| core::mult_peterson(gcm, &alpha, table)).map_err(err)
    }

    fn mult_berman_moody(&self, py: Python<'_>, root: Vec<i64>) -> PyResult<BigUint> {
        let alpha = self.root(root)?;
        py.detach(|| core::mult_berman_moody(&self.gcm, &alpha)).map_err(err)
    }

    /// Positive roots up to `height` as `(coords, mult)` pairs, sorted by height.
    fn roots_to(&mut self, py: Python<'_>, height: i64) -> PyResult<Vec<(Vec<i64>, BigUint)>> {
        let table = &mut self.table;
        py.detach(|| table.extend_to(height)).map_err(err)?;
        Ok(self
            .table
            .entries()
            .into_iter()
            .filter(|(a, m)| a.height() <= height && **m > BigUint::ZERO)
            .map(|(a, m)| (a.coords().to_vec(), m.clone()))
            .collect())
    }

    fn frenkel_bound(&self, root: Vec<i64>, d: u32) -> PyResult<BigInt> {
        bounds::frenkel_bound(&self.root(root)?, d, &self.gcm).map_err(err)
    }

    fn borcherds_bound(&self, root: Vec<i64>, d: u32) -> PyResult<BigInt> {
        bounds::borcherds_bound(&self.root(root)?, d, &self.gcm).map_err(err)
    }

    fn niemann_bound(&self, root: Vec<i64>) -> PyResult<BigInt> {
        bounds::niemann_bound(&self.root(root)?, &self.gcm).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Gcm('{}')", self.gcm)
    }

    fn __str__(&self) -> String {
        self.gcm.to_string()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.gcm == other.gcm
    }
}

/// Coefficients `c_0 ..= c_order` of a named series: `p`, `p_l`, `xi`,
/// `ff_level2`, `p_sigma` or `tau`.
#[pyfunction]
#[pyo3(signature = (name, order, colors = 1))]
fn series(py: Python<'_>, name: &str, order: usize, colors: u32) -> PyResult<Vec<BigInt>> {
    let s = qseries::SeriesName::parse(name, colors)
        .ok_or_else(|| PyValueError::new_err(format!("unknown series '{name}'")))?;
    Ok(py.detach(|| s.compute(order)).into_coeffs())
}

#[pyfunction]
fn bessel_i2(x: f64) -> PyResult<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(PyValueError::new_err("x must be non-negative"));
    }
    Ok(asymptotics::bessel_i2(x))
}

#[pyfunction]
fn hrr_main_term(n: u64) -> PyResult<f64> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    Ok(asymptotics::hrr_main_term(n))
}

#[pyfunction]
fn index_from_norm(norm: i64) -> PyResult<u64> {
    asymptotics::index_from_norm(norm).map_err(err)
}

#[pymodule]
fn hyperroot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGcm>()?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_i2, m)?)?;
    m.add_function(wrap_pyfunction!(hrr_main_term, m)?)?;
    m.add_function(wrap_pyfunction!(index_from_norm, m)?)?;
    Ok(())
}

//! Python bindings: `import pfgr`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use pfgr::dsl::Value;
use pfgr::grid::{run_grid, GridRequest};
use pfgr::pairs::{self, CheckId, LinearSection, PGPair};
use pfgr::render::{render_grid, render_pair, OutputFormat};
use pfgr::schubert::{self, ClassMethod};
use pfgr::{chern, Error, TPoly};

fn py_err(e: Error) -> PyErr {
    let msg = format!("{}: {e}", e.kind());
    if e.exit_code() == 2 {
        PyValueError::new_err(msg)
    } else {
        PyRuntimeError::new_err(msg)
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for pfgr::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn betti(p: &TPoly) -> Vec<BigInt> {
    p.betti_numbers()
}

fn format(name: &str) -> PyResult<OutputFormat> {
    name.parse().py()
}

fn label<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

/// A valid Pfaffian–Grassmannian pair `(n, k)`.
#[pyclass(name = "Pair", frozen)]
struct PyPair {
    inner: PGPair,
}

#[pymethods]
impl PyPair {
    #[new]
    fn new(n: u32, k: u32) -> PyResult<Self> {
        Ok(PyPair {
            inner: pairs::make_pair(n, k).py()?,
        })
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k
    }

    #[getter]
    fn dim_x(&self) -> i64 {
        self.inner.dim_x
    }

    #[getter]
    fn dim_y(&self) -> i64 {
        self.inner.dim_y
    }

    #[getter]
    fn s(&self) -> u32 {
        self.inner.s
    }

    #[getter]
    fn m(&self) -> i64 {
        self.inner.m
    }

    /// Betti numbers of X, degree 0 upwards.
    fn poincare_x(&self) -> PyResult<Vec<BigInt>> {
        Ok(betti(&pairs::poincare_x(self.inner.section()).py()?))
    }

    /// Betti numbers of Y, derived from the relation in K₀.
    fn poincare_y(&self) -> PyResult<Vec<BigInt>> {
        let px = pairs::poincare_x(self.inner.section()).py()?;
        Ok(betti(&pairs::derive_poincare_y(&self.inner, &px).py()?))
    }

    fn variable_betti(&self) -> PyResult<BigInt> {
        pairs::variable_betti(self.inner.section()).py()
    }

    fn nl_status(&self) -> String {
        label(&pairs::nl_status(self.inner.n, self.inner.k))
    }

    fn main_theorem_status(&self) -> PyResult<String> {
        Ok(label(&pairs::main_theorem_status(self.inner.section()).py()?))
    }

    #[pyo3(signature = (format = "json"))]
    fn report(&self, format: &str) -> PyResult<String> {
        let r = pairs::pair_report(self.inner.n, self.inner.k).py()?;
        render_pair(&r, self::format(format)?).py()
    }

    fn __repr__(&self) -> String {
        format!(
            "Pair(n={}, k={}, dim_x={}, dim_y={})",
            self.inner.n, self.inner.k, self.inner.dim_x, self.inner.dim_y
        )
    }
}

#[derive(IntoPyObject)]
enum DslValue {
    Class(Vec<BigInt>),
    Bool(bool),
}

/// Evaluate an expression; a class comes back as its coefficient list in L.
#[pyfunction]
fn eval_dsl(source: &str) -> PyResult<DslValue> {
    Ok(match pfgr::dsl::eval_dsl(source).py()? {
        Value::Class(c) => DslValue::Class(c.to_dense()),
        Value::Bool(b) => DslValue::Bool(b),
    })
}

#[pyfunction]
fn make_pair(n: u32, k: u32) -> PyResult<PyPair> {
    PyPair::new(n, k)
}

/// Betti numbers of Gr(2,n) cut by k general hyperplanes.
#[pyfunction]
fn poincare_x(n: u32, k: u32) -> PyResult<Vec<BigInt>> {
    Ok(betti(&pairs::poincare_x(LinearSection::new(n, k).py()?).py()?))
}

#[pyfunction]
fn grassmannian_class(n: u32) -> PyResult<Vec<BigInt>> {
    Ok(schubert::grassmannian_class(n, ClassMethod::Cells).py()?.to_dense())
}

#[pyfunction]
fn hyperplane_section_class(n: u32) -> PyResult<Vec<BigInt>> {
    Ok(schubert::hyperplane_section_class(n).py()?.to_dense())
}

/// Betti numbers of a smooth degree-`d` hypersurface in projective space of dimension `ambient_dim`.
#[pyfunction]
fn hypersurface_poincare_oracle(d: u32, ambient_dim: u32) -> PyResult<Vec<BigInt>> {
    Ok(betti(&pairs::hypersurface_poincare_oracle(d, ambient_dim).py()?))
}

#[pyfunction]
fn euler_characteristic(n: u32, k: u32) -> PyResult<BigInt> {
    chern::euler_characteristic_ci(n, k).py()
}

/// χ_y coefficients, lowest power of y first.
#[pyfunction]
fn chi_y(n: u32, k: u32) -> PyResult<Vec<BigInt>> {
    chern::chi_y_ci(n, k).py()
}

/// `h^{p, d−p}` of X for `p = 0..=d`.
#[pyfunction]
fn middle_hodge(n: u32, k: u32) -> PyResult<Vec<BigInt>> {
    Ok(chern::middle_hodge(n, k).py()?.middle_hodge)
}

#[pyfunction]
fn check_l_equivalence(n: u32) -> PyResult<bool> {
    pairs::check_l_equivalence(n).py()
}

#[pyfunction]
#[pyo3(signature = (n, k, format = "json"))]
fn pair_report(n: u32, k: u32, format: &str) -> PyResult<String> {
    let r = pairs::pair_report(n, k).py()?;
    render_pair(&r, self::format(format)?).py()
}

/// Run checks over a rectangle of pairs; `checks=None` runs all of them.
#[pyfunction]
#[pyo3(signature = (n_range, k_range, checks = None, format = "json", jobs = 1))]
fn grid(
    n_range: (u32, u32),
    k_range: (u32, u32),
    checks: Option<Vec<String>>,
    format: &str,
    jobs: usize,
) -> PyResult<String> {
    let checks = match checks {
        None => CheckId::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| s.parse())
            .collect::<pfgr::Result<Vec<CheckId>>>()
            .py()?,
    };
    let output_format = self::format(format)?;
    let req = GridRequest {
        n_range,
        k_range,
        checks,
        output_format,
        parallelism: jobs,
        cache: pfgr::cache::TableCache::from_env(),
    };
    render_grid(&run_grid(&req).py()?, output_format).py()
}

#[pymodule]
#[pyo3(name = "pfgr")]
fn pfgr_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(make_pair, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_x, m)?)?;
    m.add_function(wrap_pyfunction!(grassmannian_class, m)?)?;
    m.add_function(wrap_pyfunction!(hyperplane_section_class, m)?)?;
    m.add_function(wrap_pyfunction!(hypersurface_poincare_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(chi_y, m)?)?;
    m.add_function(wrap_pyfunction!(middle_hodge, m)?)?;
    m.add_function(wrap_pyfunction!(check_l_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(eval_dsl, m)?)?;
    m.add_function(wrap_pyfunction!(pair_report, m)?)?;
    m.add_function(wrap_pyfunction!(grid, m)?)?;
    Ok(())
}

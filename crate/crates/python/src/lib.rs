//! Python bindings. Reports come back as plain dicts with the same shape as
//! the command line's JSON.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use conekit::api::{self, DeformSpec, SampleSpec, Source};
use conekit::groebner::{GbOptions, DEFAULT_PAIR_CAP};
use conekit::homology::DEFAULT_STRAND_CAP;
use conekit::pfaffian::DeformMode;
use conekit::t1::MethodChoice;
use conekit::{CoefficientField, Error};

create_exception!(conekit_py, ConekitError, PyException);
create_exception!(conekit_py, ResourceCapError, ConekitError);

fn err(e: Error) -> PyErr {
    if e.is_resource_cap() {
        ResourceCapError::new_err(e.to_string())
    } else {
        ConekitError::new_err(e.to_string())
    }
}

fn to_dict<T: Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

fn field(s: &str) -> PyResult<CoefficientField> {
    s.parse().map_err(err)
}

/// An ideal given by `.ck` text or by a built-in model name.
#[pyclass(frozen)]
struct Ideal {
    source: Source,
    field: CoefficientField,
    opts: GbOptions,
}

#[pymethods]
impl Ideal {
    #[staticmethod]
    #[pyo3(signature = (text, field="32003", max_pairs=DEFAULT_PAIR_CAP))]
    fn from_text(text: String, field: &str, max_pairs: usize) -> PyResult<Self> {
        Ok(Ideal {
            source: Source::Text(text),
            field: self::field(field)?,
            opts: GbOptions { pair_cap: max_pairs },
        })
    }

    #[staticmethod]
    #[pyo3(signature = (name, seed=1, field="32003", max_pairs=DEFAULT_PAIR_CAP))]
    fn model(name: String, seed: u64, field: &str, max_pairs: usize) -> PyResult<Self> {
        Ok(Ideal {
            source: Source::Model { name, seed },
            field: self::field(field)?,
            opts: GbOptions { pair_cap: max_pairs },
        })
    }

    #[getter]
    fn field(&self) -> String {
        self.field.to_string()
    }

    fn gb(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let r = py.detach(|| api::gb(&self.source, self.field, self.opts)).map_err(err)?;
        to_dict(py, &r)
    }

    #[pyo3(signature = (d_min=0, d_max=10))]
    fn hilbert(&self, py: Python<'_>, d_min: u64, d_max: u64) -> PyResult<Py<PyAny>> {
        let r = py
            .detach(|| api::hilbert(&self.source, self.field, d_min, d_max, self.opts))
            .map_err(err)?;
        to_dict(py, &r)
    }

    /// Graded pieces of T¹ for `k_min <= k <= k_max`.
    #[pyo3(signature = (k_min, k_max, method="auto"))]
    fn t1(&self, py: Python<'_>, k_min: i64, k_max: i64, method: &str) -> PyResult<Py<PyAny>> {
        let method: MethodChoice = method.parse().map_err(err)?;
        let r = py
            .detach(|| api::t1(&self.source, self.field, k_min, k_max, method, self.opts))
            .map_err(err)?;
        to_dict(py, &r)
    }

    #[pyo3(signature = (p_max=3, q_max=3, strand_cap=DEFAULT_STRAND_CAP))]
    fn betti(&self, py: Python<'_>, p_max: usize, q_max: usize, strand_cap: usize) -> PyResult<Py<PyAny>> {
        let r = py
            .detach(|| api::betti(&self.source, self.field, p_max, q_max, strand_cap, self.opts))
            .map_err(err)?;
        to_dict(py, &r)
    }

    fn wahl(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let r = py.detach(|| api::wahl(&self.source, self.field, self.opts)).map_err(err)?;
        to_dict(py, &r)
    }
}

/// Pfaffians of the first skew matrix in `text`. `deform` is a dict with
/// optional keys `lambda`, `h1`, `h2`, `h3` (strings, default "0").
#[pyfunction]
#[pyo3(signature = (text, field="32003", deform=None, mode="affine", sample=None, seed=1, expected_dim=None))]
#[allow(clippy::too_many_arguments)]
fn pfaff(
    py: Python<'_>,
    text: &str,
    field: &str,
    deform: Option<std::collections::HashMap<String, String>>,
    mode: &str,
    sample: Option<usize>,
    seed: u64,
    expected_dim: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let cf = self::field(field)?;
    let mode: DeformMode = mode.parse().map_err(err)?;
    let spec = match deform {
        None => None,
        Some(mut d) => {
            let mut take = |k: &str| d.remove(k).unwrap_or_else(|| "0".to_string());
            let spec = DeformSpec {
                lambda: take("lambda"),
                h: [take("h1"), take("h2"), take("h3")],
                mode,
            };
            if let Some(k) = d.keys().next() {
                return Err(PyValueError::new_err(format!("unknown deformation key '{k}'")));
            }
            Some(spec)
        }
    };
    let sample = sample.map(|trials| SampleSpec { trials, seed, expected_dim });
    let r = py.detach(|| api::pfaff(text, cf, spec.as_ref(), sample)).map_err(err)?;
    to_dict(py, &r)
}

#[pyfunction]
fn classify_k3(py: Python<'_>, genus: u32) -> PyResult<Py<PyAny>> {
    to_dict(py, &api::classify_k3(genus).map_err(err)?)
}

#[pyfunction]
fn classify_elliptic(py: Python<'_>, degree: u32) -> PyResult<Py<PyAny>> {
    to_dict(py, &api::classify_elliptic(degree).map_err(err)?)
}

#[pyfunction]
fn classify_abelian(py: Python<'_>, dim: u32) -> PyResult<Py<PyAny>> {
    to_dict(py, &api::classify_abelian(dim).map_err(err)?)
}

#[pyfunction]
fn fano_table(py: Python<'_>, genus: u32) -> PyResult<Py<PyAny>> {
    to_dict(py, &api::fano_table(genus).map_err(err)?)
}

#[pyfunction]
fn models() -> Vec<&'static str> {
    conekit::corpus::MODEL_NAMES.to_vec()
}

#[pymodule]
fn conekit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ideal>()?;
    m.add_function(wrap_pyfunction!(pfaff, m)?)?;
    m.add_function(wrap_pyfunction!(classify_k3, m)?)?;
    m.add_function(wrap_pyfunction!(classify_elliptic, m)?)?;
    m.add_function(wrap_pyfunction!(classify_abelian, m)?)?;
    m.add_function(wrap_pyfunction!(fano_table, m)?)?;
    m.add_function(wrap_pyfunction!(models, m)?)?;
    m.add("ConekitError", m.py().get_type::<ConekitError>())?;
    m.add("ResourceCapError", m.py().get_type::<ResourceCapError>())?;
    Ok(())
}

//! Python bindings. Reports cross the boundary as plain dicts and lists,
//! built from the same JSON the command line prints.

use std::path::PathBuf;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;
use serde_json::Value;

use autsurf::classify::{boundary_vectors, classify_genus, counterexample_dihedral2, counterexample_q8, stratum};
use autsurf::fuchsian::possible_extensions;
use autsurf::genvec::{enumerate_vectors_with, orbit_classes_with};
use autsurf::group::{FiniteGroup, GroupSpec};
use autsurf::jacobian::decomposition_report;
use autsurf::Error;

fn to_py(e: Error) -> PyErr {
    match e.exit_code() {
        1 => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn json_to_py(py: Python<'_>, value: &Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A finite group from a spec string such as `dihedral:22` or `metacyclic:13,4,5`.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    inner: FiniteGroup,
}

#[pymethods]
impl PyGroup {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let inner = spec.parse::<GroupSpec>().and_then(|s| s.build()).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn spec(&self) -> String {
        self.inner.spec().to_string()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.spec().paper_name()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn elements(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn element_order(&self, label: &str) -> PyResult<u32> {
        let x = self.inner.parse_element(label).map_err(to_py)?;
        Ok(self.inner.element_order(x))
    }

    fn mul(&self, a: &str, b: &str) -> PyResult<String> {
        let a = self.inner.parse_element(a).map_err(to_py)?;
        let b = self.inner.parse_element(b).map_err(to_py)?;
        Ok(self.inner.label(self.inner.mul(a, b)).to_string())
    }

    fn inverse(&self, a: &str) -> PyResult<String> {
        let a = self.inner.parse_element(a).map_err(to_py)?;
        Ok(self.inner.label(self.inner.inv(a)).to_string())
    }

    /// Counts of elements by order.
    fn order_profile(&self) -> Vec<(u32, usize)> {
        self.inner.order_profile().into_iter().collect()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner.spec())
    }
}

/// A signature `h;m1,...,mr`.
#[pyclass(name = "Signature", frozen)]
struct PySignature {
    inner: autsurf::fuchsian::Signature,
}

#[pymethods]
impl PySignature {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: text.parse().map_err(to_py)?,
        })
    }

    #[getter]
    fn orbit_genus(&self) -> u32 {
        self.inner.orbit_genus()
    }

    #[getter]
    fn periods(&self) -> Vec<u32> {
        self.inner.periods().to_vec()
    }

    fn is_hyperbolic(&self) -> bool {
        self.inner.is_hyperbolic()
    }

    fn teichmuller_dimension(&self) -> PyResult<u32> {
        self.inner.teich_dim().map_err(to_py)
    }

    /// Genus of a surface with a group of this order acting with this signature.
    fn surface_genus(&self, group_order: usize) -> PyResult<u64> {
        self.inner.rh_genus(group_order).map_err(to_py)
    }

    /// Signatures this one may extend to, as `(signature, index)` pairs.
    fn extensions(&self) -> Vec<(String, u32)> {
        possible_extensions(&self.inner)
            .into_iter()
            .map(|r| (r.outer.to_string(), r.index))
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Signature('{}')", self.inner)
    }
}

fn parse_pair(group: &str, signature: &str) -> PyResult<(FiniteGroup, autsurf::fuchsian::Signature)> {
    let g = group.parse::<GroupSpec>().and_then(|s| s.build()).map_err(to_py)?;
    Ok((g, signature.parse().map_err(to_py)?))
}

/// Every generating vector for the pair, as lists of element labels.
#[pyfunction]
#[pyo3(signature = (group, signature, workers = 1))]
fn generating_vectors<'py>(py: Python<'py>, group: &str, signature: &str, workers: usize) -> PyResult<Bound<'py, PyList>> {
    let (g, s) = parse_pair(group, signature)?;
    let vectors = py.detach(|| enumerate_vectors_with(&g, &s, workers)).map_err(to_py)?;
    let labels: Vec<Vec<String>> = vectors.iter().map(|v| v.entry_labels(&g)).collect();
    PyList::new(py, labels)
}

/// Orbit classes of vectors under braids and automorphisms.
#[pyfunction]
#[pyo3(signature = (group, signature, workers = 1))]
fn orbit_classes(py: Python<'_>, group: &str, signature: &str, workers: usize) -> PyResult<Py<PyAny>> {
    let (g, s) = parse_pair(group, signature)?;
    let summary = py.detach(|| orbit_classes_with(&g, &s, workers)).map_err(to_py)?;
    let classes: Vec<Value> = summary
        .classes
        .iter()
        .map(|c| {
            serde_json::json!({
                "representative": c.representative.entry_labels(&g),
                "orbit_size": c.orbit_size,
                "full_orbit_size": c.full_orbit_size,
            })
        })
        .collect();
    let v = serde_json::json!({
        "signature": summary.signature.to_string(),
        "vector_count": summary.vector_count,
        "class_count": summary.class_count(),
        "classes": classes,
    });
    json_to_py(py, &v)
}

/// Vector and class counts for one group and signature.
#[pyfunction]
#[pyo3(signature = (group, signature, workers = 1))]
fn strata(py: Python<'_>, group: &str, signature: &str, workers: usize) -> PyResult<Py<PyAny>> {
    let (g, s) = parse_pair(group, signature)?;
    let entry = py.detach(|| stratum(&g, &s, workers)).map_err(to_py)?;
    json_to_py(py, &entry.to_json())
}

/// All actions of groups of order 4(g - 1) on genus `genus`.
#[pyfunction]
#[pyo3(signature = (genus, workers = 1))]
fn classify(py: Python<'_>, genus: u64, workers: usize) -> PyResult<Py<PyAny>> {
    let report = py.detach(|| classify_genus(genus, workers)).map_err(to_py)?;
    json_to_py(py, &report.to_json())
}

/// Isotypical decomposition of the Jacobian for family `F1` or `F2`.
#[pyfunction]
fn jacobian(py: Python<'_>, family: &str, q: u32) -> PyResult<Py<PyAny>> {
    let family = family.parse().map_err(to_py)?;
    let report = decomposition_report(family, q).map_err(to_py)?;
    json_to_py(py, &report.to_json())
}

/// Restriction checks for the `ord8` or `ord6` boundary case.
#[pyfunction]
fn boundary(py: Python<'_>, q: u32, case: &str) -> PyResult<Py<PyAny>> {
    let case = case.parse().map_err(to_py)?;
    let report = boundary_vectors(q, case).map_err(to_py)?;
    json_to_py(py, &report.to_json())
}

/// The non-prime examples: `kind` is `q8` or `dihedral2`.
#[pyfunction]
fn counterexample(py: Python<'_>, kind: &str, n: u32) -> PyResult<Py<PyAny>> {
    let v = match kind {
        "q8" => counterexample_q8(n).map_err(to_py)?.to_json(),
        "dihedral2" => counterexample_dihedral2(n).map_err(to_py)?.to_json(),
        other => return Err(PyValueError::new_err(format!("unknown kind {other:?}"))),
    };
    json_to_py(py, &v)
}

/// Runs the invariant suite; returns `(name, passed, detail)` triples.
#[pyfunction]
#[pyo3(signature = (golden_dir = None, workers = 1))]
fn selftest(golden_dir: Option<PathBuf>, workers: usize) -> Vec<(String, bool, String)> {
    let dir = golden_dir.unwrap_or_else(autsurf::golden::default_dir);
    autsurf::selftest::run_selftest(&dir, workers)
        .into_iter()
        .map(|i| (i.name, i.passed, i.detail))
        .collect()
}

#[pymodule]
#[pyo3(name = "autsurf")]
fn autsurf_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PySignature>()?;
    m.add_function(wrap_pyfunction!(generating_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_classes, m)?)?;
    m.add_function(wrap_pyfunction!(strata, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian, m)?)?;
    m.add_function(wrap_pyfunction!(boundary, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}

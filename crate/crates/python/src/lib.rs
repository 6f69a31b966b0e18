//! Python bindings: the algebra descriptors and multiplicity data as
//! classes, plus the classification, enumeration and matrix-check
//! pipelines with their canonical JSON encodings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use nilorbit::algebra::{self, AlgebraDescriptor, MultiplicityDatum};
use nilorbit::orbits;
use nilorbit::report::{self, ReportError};
use nilorbit::sl2rep;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn report_err(e: ReportError) -> PyErr {
    match e {
        ReportError::Invalid(msg) => PyValueError::new_err(msg),
        ReportError::Internal(msg) => PyRuntimeError::new_err(msg),
    }
}

/// A classical real Lie algebra family with its parameters.
#[pyclass(frozen, eq)]
#[derive(PartialEq, Clone)]
struct Algebra {
    inner: AlgebraDescriptor,
}

#[pymethods]
impl Algebra {
    #[new]
    #[pyo3(signature = (family, n=None, p=None, q=None))]
    fn new(family: &str, n: Option<u32>, p: Option<u32>, q: Option<u32>) -> PyResult<Self> {
        use AlgebraDescriptor::*;
        let need_n = || n.ok_or_else(|| value_err(format!("family {family} requires n")));
        let need_pq = || match (p, q) {
            (Some(p), Some(q)) => Ok((p, q)),
            _ => Err(value_err(format!("family {family} requires p and q"))),
        };
        let inner = match family {
            "sl_r" => SlR { n: need_n()? },
            "so_r" => {
                let (p, q) = need_pq()?;
                SoR { p, q }
            }
            "sp_r" => SpR { n: need_n()? },
            "su" => {
                let (p, q) = need_pq()?;
                Su { p, q }
            }
            "sl_h" => SlH { n: need_n()? },
            "sp_hq" => {
                let (p, q) = need_pq()?;
                SpHq { p, q }
            }
            "so_star" => SoStar { n: need_n()? },
            "complex" => Complex,
            other => return Err(value_err(format!("unknown family `{other}`"))),
        };
        inner.validate().map_err(value_err)?;
        Ok(Algebra { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Algebra { inner: AlgebraDescriptor::from_json(text).map_err(value_err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family_name()
    }

    /// All orbit data of this algebra, zero orbit included.
    fn orbit_data(&self) -> PyResult<Vec<Datum>> {
        Ok(orbits::enumerate_orbit_data(&self.inner)
            .map_err(value_err)?
            .into_iter()
            .map(|d| Datum { inner: d })
            .collect())
    }

    fn zero_orbit(&self) -> Datum {
        Datum { inner: MultiplicityDatum::zero_orbit(&self.inner) }
    }

    fn __repr__(&self) -> String {
        format!("Algebra({})", self.inner)
    }
}

/// A multiplicity datum: the complete orbit invariant.
#[pyclass(frozen, eq)]
#[derive(PartialEq, Clone)]
struct Datum {
    inner: MultiplicityDatum,
}

#[pymethods]
impl Datum {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Datum { inner: MultiplicityDatum::from_json(text).map_err(value_err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn is_zero_orbit(&self) -> bool {
        self.inner.is_zero_orbit()
    }

    /// Signed-Young-style rendering.
    fn young(&self) -> String {
        self.inner.young_string()
    }

    /// The datum of the negated element.
    fn negate(&self, alg: &Algebra) -> Datum {
        Datum { inner: self.inner.negate(&alg.inner) }
    }

    fn __repr__(&self) -> String {
        format!("Datum({})", self.inner.to_json())
    }
}

/// Raises ValueError when the datum violates an invariant of the algebra.
#[pyfunction]
fn validate(alg: &Algebra, datum: &Datum) -> PyResult<()> {
    algebra::validate_datum(&alg.inner, &datum.inner).map_err(value_err)
}

/// `(stable, reason, detail)` for one orbit datum.
#[pyfunction]
fn negation_stable(alg: &Algebra, datum: &Datum) -> PyResult<(bool, String, String)> {
    let v = orbits::negation_stable(&alg.inner, &datum.inner).map_err(value_err)?;
    Ok((v.stable, v.reason.to_string(), v.detail))
}

/// `"no_gibbs_states"` or `"not_determined"`.
#[pyfunction]
fn gibbs_verdict(alg: &Algebra, datum: &Datum) -> PyResult<String> {
    Ok(orbits::gibbs_verdict(&alg.inner, &datum.inner).map_err(value_err)?.to_string())
}

/// JSON list of all orbit data of the algebra with verdicts attached.
#[pyfunction]
fn enumerate_json(alg: &Algebra) -> PyResult<String> {
    let rows = report::enumerate_rows(alg.inner).map_err(report_err)?;
    Ok(serde_json::to_string(&rows).expect("row serialization"))
}

/// JSON verdict row for a single datum.
#[pyfunction]
fn classify_json(alg: &Algebra, datum: &Datum) -> PyResult<String> {
    algebra::validate_datum(&alg.inner, &datum.inner).map_err(value_err)?;
    let row = report::OrbitRow::new(alg.inner, datum.inner.clone()).map_err(report_err)?;
    Ok(serde_json::to_string(&row).expect("row serialization"))
}

/// Full matrix pipeline on `{"alg":{...},"matrix":[[...]]}`; returns the
/// verdict bundle as JSON (conjugator included when one exists).
#[pyfunction]
fn matrix_check(input_json: &str) -> PyResult<String> {
    let bundle = report::matrix_check(input_json).map_err(report_err)?;
    Ok(serde_json::to_string(&bundle).expect("bundle serialization"))
}

/// Closed-form `(sigma, tau)` of the standard negation maps.
#[pyfunction]
#[pyo3(signature = (r, r_prime=None))]
fn sigma_tau_tensor_negation(r: u32, r_prime: Option<u32>) -> PyResult<(i8, i8)> {
    sl2rep::sigma_tau_tensor_negation(r, r_prime).map_err(value_err)
}

/// `(family, condition)` pairs of the stability table.
#[pyfunction]
fn table1_conditions() -> Vec<(String, String)> {
    orbits::table1_rows()
        .into_iter()
        .map(|row| (row.family.to_string(), row.condition.to_string()))
        .collect()
}

#[pymodule]
fn nilorbit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Datum>()?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(negation_stable, m)?)?;
    m.add_function(wrap_pyfunction!(gibbs_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_json, m)?)?;
    m.add_function(wrap_pyfunction!(classify_json, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_check, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_tau_tensor_negation, m)?)?;
    m.add_function(wrap_pyfunction!(table1_conditions, m)?)?;
    Ok(())
}

//! Python bindings: codes, family constructions, reports and the searches.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use crlab::code::{dual_weight_distribution, weight_distribution_auto};
use crlab::conditions::conditions_report;
use crlab::diffmat::difference_matrix;
use crlab::families::{construct, FamilyParams};
use crlab::formats::{read_gfc, write_gfc};
use crlab::regularity::syndrome_profile;
use crlab::report::code_report;
use crlab::search::{census_tsv, search_antipodal_duals, search_arcs, ArcMode};
use crlab::{Error, FieldSpec, LinearCode};

fn err(e: Error) -> PyErr {
    match e {
        Error::InvalidParameters(_) | Error::Parse { .. } | Error::BadElement { .. } | Error::NotPrime(..) => {
            PyValueError::new_err(e.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

/// A linear code over GF(q), kept as a generator matrix.
#[pyclass(name = "Code", frozen)]
struct PyCode {
    inner: LinearCode,
}

#[pymethods]
impl PyCode {
    /// Rows of canonical element codes over GF(q); dependent rows are reduced.
    #[new]
    fn new(q: u64, rows: Vec<Vec<u32>>) -> PyResult<Self> {
        let field = FieldSpec::of_order(q).map_err(err)?;
        let m = crlab::MatGF::from_rows(field, &rows).map_err(err)?;
        Ok(PyCode {
            inner: LinearCode::spanned_by(&m).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_gfc(text: &str) -> PyResult<Self> {
        let file = read_gfc(text).map_err(err)?;
        Ok(PyCode {
            inner: file.code().map_err(err)?,
        })
    }

    fn to_gfc(&self) -> String {
        write_gfc(self.inner.generator(), &[])
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    fn generator(&self) -> Vec<Vec<u32>> {
        self.inner.generator().row_vecs()
    }

    /// Same row space (not mere equivalence).
    fn same_code(&self, other: &PyCode) -> bool {
        self.inner.same_code(&other.inner)
    }

    fn dual(&self) -> PyResult<Self> {
        Ok(PyCode {
            inner: self.inner.dual().map_err(err)?,
        })
    }

    /// `{weight: count}` over the nonzero counts.
    fn weight_distribution(&self) -> PyResult<BTreeMap<usize, BigUint>> {
        Ok(weight_distribution_auto(&self.inner).map_err(err)?.sparse())
    }

    fn dual_weight_distribution(&self) -> PyResult<BTreeMap<usize, BigUint>> {
        Ok(dual_weight_distribution(&self.inner).map_err(err)?.sparse())
    }

    fn covering_radius(&self) -> PyResult<usize> {
        Ok(syndrome_profile(&self.inner).map_err(err)?.covering_radius())
    }

    /// `(b, c)` when completely regular, else `None`.
    fn intersection_array(&self) -> PyResult<Option<(Vec<u64>, Vec<u64>)>> {
        let profile = syndrome_profile(&self.inner).map_err(err)?;
        Ok(profile.complete_regularity().array().map(|ia| (ia.b.clone(), ia.c.clone())))
    }

    /// Full report as a JSON string (schema 1).
    fn report_json(&self) -> PyResult<String> {
        Ok(code_report(&self.inner).map_err(err)?.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Code([{}, {}]_{})", self.inner.n(), self.inner.k(), self.inner.q())
    }
}

/// Builds a family member and returns `(two_weight_code, cr_code, predicted_ia)`.
#[pyfunction]
#[pyo3(signature = (family, q=None, m=None, p=None, l=None, h=None, n=None))]
fn construct_family(
    family: &str,
    q: Option<u32>,
    m: Option<u32>,
    p: Option<u32>,
    l: Option<u32>,
    h: Option<u32>,
    n: Option<usize>,
) -> PyResult<(PyCode, PyCode, String)> {
    let missing = |name: &str| PyValueError::new_err(format!("{family} needs {name}"));
    let params = match family {
        "ext-hamming" => FamilyParams::ExtHamming { m: m.ok_or_else(|| missing("m"))? },
        "dm-dual" => FamilyParams::DmDual {
            p: p.ok_or_else(|| missing("p"))?,
            l: l.ok_or_else(|| missing("l"))?,
            h: h.ok_or_else(|| missing("h"))?,
        },
        "mds-dual" => FamilyParams::MdsDual {
            q: q.ok_or_else(|| missing("q"))?,
            n: n.ok_or_else(|| missing("n"))?,
        },
        "bose-bush" => FamilyParams::BoseBush { q: q.ok_or_else(|| missing("q"))? },
        "delsarte" => FamilyParams::Delsarte { q: q.ok_or_else(|| missing("q"))? },
        "denniston" => FamilyParams::Denniston {
            q: q.ok_or_else(|| missing("q"))?,
            h: h.ok_or_else(|| missing("h"))?,
        },
        other => return Err(PyValueError::new_err(format!("unknown family {other}"))),
    };
    let inst = construct(params).map_err(err)?;
    Ok((
        PyCode { inner: inst.two_weight_code },
        PyCode { inner: inst.cr_code },
        inst.predicted_ia.to_string(),
    ))
}

/// Entries of the difference matrix D(p^h, p^l).
#[pyfunction]
fn dm(p: u32, l: u32, h: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(difference_matrix(p, l, h).map_err(err)?.entries().to_vec())
}

/// `(exists, count)`; `count` is `None` unless `count=True`.
#[pyfunction]
#[pyo3(signature = (q, size, count=false))]
fn arcs(q: u32, size: usize, count: bool) -> PyResult<(bool, Option<u64>)> {
    let mode = if count { ArcMode::Count } else { ArcMode::Exists };
    let s = search_arcs(q, size, mode).map_err(err)?;
    Ok((s.exists, s.count))
}

/// Census table (TSV) of antipodal two-weight [n <= n_max, r]_q codes.
#[pyfunction]
fn classify(q: u32, r: usize, n_max: usize) -> PyResult<String> {
    Ok(census_tsv(&search_antipodal_duals(q, r, n_max, false).map_err(err)?))
}

/// Conditions report for an antipodal (n, N, {d, n})_q code, as JSON.
#[pyfunction]
#[pyo3(signature = (q, n, big_n, d, k=None, s=1))]
fn conditions(q: u64, n: u64, big_n: u128, d: u64, k: Option<u32>, s: u64) -> String {
    serde_json::to_string(&conditions_report(q, n, big_n, k, d, s)).expect("serializable")
}

#[pymodule]
fn pycrlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCode>()?;
    m.add_function(wrap_pyfunction!(construct_family, m)?)?;
    m.add_function(wrap_pyfunction!(dm, m)?)?;
    m.add_function(wrap_pyfunction!(arcs, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(conditions, m)?)?;
    Ok(())
}

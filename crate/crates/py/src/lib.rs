//! Python bindings. Polynomials and matrix tuples are wrapped; certificates
//! cross the boundary as objects that can be verified and dumped to JSON.

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

use nczero::cert::{
    hom_ideal_membership, in_univariate_subalgebra, left_ideal_membership, span_membership, trace_membership,
    Certificate, CompositionOutcome, EigenSearch, LinearAnswer, Membership, SpanOutcome, SpanSearch, TraceOutcome,
};
use nczero::eval::{self, MatTuple};
use nczero::factor::{self, AssocBounds, AssocCertificate, DetZeroVerdict, FactorConfig};
use nczero::linalg::{bareiss, QMatrix};
use nczero::lowrank::{self, SearchConfig};
use nczero::{scalar, NcPoly};

fn err(e: nczero::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Noncommutative polynomial with rational coefficients.
#[pyclass(name = "Poly", module = "nczero", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly(NcPoly);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str, d: usize) -> PyResult<Self> {
        nczero::parse::parse(text, d).map(PyPoly).map_err(err)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    /// Degree, or None for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree().finite()
    }

    fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    fn cyclic_reduce(&self) -> PyPoly {
        PyPoly(self.0.cyclic_reduce())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}', {})", self.0, self.0.nvars())
    }

    fn __add__(&self, o: &PyPoly) -> PyResult<PyPoly> {
        self.0.checked_add(&o.0).map(PyPoly).map_err(err)
    }

    fn __sub__(&self, o: &PyPoly) -> PyResult<PyPoly> {
        self.0.checked_add(&-&o.0).map(PyPoly).map_err(err)
    }

    fn __mul__(&self, o: &PyPoly) -> PyResult<PyPoly> {
        self.0.checked_mul(&o.0).map(PyPoly).map_err(err)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-&self.0)
    }

    fn __pow__(&self, k: usize, _modulo: Option<usize>) -> PyPoly {
        PyPoly(self.0.pow(k))
    }
}

/// Tuple of square rational matrices; entries are given as strings or ints.
#[pyclass(name = "MatTuple", module = "nczero", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMatTuple(MatTuple);

fn entry(x: &Bound<'_, PyAny>) -> PyResult<nczero::Scalar> {
    if let Ok(i) = x.extract::<i64>() {
        return Ok(scalar::int(i));
    }
    if let Ok(s) = x.extract::<String>() {
        return scalar::parse(&s).map_err(err);
    }
    Err(PyTypeError::new_err("matrix entries must be int or str like '3/4'"))
}

fn rows_of(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(scalar::render).collect()).collect()
}

#[pymethods]
impl PyMatTuple {
    #[new]
    fn new(matrices: Vec<Vec<Vec<Bound<'_, PyAny>>>>) -> PyResult<Self> {
        let mats = matrices
            .iter()
            .map(|m| {
                let rows = m.iter().map(|r| r.iter().map(entry).collect::<PyResult<Vec<_>>>()).collect::<PyResult<_>>()?;
                QMatrix::from_rows(rows).map_err(err)
            })
            .collect::<PyResult<Vec<_>>>()?;
        MatTuple::new(mats).map(PyMatTuple).map_err(err)
    }

    #[staticmethod]
    fn weyl(n: usize) -> PyResult<Self> {
        eval::weyl_pair(n).map(PyMatTuple).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        MatTuple::from_json(text).map(PyMatTuple).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    fn matrices(&self) -> Vec<Vec<Vec<String>>> {
        self.0.matrices().iter().map(rows_of).collect()
    }

    fn direct_sum(&self, other: &PyMatTuple) -> PyResult<PyMatTuple> {
        self.0.direct_sum(&other.0).map(PyMatTuple).map_err(err)
    }
}

/// Self-contained, re-checkable answer of a decision procedure.
#[pyclass(name = "Certificate", module = "nczero", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCertificate {
    cert: Certificate,
    decision: &'static str,
}

fn decision_of(c: &Certificate) -> &'static str {
    match c {
        Certificate::LeftIdeal { result, .. } | Certificate::HomogeneousIdeal { result, .. } => {
            if result.is_member() {
                "member"
            } else {
                "not_member"
            }
        }
        Certificate::Tracial { .. } => "member",
        Certificate::Span { result, .. } => linear(result),
        Certificate::Composition { result, .. } => linear(result),
        Certificate::Factorization { .. } => "factorization",
        Certificate::StableAssociation { result, .. } => match result {
            AssocCertificate::Yes { .. } => "yes",
            AssocCertificate::No { .. } => "no",
            AssocCertificate::Unknown { .. } => "unknown",
        },
        Certificate::DetZero { result, .. } => match result.verdict {
            DetZeroVerdict::Yes { .. } => "yes",
            DetZeroVerdict::No { .. } => "no",
            DetZeroVerdict::Unknown => "unknown",
        },
    }
}

fn linear<W>(a: &LinearAnswer<W>) -> &'static str {
    match a {
        LinearAnswer::Coefficients { .. } => "member",
        LinearAnswer::Witness(_) => "not_member",
    }
}

fn wrap(cert: Certificate) -> PyCertificate {
    PyCertificate { decision: decision_of(&cert), cert }
}

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Certificate::from_json(text).map(wrap).map_err(err)
    }

    fn to_json(&self) -> String {
        self.cert.to_json()
    }

    /// Recomputes the claim exactly.
    fn verify(&self) -> PyResult<bool> {
        self.cert.verify().map(|v| v.is_verified()).map_err(err)
    }

    #[getter]
    fn kind(&self) -> String {
        serde_json::to_value(&self.cert).ok().and_then(|v| v["kind"].as_str().map(String::from)).unwrap_or_default()
    }

    /// "member", "not_member", "yes", "no" or "factorization".
    #[getter]
    fn decision(&self) -> &'static str {
        self.decision
    }

    fn __repr__(&self) -> String {
        format!("Certificate(kind='{}', decision='{}')", self.kind(), self.decision)
    }
}

fn unwrap_polys(fs: &[PyPoly]) -> Vec<NcPoly> {
    fs.iter().map(|p| p.0.clone()).collect()
}

fn nvars_of(fs: &[NcPoly], g: &NcPoly) -> usize {
    fs.first().map_or(g.nvars(), NcPoly::nvars)
}

/// Exact value `f(X)` as rows of rational strings.
#[pyfunction]
fn evaluate(f: &PyPoly, x: &PyMatTuple) -> PyResult<Vec<Vec<String>>> {
    eval::eval(&f.0, &x.0).map(|m| rows_of(&m)).map_err(err)
}

/// Exact rank of `f(X)`.
#[pyfunction]
fn rank(f: &PyPoly, x: &PyMatTuple) -> PyResult<usize> {
    eval::eval(&f.0, &x.0).map(|m| bareiss(&m).rank).map_err(err)
}

/// True iff `f` vanishes on all n x n matrices.
#[pyfunction]
fn pi_test(f: &PyPoly, n: usize) -> PyResult<bool> {
    eval::pi_test(&f.0, n).map_err(err)
}

#[pyfunction]
fn standard_poly(k: usize) -> PyResult<PyPoly> {
    eval::standard_poly(k).map(PyPoly).map_err(err)
}

#[pyfunction]
fn member_left(fs: Vec<PyPoly>, g: &PyPoly) -> PyResult<PyCertificate> {
    let fs = unwrap_polys(&fs);
    let result = left_ideal_membership(&fs, &g.0).map_err(err)?;
    Ok(wrap(Certificate::LeftIdeal { d: nvars_of(&fs, &g.0), generators: fs, target: g.0.clone(), result }))
}

#[pyfunction]
fn member_hom(fs: Vec<PyPoly>, g: &PyPoly) -> PyResult<PyCertificate> {
    let fs = unwrap_polys(&fs);
    let result: Membership = hom_ideal_membership(&fs, &g.0).map_err(err)?;
    Ok(wrap(Certificate::HomogeneousIdeal { d: nvars_of(&fs, &g.0), generators: fs, target: g.0.clone(), result }))
}

/// Certificate on membership in span + commutators, None when neither 1 nor g is.
#[pyfunction]
fn member_trace(fs: Vec<PyPoly>, g: &PyPoly) -> PyResult<Option<PyCertificate>> {
    let fs = unwrap_polys(&fs);
    Ok(match trace_membership(&fs, &g.0).map_err(err)? {
        TraceOutcome::Member(result) => {
            Some(wrap(Certificate::Tracial { d: nvars_of(&fs, &g.0), generators: fs, target: g.0.clone(), result }))
        }
        TraceOutcome::NotMember => None,
    })
}

/// None means no weak-zero witness was found within the bounds.
#[pyfunction]
#[pyo3(signature = (fs, g, seed, n_max = 3, tries = 25))]
fn member_span(fs: Vec<PyPoly>, g: &PyPoly, seed: u64, n_max: usize, tries: usize) -> PyResult<Option<PyCertificate>> {
    let fs = unwrap_polys(&fs);
    let result = match span_membership(&fs, &g.0, SpanSearch { n_max, seed, tries }).map_err(err)? {
        SpanOutcome::Coefficients(coefficients) => LinearAnswer::Coefficients { coefficients },
        SpanOutcome::Witness(w) => LinearAnswer::Witness(w),
        SpanOutcome::Unknown { .. } => return Ok(None),
    };
    Ok(Some(wrap(Certificate::Span { d: nvars_of(&fs, &g.0), generators: fs, target: g.0.clone(), result })))
}

/// Coefficients of `g` in powers of `f` as strings, or None when `g` is not
/// in the subalgebra.
#[pyfunction]
fn composition_coefficients(g: &PyPoly, f: &PyPoly) -> PyResult<Option<Vec<String>>> {
    Ok(match in_univariate_subalgebra(&g.0, &f.0, None).map_err(err)? {
        CompositionOutcome::Member(c) => Some(c.iter().map(scalar::render).collect()),
        CompositionOutcome::NotMember(_) => None,
    })
}

/// Certificate for `g in Q[f]`; non-members need an eigen-witness, searched
/// with `seed`, and give None if none is found.
#[pyfunction]
fn member_comp(g: &PyPoly, f: &PyPoly, seed: u64) -> PyResult<Option<PyCertificate>> {
    let result = match in_univariate_subalgebra(&g.0, &f.0, Some(EigenSearch::new(seed))).map_err(err)? {
        CompositionOutcome::Member(coefficients) => LinearAnswer::Coefficients { coefficients },
        CompositionOutcome::NotMember(Some(w)) => LinearAnswer::Witness(w),
        CompositionOutcome::NotMember(None) => return Ok(None),
    };
    Ok(Some(wrap(Certificate::Composition { d: f.0.nvars(), f: f.0.clone(), g: g.0.clone(), result })))
}

/// Every complete factorization, one certificate each.
#[pyfunction]
#[pyo3(signature = (f, max_degree = 6))]
fn factorize(f: &PyPoly, max_degree: usize) -> PyResult<Vec<PyCertificate>> {
    let all = factor::factor(&f.0, FactorConfig { max_degree }).map_err(err)?;
    Ok(all
        .into_iter()
        .map(|result| wrap(Certificate::Factorization { d: f.0.nvars(), input: f.0.clone(), result }))
        .collect())
}

/// The factors of each factorization as polynomials.
#[pyfunction]
#[pyo3(signature = (f, max_degree = 6))]
fn factors(f: &PyPoly, max_degree: usize) -> PyResult<Vec<Vec<PyPoly>>> {
    let all = factor::factor(&f.0, FactorConfig { max_degree }).map_err(err)?;
    Ok(all.iter().map(|fz| fz.polys().into_iter().map(PyPoly).collect()).collect())
}

#[pyfunction]
#[pyo3(signature = (p, q, seed = 0))]
fn stable_assoc(p: &PyPoly, q: &PyPoly, seed: u64) -> PyResult<PyCertificate> {
    let result = factor::stable_assoc(&p.0, &q.0, AssocBounds::new(seed)).map_err(err)?;
    Ok(wrap(Certificate::StableAssociation { d: p.0.nvars(), p: p.0.clone(), q: q.0.clone(), result }))
}

#[pyfunction]
#[pyo3(signature = (fs, g, seed = 0))]
fn detzero(fs: Vec<PyPoly>, g: &PyPoly, seed: u64) -> PyResult<PyCertificate> {
    let fs = unwrap_polys(&fs);
    let result = factor::detzero_inclusion(&fs, &g.0, AssocBounds::new(seed), FactorConfig::default()).map_err(err)?;
    Ok(wrap(Certificate::DetZero { d: nvars_of(&fs, &g.0), generators: fs, target: g.0.clone(), result }))
}

/// Returns `(objective, exact_point_or_None, exact_rank_or_None)`.
#[pyfunction]
#[pyo3(signature = (f, n, rank, seed, restarts = 20))]
fn lowrank_search(
    f: &PyPoly,
    n: usize,
    rank: usize,
    seed: u64,
    restarts: usize,
) -> PyResult<(f64, Option<PyMatTuple>, Option<usize>)> {
    let cfg = SearchConfig { restarts, ..SearchConfig::new(rank, seed) };
    let r = lowrank::lowrank_search(&f.0, n, &cfg).map_err(err)?;
    let (x, k) = match r.exact {
        Some((x, k)) => (Some(PyMatTuple(x)), Some(k)),
        None => (None, None),
    };
    Ok((r.objective, x, k))
}

/// Ranks of `1 - [x1,[x1,x2]^2]` at the known witness pairs.
#[pyfunction]
fn known_witness_ranks() -> PyResult<Vec<usize>> {
    lowrank::verify_known_witnesses().map(|r| r.ranks).map_err(err)
}

#[pymodule(name = "nczero")]
pub fn nczero_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyMatTuple>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(pi_test, m)?)?;
    m.add_function(wrap_pyfunction!(standard_poly, m)?)?;
    m.add_function(wrap_pyfunction!(member_left, m)?)?;
    m.add_function(wrap_pyfunction!(member_hom, m)?)?;
    m.add_function(wrap_pyfunction!(member_trace, m)?)?;
    m.add_function(wrap_pyfunction!(member_span, m)?)?;
    m.add_function(wrap_pyfunction!(member_comp, m)?)?;
    m.add_function(wrap_pyfunction!(composition_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(factors, m)?)?;
    m.add_function(wrap_pyfunction!(stable_assoc, m)?)?;
    m.add_function(wrap_pyfunction!(detzero, m)?)?;
    m.add_function(wrap_pyfunction!(lowrank_search, m)?)?;
    m.add_function(wrap_pyfunction!(known_witness_ranks, m)?)?;
    Ok(())
}

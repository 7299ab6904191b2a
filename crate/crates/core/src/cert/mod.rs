//! Membership procedures for ideals and subspaces of the free algebra, each
//! returning either an algebraic combination or a matrix witness that can be
//! re-checked independently.

mod comp;
mod file;
mod hom;
mod left;
mod span;
mod trace;
mod weak;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::MatTuple;
use crate::linalg::{QMatrix, QVector};
use crate::poly::NcPoly;
use crate::scalar::Scalar;

pub use comp::{in_univariate_subalgebra, CompositionOutcome, EigenSearch, EigenWitness};
pub use file::{Certificate, LinearAnswer, Verification};
pub use hom::{hom_ideal_membership, nilpotency_index};
pub use left::{gns_witness, left_ideal_membership};
pub use span::{span_membership, SpanOutcome, SpanSearch};
pub use trace::{trace_membership, TraceBranch, TraceCertificate, TraceOutcome};
pub use weak::{weak_basis, WeakBasis};

/// One summand `left * f[generator] * right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofactorTerm {
    pub generator: usize,
    pub left: NcPoly,
    pub right: NcPoly,
}

/// `sum left_k * f[j_k] * right_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Combination {
    pub terms: Vec<CofactorTerm>,
}

impl Combination {
    pub fn expand(&self, fs: &[NcPoly], nvars: usize) -> Result<NcPoly> {
        let mut acc = NcPoly::zero(nvars);
        for t in &self.terms {
            let f = fs.get(t.generator).ok_or_else(|| {
                Error::Format(format!("cofactor refers to generator {} of {}", t.generator, fs.len()))
            })?;
            acc = acc.checked_add(&t.left.checked_mul(f)?.checked_mul(&t.right)?)?;
        }
        Ok(acc)
    }

    /// True when every right cofactor is the constant 1.
    pub fn is_left(&self) -> bool {
        self.terms.iter().all(|t| t.right == NcPoly::one(t.right.nvars()))
    }

    pub(crate) fn retarget(&mut self, d: usize) -> Result<()> {
        for t in &mut self.terms {
            t.left = t.left.with_nvars(d)?;
            t.right = t.right.with_nvars(d)?;
        }
        Ok(())
    }
}

/// Exact value of a polynomial at a witness, at the granularity the witness
/// is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Matrix(QMatrix),
    Vector(#[serde(with = "crate::serde_util::rational_vec")] QVector),
    Scalar(#[serde(with = "crate::serde_util::rational")] Scalar),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        match self {
            Value::Matrix(m) => m.is_zero(),
            Value::Vector(v) => v.iter().all(Zero::is_zero),
            Value::Scalar(s) => s.is_zero(),
        }
    }
}

/// Matrix point separating a target from a set of generators.
///
/// With `v` only, values are `f(X) v`; with `u` and `v`, `u^t f(X) v`;
/// with neither, `f(X)` itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub point: MatTuple,
    #[serde(default, with = "crate::serde_util::opt_rational_vec", skip_serializing_if = "Option::is_none")]
    pub u: Option<QVector>,
    #[serde(default, with = "crate::serde_util::opt_rational_vec", skip_serializing_if = "Option::is_none")]
    pub v: Option<QVector>,
    pub generator_values: Vec<Value>,
    pub target_value: Value,
}

impl Witness {
    pub fn value_of(&self, f: &NcPoly) -> Result<Value> {
        let x = &self.point;
        Ok(match (&self.u, &self.v) {
            (None, None) => Value::Matrix(crate::eval::eval(f, x)?),
            (None, Some(v)) => Value::Vector(crate::eval::eval_apply(f, x, v)?),
            (Some(u), Some(v)) => {
                let w = crate::eval::eval_apply(f, x, v)?;
                if u.len() != w.len() {
                    return Err(Error::DimensionMismatch("pairing vector length".into()));
                }
                Value::Scalar(u.iter().zip(&w).map(|(a, b)| a * b).sum())
            }
            (Some(_), None) => return Err(Error::Format("witness has u without v".into())),
        })
    }

    /// Builds the witness, filling in the exact values.
    pub fn at(point: MatTuple, u: Option<QVector>, v: Option<QVector>, fs: &[NcPoly], g: &NcPoly) -> Result<Self> {
        let mut w = Witness { point, u, v, generator_values: vec![], target_value: Value::Scalar(Scalar::from_integer(0.into())) };
        w.generator_values = fs.iter().map(|f| w.value_of(f)).collect::<Result<_>>()?;
        w.target_value = w.value_of(g)?;
        Ok(w)
    }

    /// Recomputes every value; true iff they match the stored ones, all
    /// generator values vanish and the target value does not.
    pub fn separates(&self, fs: &[NcPoly], g: &NcPoly) -> Result<bool> {
        if fs.len() != self.generator_values.len() {
            return Ok(false);
        }
        for (f, stored) in fs.iter().zip(&self.generator_values) {
            let val = self.value_of(f)?;
            if &val != stored || !val.is_zero() {
                return Ok(false);
            }
        }
        let t = self.value_of(g)?;
        Ok(t == self.target_value && !t.is_zero())
    }
}

/// Answer of a membership query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum Membership {
    Combination(Combination),
    Witness(Witness),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Combination(_))
    }
}

pub(crate) fn check_nvars(fs: &[NcPoly], g: &NcPoly) -> Result<usize> {
    let d = g.nvars();
    if let Some(f) = fs.iter().find(|f| f.nvars() != d) {
        return Err(Error::DimensionMismatch(format!(
            "generator in {} variables, target in {d}",
            f.nvars()
        )));
    }
    Ok(d)
}

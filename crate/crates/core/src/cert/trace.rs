use serde::{Deserialize, Serialize};

use super::check_nvars;
use crate::error::{Error, Result};
use crate::linalg::EchelonSpan;
use crate::poly::NcPoly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceBranch {
    /// `1 = sum lambda_j f_j + commutators`: the tracial zero set is empty.
    OneInSpan,
    /// `g = sum lambda_j f_j + commutators`.
    GInSpan,
}

/// `target = sum lambdas[j] f_j + sum [p_k, q_k]`, where the target is 1 or
/// `g` according to the branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCertificate {
    pub branch: TraceBranch,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub lambdas: Vec<Scalar>,
    pub commutators: Vec<(NcPoly, NcPoly)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceOutcome {
    Member(TraceCertificate),
    NotMember,
}

impl TraceCertificate {
    pub fn target(&self, g: &NcPoly) -> NcPoly {
        match self.branch {
            TraceBranch::OneInSpan => NcPoly::one(g.nvars()),
            TraceBranch::GInSpan => g.clone(),
        }
    }

    /// Symbolic re-check of the identity.
    pub fn verify(&self, fs: &[NcPoly], g: &NcPoly) -> Result<bool> {
        let d = check_nvars(fs, g)?;
        if self.lambdas.len() != fs.len() {
            return Ok(false);
        }
        let mut residual = self.target(g);
        for (l, f) in self.lambdas.iter().zip(fs) {
            residual.add_scaled(f, &-l.clone());
        }
        let mut sum = NcPoly::zero(d);
        for (p, q) in &self.commutators {
            sum = sum.checked_add(&p.checked_mul(q)?.checked_add(&-q.checked_mul(p)?)?)?;
        }
        Ok(residual.cyclic_reduce().is_zero() && sum == residual)
    }

    pub(crate) fn retarget(&mut self, d: usize) -> Result<()> {
        for (p, q) in &mut self.commutators {
            *p = p.with_nvars(d)?;
            *q = q.with_nvars(d)?;
        }
        Ok(())
    }
}

/// Writes a sum of commutators `r` (cyclic reduction zero) as an explicit
/// list: each word `w1 w2` whose representative is `w2 w1` gives `[c w1, w2]`.
fn commutator_chain(r: &NcPoly) -> Vec<(NcPoly, NcPoly)> {
    let d = r.nvars();
    let mut out = Vec::new();
    for (w, c) in r.terms() {
        let (_, k) = w.min_rotation();
        if k == 0 {
            continue;
        }
        out.push((NcPoly::monomial(d, w.prefix(k), c.clone()), NcPoly::word(d, w.suffix_from(k))));
    }
    out
}

/// Decides whether the tracial zero set of `fs` lies in that of `g`, i.e.
/// whether 1 or `g` is a linear combination of the `f_j` and commutators.
pub fn trace_membership(fs: &[NcPoly], g: &NcPoly) -> Result<TraceOutcome> {
    let d = check_nvars(fs, g)?;
    let mut span = EchelonSpan::new(true);
    for f in fs {
        span.insert(&f.cyclic_reduce().to_sparse());
    }
    for (branch, target) in [(TraceBranch::OneInSpan, NcPoly::one(d)), (TraceBranch::GInSpan, g.clone())] {
        let red = span.reduce(&target.cyclic_reduce().to_sparse());
        if !red.remainder.is_empty() {
            continue;
        }
        let mut lambdas = vec![Scalar::from_integer(0.into()); fs.len()];
        for (j, c) in red.combo {
            lambdas[j] = c;
        }
        let mut residual = target;
        for (l, f) in lambdas.iter().zip(fs) {
            residual.add_scaled(f, &-l.clone());
        }
        let cert = TraceCertificate { branch, lambdas, commutators: commutator_chain(&residual) };
        if !cert.verify(fs, g)? {
            return Err(Error::Internal("tracial certificate fails its own check".into()));
        }
        return Ok(TraceOutcome::Member(cert));
    }
    Ok(TraceOutcome::NotMember)
}

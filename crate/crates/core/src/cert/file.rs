use serde::{Deserialize, Serialize};

use super::comp::EigenWitness;
use super::hom::nilpotency_index;
use super::trace::TraceCertificate;
use super::{Membership, Witness};
use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::scalar::Scalar;

/// Answer of a linear-span style query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum LinearAnswer<W> {
    Coefficients {
        #[serde(with = "crate::serde_util::rational_vec")]
        coefficients: Vec<Scalar>,
    },
    Witness(W),
}

/// Self-contained record of a decided query, re-checkable by [`Certificate::verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    LeftIdeal { d: usize, generators: Vec<NcPoly>, target: NcPoly, result: Membership },
    HomogeneousIdeal { d: usize, generators: Vec<NcPoly>, target: NcPoly, result: Membership },
    Tracial { d: usize, generators: Vec<NcPoly>, target: NcPoly, result: TraceCertificate },
    Span { d: usize, generators: Vec<NcPoly>, target: NcPoly, result: LinearAnswer<Witness> },
    Composition { d: usize, f: NcPoly, g: NcPoly, result: LinearAnswer<EigenWitness> },
    Factorization { d: usize, input: NcPoly, result: crate::factor::Factorization },
    StableAssociation { d: usize, p: NcPoly, q: NcPoly, result: crate::factor::AssocCertificate },
    DetZero { d: usize, generators: Vec<NcPoly>, target: NcPoly, result: crate::factor::DetZeroCertificate },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Verified,
    Failed(String),
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        *self == Verification::Verified
    }

    fn check(ok: bool, why: &str) -> Self {
        if ok {
            Verification::Verified
        } else {
            Verification::Failed(why.to_string())
        }
    }
}

fn retarget_all(ps: &mut [NcPoly], d: usize) -> Result<()> {
    for p in ps {
        *p = p.with_nvars(d)?;
    }
    Ok(())
}

impl Certificate {
    pub fn nvars(&self) -> usize {
        match self {
            Certificate::LeftIdeal { d, .. }
            | Certificate::HomogeneousIdeal { d, .. }
            | Certificate::Tracial { d, .. }
            | Certificate::Span { d, .. }
            | Certificate::Composition { d, .. }
            | Certificate::Factorization { d, .. }
            | Certificate::StableAssociation { d, .. }
            | Certificate::DetZero { d, .. } => *d,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut c: Certificate = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        c.retarget()?;
        Ok(c)
    }

    /// Reinterprets every polynomial in the declared variable count.
    fn retarget(&mut self) -> Result<()> {
        let d = self.nvars();
        if d == 0 {
            return Err(Error::NoVariables);
        }
        match self {
            Certificate::LeftIdeal { generators, target, result, .. }
            | Certificate::HomogeneousIdeal { generators, target, result, .. } => {
                retarget_all(generators, d)?;
                *target = target.with_nvars(d)?;
                if let Membership::Combination(c) = result {
                    c.retarget(d)?;
                }
            }
            Certificate::Tracial { generators, target, result, .. } => {
                retarget_all(generators, d)?;
                *target = target.with_nvars(d)?;
                result.retarget(d)?;
            }
            Certificate::Span { generators, target, .. } => {
                retarget_all(generators, d)?;
                *target = target.with_nvars(d)?;
            }
            Certificate::Composition { f, g, .. } => {
                *f = f.with_nvars(d)?;
                *g = g.with_nvars(d)?;
            }
            Certificate::Factorization { input, result, .. } => {
                *input = input.with_nvars(d)?;
                result.retarget(d)?;
            }
            Certificate::StableAssociation { p, q, result, .. } => {
                *p = p.with_nvars(d)?;
                *q = q.with_nvars(d)?;
                result.retarget(d)?;
            }
            Certificate::DetZero { generators, target, result, .. } => {
                retarget_all(generators, d)?;
                *target = target.with_nvars(d)?;
                result.retarget(d)?;
            }
        }
        Ok(())
    }

    /// Independent exact re-check of the recorded claim.
    pub fn verify(&self) -> Result<Verification> {
        Ok(match self {
            Certificate::LeftIdeal { d, generators, target, result } => match result {
                Membership::Combination(c) => Verification::check(
                    c.is_left() && &c.expand(generators, *d)? == target,
                    "left cofactors do not reproduce the target",
                ),
                Membership::Witness(w) => Verification::check(
                    w.u.is_none() && w.v.is_some() && w.separates(generators, target)?,
                    "directional witness does not separate",
                ),
            },
            Certificate::HomogeneousIdeal { d, generators, target, result } => {
                if let Some(index) = generators.iter().position(|f| !f.is_homogeneous()) {
                    return Err(Error::NonHomogeneous { index });
                }
                match result {
                    Membership::Combination(c) => Verification::check(
                        &c.expand(generators, *d)? == target,
                        "cofactors do not reproduce the target",
                    ),
                    Membership::Witness(w) => Verification::check(
                        w.u.is_none()
                            && w.v.is_none()
                            && w.separates(generators, target)?
                            && nilpotency_index(&w.point).is_some_and(|k| k <= target.deg0() + 1),
                        "nilpotent witness does not separate",
                    ),
                }
            }
            Certificate::Tracial { generators, target, result, .. } => {
                Verification::check(result.verify(generators, target)?, "tracial identity fails")
            }
            Certificate::Span { d, generators, target, result } => match result {
                LinearAnswer::Coefficients { coefficients } => {
                    let mut acc = NcPoly::zero(*d);
                    for (c, f) in coefficients.iter().zip(generators) {
                        acc.add_scaled(f, c);
                    }
                    Verification::check(
                        coefficients.len() == generators.len() && &acc == target,
                        "linear combination does not reproduce the target",
                    )
                }
                LinearAnswer::Witness(w) => Verification::check(
                    w.u.is_some() && w.v.is_some() && w.separates(generators, target)?,
                    "weak-zero witness does not separate",
                ),
            },
            Certificate::Composition { d, f, g, result } => match result {
                LinearAnswer::Coefficients { coefficients } => {
                    let mut acc = NcPoly::zero(*d);
                    for c in coefficients.iter().rev() {
                        acc = &(&acc * f) + &NcPoly::constant(*d, c.clone());
                    }
                    Verification::check(&acc == g, "power combination does not reproduce the target")
                }
                LinearAnswer::Witness(w) => Verification::check(w.verify(f, g)?, "eigen-witness fails"),
            },
            Certificate::Factorization { input, result, .. } => {
                Verification::check(result.verify(input)?, "factors do not multiply back")
            }
            Certificate::StableAssociation { p, q, result, .. } => {
                Verification::check(result.verify(p, q)?, "association certificate fails")
            }
            Certificate::DetZero { generators, target, result, .. } => {
                Verification::check(result.verify(generators, target)?, "determinantal certificate fails")
            }
        })
    }
}

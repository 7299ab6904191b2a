//! Factorisation into irreducibles, stable association and the
//! determinantal-zero inclusion test built on both.

mod assoc;
mod detzero;
mod params;
mod split;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::scalar::Scalar;

pub use assoc::{grid_mul, stable_assoc, AssocBounds, AssocCertificate, Grid, Side};
pub use detzero::{detzero_inclusion, DetZeroCertificate, DetZeroVerdict, PairCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Polynomials above this degree are not searched for splits.
    pub max_degree: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { max_degree: 6 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Irreducibility {
    /// Every degree split was searched exhaustively.
    Certified { bound: usize },
    /// Degree above the bound, or a split system had no decidable form.
    Unverified { bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub poly: NcPoly,
    pub irreducibility: Irreducibility,
}

/// `unit * factors[0] * factors[1] * ...`, each factor monic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(with = "crate::serde_util::rational")]
    pub unit: Scalar,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn polys(&self) -> Vec<NcPoly> {
        self.factors.iter().map(|f| f.poly.clone()).collect()
    }

    pub fn product(&self, nvars: usize) -> Result<NcPoly> {
        let mut acc = NcPoly::constant(nvars, self.unit.clone());
        for f in &self.factors {
            acc = acc.checked_mul(&f.poly)?;
        }
        Ok(acc)
    }

    pub fn is_certified(&self) -> bool {
        self.factors.iter().all(|f| matches!(f.irreducibility, Irreducibility::Certified { .. }))
    }

    /// Product check; irreducibility claims are not re-derived.
    pub fn verify(&self, input: &NcPoly) -> Result<bool> {
        Ok(self.factors.iter().all(|f| !f.poly.is_constant()) && &self.product(input.nvars())? == input)
    }

    pub(crate) fn retarget(&mut self, d: usize) -> Result<()> {
        for f in &mut self.factors {
            f.poly = f.poly.with_nvars(d)?;
        }
        Ok(())
    }
}

struct Factorer {
    cfg: FactorConfig,
    memo: HashMap<NcPoly, Vec<Vec<Factor>>>,
}

impl Factorer {
    fn all(&mut self, p: &NcPoly) -> Vec<Vec<Factor>> {
        if let Some(hit) = self.memo.get(p) {
            return hit.clone();
        }
        let bound = self.cfg.max_degree;
        let leaf = |irreducibility| vec![vec![Factor { poly: p.clone(), irreducibility }]];
        let out = if p.deg0() > bound {
            leaf(Irreducibility::Unverified { bound })
        } else if p.deg0() == 1 {
            leaf(Irreducibility::Certified { bound })
        } else {
            let s = split::splits(p);
            if s.pairs.is_empty() {
                leaf(if s.complete { Irreducibility::Certified { bound } } else { Irreducibility::Unverified { bound } })
            } else {
                let mut out: Vec<Vec<Factor>> = Vec::new();
                for (g, h) in &s.pairs {
                    let hs = self.all(h);
                    for fg in self.all(g) {
                        for fh in &hs {
                            let cand: Vec<Factor> = fg.iter().chain(fh).cloned().collect();
                            if !out.iter().any(|o| same_polys(o, &cand)) {
                                out.push(cand);
                            }
                        }
                    }
                }
                out
            }
        };
        self.memo.insert(p.clone(), out.clone());
        out
    }
}

fn same_polys(a: &[Factor], b: &[Factor]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.poly == y.poly)
}

/// All complete factorisations of `f` found by the split search, each with
/// monic factors. A nonzero constant has the single empty factorisation.
pub fn factor(f: &NcPoly, cfg: FactorConfig) -> Result<Vec<Factorization>> {
    if f.is_zero() {
        return Err(Error::Precondition("the zero polynomial has no factorisation".into()));
    }
    let (unit, monic) = f.make_monic();
    if monic.is_constant() {
        return Ok(vec![Factorization { unit, factors: vec![] }]);
    }
    let mut fz = Factorer { cfg, memo: HashMap::new() };
    let mut out = Vec::new();
    for factors in fz.all(&monic) {
        let fact = Factorization { unit: unit.clone(), factors };
        if !fact.verify(f)? {
            return Err(Error::Internal("factors do not multiply back".into()));
        }
        out.push(fact);
    }
    Ok(out)
}

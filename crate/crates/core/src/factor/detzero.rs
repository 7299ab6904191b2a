use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::assoc::{stable_assoc, AssocBounds, AssocCertificate};
use super::{factor, FactorConfig, Factorization};
use crate::error::{Error, Result};
use crate::poly::NcPoly;

/// Stable association outcome for one (factor of `f_j`, factor of `g`) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub generator: usize,
    pub f_factor: usize,
    pub g_factor: usize,
    pub certificate: AssocCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DetZeroVerdict {
    /// Every factor of `f_generator` is stably associated to a factor of `g`;
    /// `matching[i]` is the factor of `g` matched to factor `i`.
    Yes { generator: usize, matching: Vec<usize> },
    /// For each generator, `blocking[j]` is a factor associated to no factor of `g`.
    No { blocking: Vec<usize> },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetZeroCertificate {
    pub f_factors: Vec<Factorization>,
    pub g_factors: Factorization,
    pub pairs: Vec<PairCertificate>,
    pub verdict: DetZeroVerdict,
}

impl DetZeroCertificate {
    fn pair(&self, j: usize, i: usize, k: usize) -> Option<&AssocCertificate> {
        self.pairs
            .iter()
            .find(|p| p.generator == j && p.f_factor == i && p.g_factor == k)
            .map(|p| &p.certificate)
    }

    /// Re-checks factor products and every association certificate the
    /// verdict relies on. `Unknown` never verifies.
    pub fn verify(&self, fs: &[NcPoly], g: &NcPoly) -> Result<bool> {
        if self.f_factors.len() != fs.len() || !self.g_factors.verify(g)? {
            return Ok(false);
        }
        for (fact, f) in self.f_factors.iter().zip(fs) {
            if !fact.verify(f)? {
                return Ok(false);
            }
        }
        let gp = self.g_factors.polys();
        match &self.verdict {
            DetZeroVerdict::Yes { generator, matching } => {
                let Some(ff) = self.f_factors.get(*generator) else { return Ok(false) };
                let fp = ff.polys();
                if matching.len() != fp.len() {
                    return Ok(false);
                }
                for (i, &k) in matching.iter().enumerate() {
                    let (Some(c), Some(gk)) = (self.pair(*generator, i, k), gp.get(k)) else { return Ok(false) };
                    if !c.is_yes() || !c.verify(&fp[i], gk)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            DetZeroVerdict::No { blocking } => {
                if blocking.len() != fs.len() {
                    return Ok(false);
                }
                for (j, &i) in blocking.iter().enumerate() {
                    let Some(fi) = self.f_factors[j].polys().get(i).cloned() else { return Ok(false) };
                    for (k, gk) in gp.iter().enumerate() {
                        let Some(c) = self.pair(j, i, k) else { return Ok(false) };
                        if !c.is_no() || !c.verify(&fi, gk)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            DetZeroVerdict::Unknown => Ok(false),
        }
    }

    pub(crate) fn retarget(&mut self, d: usize) -> Result<()> {
        for f in &mut self.f_factors {
            f.retarget(d)?;
        }
        self.g_factors.retarget(d)?;
        for p in &mut self.pairs {
            p.certificate.retarget(d)?;
        }
        Ok(())
    }
}

/// Tests whether the determinantal zero set of `fs` lies in that of `g`:
/// some `f_j` has every irreducible factor stably associated to a factor of `g`.
pub fn detzero_inclusion(
    fs: &[NcPoly],
    g: &NcPoly,
    bounds: AssocBounds,
    cfg: FactorConfig,
) -> Result<DetZeroCertificate> {
    if fs.is_empty() {
        return Err(Error::Precondition("at least one generator is required".into()));
    }
    if g.is_constant() || fs.iter().any(NcPoly::is_constant) {
        return Err(Error::Precondition("inputs must be nonconstant".into()));
    }
    let first = |p: &NcPoly| -> Result<Factorization> {
        factor(p, cfg)?.into_iter().next().ok_or_else(|| Error::Internal("no factorisation".into()))
    };
    let g_factors = first(g)?;
    let f_factors = fs.iter().map(first).collect::<Result<Vec<_>>>()?;
    let gp = g_factors.polys();

    let mut memo: BTreeMap<(String, String), AssocCertificate> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut yes: Option<(usize, Vec<usize>)> = None;
    let mut blocking: Vec<Option<usize>> = vec![None; fs.len()];
    for (j, ff) in f_factors.iter().enumerate() {
        let mut matching = Vec::new();
        for (i, fi) in ff.polys().iter().enumerate() {
            let mut matched = None;
            let mut all_no = true;
            for (k, gk) in gp.iter().enumerate() {
                let key = (fi.to_string(), gk.to_string());
                let cert = match memo.get(&key) {
                    Some(c) => c.clone(),
                    None => {
                        let c = stable_assoc(fi, gk, bounds)?;
                        memo.insert(key, c.clone());
                        c
                    }
                };
                all_no &= cert.is_no();
                if cert.is_yes() && matched.is_none() {
                    matched = Some(k);
                }
                pairs.push(PairCertificate { generator: j, f_factor: i, g_factor: k, certificate: cert });
            }
            if all_no && blocking[j].is_none() {
                blocking[j] = Some(i);
            }
            matching.push(matched);
        }
        if yes.is_none() && matching.iter().all(Option::is_some) {
            yes = Some((j, matching.into_iter().map(Option::unwrap).collect()));
        }
    }
    let verdict = if let Some((generator, matching)) = yes {
        DetZeroVerdict::Yes { generator, matching }
    } else if blocking.iter().all(Option::is_some) {
        DetZeroVerdict::No { blocking: blocking.into_iter().map(Option::unwrap).collect() }
    } else {
        DetZeroVerdict::Unknown
    };
    let cert = DetZeroCertificate { f_factors, g_factors, pairs, verdict };
    if cert.verdict != DetZeroVerdict::Unknown && !cert.verify(fs, g)? {
        return Err(Error::Internal("determinantal certificate fails its own check".into()));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> NcPoly {
        parse(s, 2).unwrap()
    }

    #[test]
    fn examples() {
        let b = AssocBounds::new(0);
        let c = detzero_inclusion(&[p("x1")], &p("x1*x2*x1 + x1"), b, FactorConfig::default()).unwrap();
        assert!(matches!(c.verdict, DetZeroVerdict::Yes { generator: 0, .. }));
        let c = detzero_inclusion(&[p("x1")], &p("x2"), b, FactorConfig::default()).unwrap();
        assert!(matches!(c.verdict, DetZeroVerdict::No { .. }));
        assert!(c.verify(&[p("x1")], &p("x2")).unwrap());
    }
}

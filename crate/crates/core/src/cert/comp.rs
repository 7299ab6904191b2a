use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{eval, eval_apply, MatTuple};
use crate::linalg::{kernel, rref, EchelonSpan, QMatrix, QVector};
use crate::poly::NcPoly;
use crate::roots::{char_poly, rational_roots};
use crate::sample::Sampler;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EigenSearch {
    pub seed: u64,
    pub samples: usize,
    pub n_max: usize,
}

impl EigenSearch {
    pub fn new(seed: u64) -> Self {
        EigenSearch { seed, samples: 100, n_max: 3 }
    }
}

/// `f(X) v = eigenvalue * v` while `g(X) v` is not a multiple of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenWitness {
    pub point: MatTuple,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub vector: QVector,
    #[serde(with = "crate::serde_util::rational")]
    pub eigenvalue: Scalar,
}

impl EigenWitness {
    pub fn verify(&self, f: &NcPoly, g: &NcPoly) -> Result<bool> {
        let v = &self.vector;
        if v.len() != self.point.n() || v.iter().all(Zero::is_zero) {
            return Ok(false);
        }
        let fv = eval_apply(f, &self.point, v)?;
        if fv.iter().zip(v).any(|(a, b)| a != &(b * &self.eigenvalue)) {
            return Ok(false);
        }
        let gv = eval_apply(g, &self.point, v)?;
        Ok(rref(&QMatrix::from_columns(&[v.clone(), gv], v.len())).rank() == 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompositionOutcome {
    /// `g = sum coefficients[i] f^i`.
    Member(Vec<Scalar>),
    NotMember(Option<EigenWitness>),
}

/// Decides `g in Q[f]`. When `search` is given, non-members get a sampled
/// eigenvector of `f(X)` that is not an eigenvector of `g(X)`.
pub fn in_univariate_subalgebra(g: &NcPoly, f: &NcPoly, search: Option<EigenSearch>) -> Result<CompositionOutcome> {
    let d = g.nvars();
    if f.nvars() != d {
        return Err(Error::DimensionMismatch("f and g in different variable counts".into()));
    }
    if f.is_constant() {
        return Ok(if g.is_constant() {
            CompositionOutcome::Member(vec![g.constant_term()])
        } else {
            CompositionOutcome::NotMember(None)
        });
    }
    let m = g.deg0() / f.deg0();
    let mut span = EchelonSpan::new(true);
    let mut power = NcPoly::one(d);
    for _ in 0..=m {
        span.insert(&power.to_sparse());
        power = &power * f;
    }
    let red = span.reduce(&g.to_sparse());
    if red.remainder.is_empty() {
        let mut coeffs = vec![Scalar::zero(); m + 1];
        for (i, c) in red.combo {
            coeffs[i] = c;
        }
        let mut check = NcPoly::zero(d);
        for c in coeffs.iter().rev() {
            check = &(&check * f) + &NcPoly::constant(d, c.clone());
        }
        if &check != g {
            return Err(Error::Internal("power coefficients do not reproduce the target".into()));
        }
        return Ok(CompositionOutcome::Member(coeffs));
    }
    let witness = match search {
        Some(s) => eigen_search(g, f, s)?,
        None => None,
    };
    Ok(CompositionOutcome::NotMember(witness))
}

fn parallel(v: &QVector, w: &QVector) -> bool {
    rref(&QMatrix::from_columns(&[v.clone(), w.clone()], v.len())).rank() < 2
}

fn eigen_search(g: &NcPoly, f: &NcPoly, s: EigenSearch) -> Result<Option<EigenWitness>> {
    let d = g.nvars();
    let mut sampler = Sampler::new(s.seed);
    // scalar points seen so far, keyed by the value of f
    let mut points: BTreeMap<Scalar, (MatTuple, Scalar)> = BTreeMap::new();
    for _ in 0..s.samples {
        for n in 1..=s.n_max {
            let x = sampler.tuple(n, d);
            if n == 1 {
                let fx = eval(f, &x)?[(0, 0)].clone();
                let gx = eval(g, &x)?[(0, 0)].clone();
                match points.get(&fx) {
                    Some((y, gy)) if gy != &gx => {
                        let w = EigenWitness {
                            point: y.direct_sum(&x)?,
                            vector: vec![Scalar::from_integer(1.into()); 2],
                            eigenvalue: fx,
                        };
                        if w.verify(f, g)? {
                            return Ok(Some(w));
                        }
                    }
                    Some(_) => {}
                    None => {
                        points.insert(fx, (x, gx));
                    }
                }
                continue;
            }
            let fx = eval(f, &x)?;
            let Some(roots) = rational_roots(&char_poly(&fx)) else { continue };
            for lambda in roots {
                let shifted = &fx - &QMatrix::scalar(n, &lambda);
                let basis = kernel(&shifted);
                let mut candidates = basis.clone();
                if basis.len() > 1 {
                    candidates.push((0..n).map(|i| basis.iter().map(|b| b[i].clone()).sum()).collect());
                }
                for v in candidates {
                    if !parallel(&v, &eval_apply(g, &x, &v)?) {
                        let w = EigenWitness { point: x.clone(), vector: v, eigenvalue: lambda.clone() };
                        if w.verify(f, g)? {
                            return Ok(Some(w));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

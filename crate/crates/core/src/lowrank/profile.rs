use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::eval::{eval, weyl_pair, MatTuple};
use crate::linalg::{bareiss, QMatrix};
use crate::poly::NcPoly;
use crate::sample::Sampler;
use crate::scalar;

/// Where a minimum rank was attained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Candidate {
    Weyl,
    Zero,
    /// Every variable set to `c I`.
    Identity(i64),
    /// Index of the random sample at this size.
    Random(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub n: usize,
    pub min_rank: usize,
    pub attained_at: Candidate,
}

fn structured(n: usize, d: usize) -> Result<Vec<(Candidate, MatTuple)>> {
    let mut out = Vec::new();
    if d >= 2 {
        let w = weyl_pair(n)?;
        let mut mats = w.matrices().to_vec();
        mats.resize(d, QMatrix::zeros(n, n));
        out.push((Candidate::Weyl, MatTuple::new(mats)?));
    }
    out.push((Candidate::Zero, MatTuple::zero(n, d)));
    for c in [1, -1, 2] {
        let m = QMatrix::scalar(n, &scalar::int(c));
        out.push((Candidate::Identity(c), MatTuple::new(vec![m; d])?));
    }
    Ok(out)
}

/// Minimum exact rank of `f` over structured candidates and `samples`
/// seeded random points, for each size in `ns`.
pub fn rank_profile(f: &NcPoly, ns: &[usize], samples: usize, seed: u64) -> Result<Vec<ProfileRow>> {
    let d = f.nvars();
    let mut sampler = Sampler::new(seed);
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        if n == 0 {
            continue;
        }
        let mut best: Option<(usize, Candidate)> = None;
        let mut consider = |cand: Candidate, x: &MatTuple| -> Result<()> {
            let rank = bareiss(&eval(f, x)?).rank;
            if best.is_none_or(|(r, _)| rank < r) {
                best = Some((rank, cand));
            }
            Ok(())
        };
        for (cand, x) in structured(n, d)? {
            consider(cand, &x)?;
        }
        for k in 0..samples {
            let x = sampler.tuple(n, d);
            consider(Candidate::Random(k), &x)?;
        }
        let (min_rank, attained_at) = best.expect("at least the structured candidates");
        rows.push(ProfileRow { n, min_rank, attained_at });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn weyl_relation_has_rank_one_everywhere() {
        let f = parse("1 - [x1,x2]", 2).unwrap();
        let rows = rank_profile(&f, &[2, 3, 4, 5, 6], 3, 0).unwrap();
        assert!(rows.iter().all(|r| r.min_rank == 1 && r.attained_at == Candidate::Weyl));
    }

    #[test]
    fn constants_and_variables() {
        let one = parse("1", 2).unwrap();
        assert!(rank_profile(&one, &[1, 2, 3], 2, 0).unwrap().iter().all(|r| r.min_rank == r.n));
        let x = parse("x1", 1).unwrap();
        assert!(rank_profile(&x, &[1, 4], 2, 0).unwrap().iter().all(|r| r.min_rank == 0));
    }
}

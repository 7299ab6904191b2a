//! Low-rank values: exact checks of known witnesses, rank profiles over
//! sampled points, and numerical searches followed by exactification.

mod exactify;
mod witnesses;
mod profile;
mod search;
mod trace;

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::MatTuple;
use crate::poly::NcPoly;
use crate::word::Word;

pub use witnesses::{known_witnesses, verify_known_witnesses, witness_polynomial, WitnessReport};
pub use profile::{rank_profile, Candidate, ProfileRow};
pub use search::{lowrank_search, tail_objective, SearchConfig, SearchResult};
pub use trace::trace_witness_search;

/// Tuple of `d` real `n x n` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct FMatTuple {
    n: usize,
    matrices: Vec<DMatrix<f64>>,
}

impl FMatTuple {
    pub fn new(matrices: Vec<DMatrix<f64>>) -> Result<Self> {
        let n = matrices.first().map_or(0, DMatrix::nrows);
        if matrices.is_empty() || n == 0 {
            return Err(Error::Precondition("need at least one nonempty matrix".into()));
        }
        if matrices.iter().any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(Error::DimensionMismatch("matrices of different or non-square shape".into()));
        }
        if matrices.iter().any(|m| m.iter().any(|x| !x.is_finite())) {
            return Err(Error::NonFinite);
        }
        Ok(FMatTuple { n, matrices })
    }

    /// Builds from a flat coordinate vector, matrix by matrix, row-major.
    pub fn from_flat(n: usize, d: usize, xs: &[f64]) -> Self {
        let matrices = (0..d).map(|k| DMatrix::from_row_slice(n, n, &xs[k * n * n..(k + 1) * n * n])).collect();
        FMatTuple { n, matrices }
    }

    pub fn flat(&self) -> Vec<f64> {
        self.matrices.iter().flat_map(|m| m.transpose().iter().copied().collect::<Vec<_>>()).collect()
    }

    pub fn from_exact(x: &MatTuple) -> Self {
        let n = x.n();
        let matrices = x.matrices().iter().map(|m| DMatrix::from_row_slice(n, n, &m.to_f64())).collect();
        FMatTuple { n, matrices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[DMatrix<f64>] {
        &self.matrices
    }

    pub fn to_rows(&self) -> Vec<Vec<Vec<f64>>> {
        self.matrices
            .iter()
            .map(|m| (0..self.n).map(|i| (0..self.n).map(|j| m[(i, j)]).collect()).collect())
            .collect()
    }
}

impl Serialize for FMatTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            d: usize,
            matrices: Vec<Vec<Vec<f64>>>,
        }
        Repr { n: self.n, d: self.d(), matrices: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FMatTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            matrices: Vec<Vec<Vec<f64>>>,
        }
        let r = Repr::deserialize(d)?;
        let mats = r
            .matrices
            .iter()
            .map(|rows| {
                let n = rows.len();
                DMatrix::from_row_iterator(n, rows.first().map_or(0, Vec::len), rows.iter().flatten().copied())
            })
            .collect();
        FMatTuple::new(mats).map_err(serde::de::Error::custom)
    }
}

/// Floating-point evaluation, caching word products by prefix.
pub fn eval_f64(f: &NcPoly, x: &FMatTuple) -> DMatrix<f64> {
    let n = x.n;
    let mut cache: HashMap<Word, DMatrix<f64>> = HashMap::new();
    let mut out = DMatrix::zeros(n, n);
    for (w, c) in f.terms() {
        let m = word_value(w, x, &mut cache);
        out += m * crate::scalar::to_f64(c);
    }
    out
}

fn word_value(w: &Word, x: &FMatTuple, cache: &mut HashMap<Word, DMatrix<f64>>) -> DMatrix<f64> {
    if w.is_empty() {
        return DMatrix::identity(x.n, x.n);
    }
    if let Some(m) = cache.get(w) {
        return m.clone();
    }
    let k = w.len() - 1;
    let head = word_value(&w.prefix(k), x, cache);
    let m = head * &x.matrices[w.letters().next_back().expect("nonempty")];
    cache.insert(w.clone(), m.clone());
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{eval, weyl_pair};
    use crate::parse::parse;

    #[test]
    fn float_matches_exact() {
        let x = weyl_pair(4).unwrap();
        let f = parse("1 - [x1,x2] + 1/2*x1^2*x2", 2).unwrap();
        let exact = eval(&f, &x).unwrap().to_f64();
        let got = eval_f64(&f, &FMatTuple::from_exact(&x));
        for i in 0..4 {
            for j in 0..4 {
                assert!((got[(i, j)] - exact[i * 4 + j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn flat_round_trip() {
        let xs: Vec<f64> = (0..8).map(f64::from).collect();
        let t = FMatTuple::from_flat(2, 2, &xs);
        assert_eq!(t.matrices()[1][(0, 1)], 5.0);
        assert_eq!(t.flat(), xs);
    }
}

//! Seeded sampling of rational data.
//!
//! Random tuples draw entries uniformly from `{-k, ..., k} / q` (defaults
//! `k = 5`, `q = 1`); everything is driven by a ChaCha8 stream so results are
//! reproducible from the seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eval::MatTuple;
use crate::linalg::{QMatrix, QVector};
use crate::poly::NcPoly;
use crate::scalar::{self, Scalar};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryRange {
    pub k: i64,
    pub q: i64,
}

impl Default for EntryRange {
    fn default() -> Self {
        EntryRange { k: 5, q: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    pub range: EntryRange,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), range: EntryRange::default() }
    }

    pub fn with_range(seed: u64, range: EntryRange) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), range }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn scalar(&mut self) -> Scalar {
        let EntryRange { k, q } = self.range;
        scalar::frac(self.int(-k, k), q)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if s != scalar::zero() {
                return s;
            }
        }
    }

    pub fn vector(&mut self, n: usize) -> QVector {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn matrix(&mut self, n: usize) -> QMatrix {
        let rows = (0..n).map(|_| self.vector(n)).collect();
        QMatrix::from_rows(rows).expect("square")
    }

    pub fn tuple(&mut self, n: usize, d: usize) -> MatTuple {
        MatTuple::new((0..d).map(|_| self.matrix(n)).collect()).expect("valid tuple")
    }

    /// Random invertible matrix (rejection sampling).
    pub fn invertible(&mut self, n: usize) -> QMatrix {
        loop {
            let m = self.matrix(n);
            if crate::linalg::bareiss(&m).rank == n {
                return m;
            }
        }
    }

    pub fn word(&mut self, d: usize, len: usize) -> Word {
        Word::from_letters((0..len).map(|_| self.below(d)))
    }

    /// Random polynomial with up to `terms` terms of degree at most `max_deg`
    /// and small integer coefficients.
    pub fn poly(&mut self, d: usize, max_deg: usize, terms: usize) -> NcPoly {
        let mut p = NcPoly::zero(d);
        for _ in 0..terms {
            let len = self.int(0, max_deg as i64) as usize;
            let w = self.word(d, len);
            let c = scalar::int(self.int(-3, 3));
            p.add_term(w, c);
        }
        p
    }

    /// Random nonzero homogeneous polynomial of degree `deg`.
    pub fn homogeneous_poly(&mut self, d: usize, deg: usize, terms: usize) -> NcPoly {
        loop {
            let mut p = NcPoly::zero(d);
            for _ in 0..terms {
                let w = self.word(d, deg);
                p.add_term(w, scalar::int(self.int(-3, 3)));
            }
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn nonzero_poly(&mut self, d: usize, max_deg: usize, terms: usize) -> NcPoly {
        loop {
            let p = self.poly(d, max_deg, terms);
            if !p.is_zero() {
                return p;
            }
        }
    }
}

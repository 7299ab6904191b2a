use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Sparse vector keyed by an ordered coordinate set (words, monomials, ...).
pub type SparseVec<K> = BTreeMap<K, Scalar>;

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    /// Expression of this row over the inserted generators.
    combo: BTreeMap<usize, Scalar>,
}

/// Outcome of reducing a vector modulo an [`EchelonSpan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<K: Ord> {
    /// Normal form: supported on non-pivot coordinates only.
    pub remainder: SparseVec<K>,
    /// `input - remainder = sum combo[i] * generator[i]`.
    pub combo: BTreeMap<usize, Scalar>,
}

/// Incrementally built span of sparse vectors in echelon form.
///
/// The pivot of each stored row is its largest coordinate, normalised to 1.
/// Non-pivot coordinates form a basis of the quotient by the span, and
/// [`EchelonSpan::reduce`] computes normal forms in it.
#[derive(Clone, Debug)]
pub struct EchelonSpan<K: Ord> {
    rows: BTreeMap<K, Row<K>>,
    generators: usize,
    track: bool,
}

impl<K: Ord + Clone> Default for EchelonSpan<K> {
    fn default() -> Self {
        Self::new(true)
    }
}

fn axpy<K: Ord + Clone>(dst: &mut SparseVec<K>, c: &Scalar, src: &SparseVec<K>) {
    for (k, x) in src {
        let e = dst.entry(k.clone()).or_insert_with(Scalar::zero);
        *e += c * x;
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

impl<K: Ord + Clone> EchelonSpan<K> {
    /// `track` controls whether expressions over generators are recorded.
    pub fn new(track: bool) -> Self {
        EchelonSpan { rows: BTreeMap::new(), generators: 0, track }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Full reduction, processing coordinates from the largest down.
    pub fn reduce(&self, v: &SparseVec<K>) -> Reduction<K> {
        let mut work = v.clone();
        let mut remainder = SparseVec::new();
        let mut combo = BTreeMap::new();
        while let Some((k, c)) = work.pop_last() {
            match self.rows.get(&k) {
                Some(row) => {
                    let neg = -c.clone();
                    for (j, x) in row.vec.range(..k.clone()) {
                        let e = work.entry(j.clone()).or_insert_with(Scalar::zero);
                        *e += &neg * x;
                        if e.is_zero() {
                            work.remove(j);
                        }
                    }
                    if self.track {
                        axpy(&mut combo, &c, &row.combo);
                    }
                }
                None => {
                    remainder.insert(k, c);
                }
            }
        }
        Reduction { remainder, combo }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).remainder.is_empty()
    }

    /// Adds a generator; returns its index and whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> (usize, bool) {
        let idx = self.generators;
        self.generators += 1;
        let red = self.reduce(v);
        let Some((lead, lc)) = red.remainder.last_key_value().map(|(k, c)| (k.clone(), c.clone())) else {
            return (idx, false);
        };
        let inv = lc.recip();
        let vec: SparseVec<K> = red.remainder.iter().map(|(k, x)| (k.clone(), x * &inv)).collect();
        let mut combo = BTreeMap::new();
        if self.track {
            combo.insert(idx, inv.clone());
            axpy(&mut combo, &-inv, &red.combo);
        }
        debug_assert!(vec[&lead].is_one());
        self.rows.insert(lead, Row { vec, combo });
        (idx, true)
    }
}

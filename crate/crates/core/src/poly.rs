//! Noncommutative polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`,
/// which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(k) => Some(k),
            Degree::NegInfinity => None,
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(k) => write!(f, "{k}"),
            Degree::NegInfinity => write!(f, "-inf"),
        }
    }
}

/// Graded structure of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub degree: Degree,
    pub homogeneous: bool,
    /// Nonzero homogeneous components, by increasing degree.
    pub components: Vec<(usize, NcPoly)>,
}

/// Element of the free algebra `Q<x1, ..., xd>`.
///
/// Terms are kept in a `BTreeMap` keyed by [`Word`], so iteration is in
/// deglex order and zero coefficients are never stored. Two polynomials are
/// equal iff they have the same variable count and the same terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPoly {
    nvars: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero(nvars: usize) -> Self {
        NcPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(nvars, Word::empty(), c)
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for d = {nvars}");
        Self::monomial(nvars, Word::letter(i), scalar::one())
    }

    pub fn monomial(nvars: usize, w: Word, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(w, c);
        p
    }

    pub fn word(nvars: usize, w: Word) -> Self {
        Self::monomial(nvars, w, scalar::one())
    }

    /// Builds a polynomial from arbitrary terms; duplicates are summed.
    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same terms, reinterpreted with a different variable count.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if let Some(m) = self.max_letter() {
            if m >= nvars {
                return Err(Error::VariableOutOfRange { index: m + 1, nvars });
            }
        }
        Ok(NcPoly { nvars, terms: self.terms.clone() })
    }

    fn max_letter(&self) -> Option<usize> {
        self.terms.keys().filter_map(Word::max_letter).max()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        debug_assert!(w.max_letter().is_none_or(|m| m < self.nvars));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * p`.
    pub fn add_scaled(&mut self, p: &NcPoly, c: &Scalar) {
        self.check_same(p).expect("variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (w, a) in &p.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`NcPoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(w) => Degree::Finite(w.len()),
            None => Degree::NegInfinity,
        }
    }

    /// Degree, with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().finite().unwrap_or(0)
    }

    /// Deglex-largest term.
    pub fn leading_term(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Scales so that the leading coefficient is 1; returns the removed factor.
    pub fn make_monic(&self) -> (Scalar, NcPoly) {
        match self.leading_term() {
            None => (Scalar::one(), self.clone()),
            Some((_, c)) => {
                let c = c.clone();
                (c.clone(), self.scale(&c.recip()))
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        NcPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn homogeneous_component(&self, k: usize) -> NcPoly {
        NcPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest-degree homogeneous component.
    pub fn top_component(&self) -> NcPoly {
        match self.degree() {
            Degree::Finite(k) => self.homogeneous_component(k),
            Degree::NegInfinity => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(k) => lens.all(|l| l == k),
        }
    }

    pub fn structure(&self) -> Structure {
        let mut components: BTreeMap<usize, NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            components
                .entry(w.len())
                .or_insert_with(|| NcPoly::zero(self.nvars))
                .add_term(w.clone(), c.clone());
        }
        Structure {
            degree: self.degree(),
            homogeneous: components.len() <= 1,
            components: components.into_iter().collect(),
        }
    }

    /// Replaces every word by its least cyclic rotation and collects terms.
    /// The result is zero exactly when `self` is a sum of commutators.
    pub fn cyclic_reduce(&self) -> NcPoly {
        NcPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(w, c)| (w.min_rotation().0, c.clone())),
        )
    }

    fn check_same(&self, other: &NcPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check_same(other)?;
        let mut out = NcPoly::zero(self.nvars);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> NcPoly {
        let mut out = NcPoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Left multiplication by a word.
    pub fn left_mul_word(&self, w: &Word) -> NcPoly {
        NcPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(v, c)| (w.concat(v), c.clone())).collect(),
        }
    }

    /// `u * self * v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> NcPoly {
        NcPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (u.concat(w).concat(v), c.clone()))
                .collect(),
        }
    }

    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &(self * other) - &(other * self)
    }

    pub fn to_sparse(&self) -> crate::linalg::SparseVec<Word> {
        self.terms.clone()
    }

    pub fn from_sparse(nvars: usize, v: crate::linalg::SparseVec<Word>) -> NcPoly {
        let mut p = NcPoly::zero(nvars);
        for (w, c) in v {
            p.add_term(w, c);
        }
        p
    }

    /// Canonical text form, re-parsable by [`crate::parse::parse`].
    pub fn format(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{}", scalar::render(&mag))?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", scalar::render(&mag))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.checked_add(&-rhs).expect("variable count mismatch")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: NcPoly) -> NcPoly {
        &self + &rhs
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: NcPoly) -> NcPoly {
        &self - &rhs
    }
}

impl Mul for NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: NcPoly) -> NcPoly {
        &self * &rhs
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

use std::collections::BTreeMap;

use num_traits::Zero;

use super::weak::{weak_basis, WeakBasis};
use super::{check_nvars, CofactorTerm, Combination, Membership, Witness};
use crate::error::{Error, Result};
use crate::eval::MatTuple;
use crate::linalg::{EchelonSpan, QMatrix};
use crate::poly::NcPoly;
use crate::word::{words_of_length, words_up_to, Word};

/// `span{w b : b in basis, deg(w b) <= top}` with each generator tagged.
struct LeftSpan {
    basis: WeakBasis,
    delta: usize,
    span: EchelonSpan<Word>,
    tags: Vec<(usize, Word)>,
}

fn left_span(fs: &[NcPoly], g: &NcPoly) -> Result<LeftSpan> {
    let d = check_nvars(fs, g)?;
    let basis = weak_basis(fs)?;
    let delta = basis.elements.iter().map(NcPoly::deg0).chain([g.deg0()]).max().unwrap_or(0);
    let mut span = EchelonSpan::new(true);
    let mut tags = Vec::new();
    for (k, b) in basis.elements.iter().enumerate() {
        for len in 0..=(delta + 1 - b.deg0()) {
            for w in words_of_length(d, len) {
                span.insert(&b.left_mul_word(&w).to_sparse());
                tags.push((k, w));
            }
        }
    }
    Ok(LeftSpan { basis, delta, span, tags })
}

/// Decides `g in sum_j A f_j`.
///
/// Members come with left cofactors; non-members with a point `X` and a
/// vector `v` such that `f_j(X) v = 0` for all `j` and `g(X) v != 0`.
pub fn left_ideal_membership(fs: &[NcPoly], g: &NcPoly) -> Result<Membership> {
    let d = check_nvars(fs, g)?;
    let ls = left_span(fs, g)?;
    let red = ls.span.reduce(&g.to_sparse());
    if !red.remainder.is_empty() {
        return gns_from_span(fs, g, &ls).map(Membership::Witness);
    }
    let mut left: BTreeMap<usize, NcPoly> = BTreeMap::new();
    for (idx, c) in &red.combo {
        let (k, w) = &ls.tags[*idx];
        for (j, e) in ls.basis.expressions[*k].iter().enumerate() {
            if !e.is_zero() {
                left.entry(j).or_insert_with(|| NcPoly::zero(d)).add_scaled(&e.left_mul_word(w), c);
            }
        }
    }
    let comb = Combination {
        terms: left
            .into_iter()
            .filter(|(_, l)| !l.is_zero())
            .map(|(generator, left)| CofactorTerm { generator, left, right: NcPoly::one(d) })
            .collect(),
    };
    if &comb.expand(fs, d)? != g {
        return Err(Error::Internal("left cofactors do not reproduce the target".into()));
    }
    Ok(Membership::Combination(comb))
}

/// Left-regular representation on the truncated quotient `A_{<=delta} / L`,
/// with `v` the image of 1.
///
/// Errors with `Precondition` when `g` lies in the left ideal.
pub fn gns_witness(fs: &[NcPoly], g: &NcPoly) -> Result<Witness> {
    let ls = left_span(fs, g)?;
    if ls.span.contains(&g.to_sparse()) {
        return Err(Error::Precondition("target lies in the left ideal".into()));
    }
    gns_from_span(fs, g, &ls)
}

fn gns_from_span(fs: &[NcPoly], g: &NcPoly, ls: &LeftSpan) -> Result<Witness> {
    let d = g.nvars();
    let basis: Vec<Word> = words_up_to(d, ls.delta).into_iter().filter(|w| !ls.span.is_pivot(w)).collect();
    let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    let Some(&one) = index.get(&Word::empty()) else {
        return Err(Error::Internal("unit lies in the left ideal but target does not".into()));
    };
    let mut mats = Vec::with_capacity(d);
    for i in 0..d {
        let mut m = QMatrix::zeros(n, n);
        for (col, w) in basis.iter().enumerate() {
            let xw = Word::letter(i).concat(w);
            let nf = ls.span.reduce(&[(xw, crate::scalar::one())].into_iter().collect()).remainder;
            for (u, c) in nf {
                if let Some(&row) = index.get(&u) {
                    m[(row, col)] = c;
                }
            }
        }
        mats.push(m);
    }
    let point = MatTuple::new(mats)?;
    let mut v = vec![num_rational::BigRational::zero(); n];
    v[one] = crate::scalar::one();
    let w = Witness::at(point, None, Some(v), fs, g)?;
    if !w.separates(fs, g)? {
        return Err(Error::Internal("quotient representation does not separate".into()));
    }
    Ok(w)
}

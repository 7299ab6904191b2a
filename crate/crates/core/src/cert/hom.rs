use std::collections::BTreeMap;

use super::{check_nvars, CofactorTerm, Combination, Membership, Witness};
use crate::error::{Error, Result};
use crate::eval::MatTuple;
use crate::linalg::{rref, EchelonSpan, QMatrix, QVector};
use crate::poly::NcPoly;
use crate::word::{words_of_length, words_up_to, Word};

/// Decides `g in (f_1, ..., f_m)` for homogeneous `f_j`.
///
/// Non-members get a jointly nilpotent point `X` with every `f_j(X) = 0`
/// and `g(X) != 0`.
pub fn hom_ideal_membership(fs: &[NcPoly], g: &NcPoly) -> Result<Membership> {
    let d = check_nvars(fs, g)?;
    if let Some(index) = fs.iter().position(|f| !f.is_homogeneous()) {
        return Err(Error::NonHomogeneous { index });
    }
    if g.is_zero() {
        return Ok(Membership::Combination(Combination::default()));
    }
    let delta = g.deg0();
    let mut span = EchelonSpan::new(true);
    let mut tags: Vec<(usize, Word, Word)> = Vec::new();
    for (j, f) in fs.iter().enumerate() {
        if f.is_zero() || f.deg0() > delta {
            continue;
        }
        let room = delta - f.deg0();
        for a in 0..=room {
            for u in words_of_length(d, a) {
                for b in 0..=(room - a) {
                    for v in words_of_length(d, b) {
                        span.insert(&f.sandwich(&u, &v).to_sparse());
                        tags.push((j, u.clone(), v));
                    }
                }
            }
        }
    }
    let red = span.reduce(&g.to_sparse());
    if red.remainder.is_empty() {
        let mut grouped: BTreeMap<(usize, Word), NcPoly> = BTreeMap::new();
        for (idx, c) in &red.combo {
            let (j, u, v) = &tags[*idx];
            grouped
                .entry((*j, v.clone()))
                .or_insert_with(|| NcPoly::zero(d))
                .add_term(u.clone(), c.clone());
        }
        let comb = Combination {
            terms: grouped
                .into_iter()
                .filter(|(_, l)| !l.is_zero())
                .map(|((generator, v), left)| CofactorTerm { generator, left, right: NcPoly::word(d, v) })
                .collect(),
        };
        if &comb.expand(fs, d)? != g {
            return Err(Error::Internal("two-sided cofactors do not reproduce the target".into()));
        }
        return Ok(Membership::Combination(comb));
    }

    // Left-regular action on the graded quotient truncated above degree delta.
    let basis: Vec<Word> = words_up_to(d, delta).into_iter().filter(|w| !span.is_pivot(w)).collect();
    let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    let mut mats = Vec::with_capacity(d);
    for i in 0..d {
        let mut m = QMatrix::zeros(n, n);
        for (col, w) in basis.iter().enumerate() {
            if w.len() == delta {
                continue;
            }
            let xw = Word::letter(i).concat(w);
            for (u, c) in span.reduce(&[(xw, crate::scalar::one())].into_iter().collect()).remainder {
                let row = *index.get(&u).ok_or_else(|| Error::Internal("normal form outside basis".into()))?;
                m[(row, col)] = c;
            }
        }
        mats.push(m);
    }
    let w = Witness::at(MatTuple::new(mats)?, None, None, fs, g)?;
    if !w.separates(fs, g)? || nilpotency_index(&w.point).is_none_or(|k| k > delta + 1) {
        return Err(Error::Internal("graded quotient does not separate".into()));
    }
    Ok(Membership::Witness(w))
}

/// Least `k` such that every product of `k` of the matrices vanishes, or
/// `None` if the tuple is not jointly nilpotent.
pub fn nilpotency_index(x: &MatTuple) -> Option<usize> {
    let n = x.n();
    let mut image: Vec<QVector> = (0..n).map(|i| QMatrix::unit(n, i, 0).column(0)).collect();
    let mut k = 0;
    loop {
        if image.is_empty() {
            return Some(k);
        }
        let cols: Vec<QVector> = x.matrices().iter().flat_map(|m| image.iter().map(|v| m.mul_vec(v))).collect();
        let r = rref(&QMatrix::from_columns(&cols, n).transpose());
        let next: Vec<QVector> = (0..r.rank()).map(|i| r.matrix.row(i).to_vec()).collect();
        if next.len() == image.len() {
            return None;
        }
        image = next;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> NcPoly {
        parse(s, 2).unwrap()
    }

    #[test]
    fn commutator_ideal() {
        let fs = vec![p("x1*x2 - x2*x1")];
        let g = p("x1^2*x2 - x2*x1^2");
        let Membership::Combination(c) = hom_ideal_membership(&fs, &g).unwrap() else { panic!() };
        assert_eq!(c.expand(&fs, 2).unwrap(), g);

        let h = p("x1*x2");
        let Membership::Witness(w) = hom_ideal_membership(&fs, &h).unwrap() else { panic!() };
        assert!(w.separates(&fs, &h).unwrap());
        assert!(nilpotency_index(&w.point).unwrap() <= 3);
        assert!(w.point.n() <= 7);
    }

    #[test]
    fn refuses_inhomogeneous() {
        let err = hom_ideal_membership(&[p("x1"), p("x2 + 1")], &p("x1")).unwrap_err();
        assert!(matches!(err, Error::NonHomogeneous { index: 1 }));
    }

    #[test]
    fn nilpotency() {
        let x = MatTuple::new(vec![QMatrix::from_ints(&[&[0, 1], &[0, 0]])]).unwrap();
        assert_eq!(nilpotency_index(&x), Some(2));
        let y = MatTuple::new(vec![QMatrix::identity(2)]).unwrap();
        assert_eq!(nilpotency_index(&y), None);
        assert_eq!(nilpotency_index(&MatTuple::zero(3, 2)), Some(1));
    }
}

use std::collections::HashMap;

use num_traits::Zero;

use super::tuple::MatTuple;
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, QVector};
use crate::poly::NcPoly;
use crate::word::Word;

fn check(f: &NcPoly, x: &MatTuple) -> Result<()> {
    if f.nvars() != x.d() {
        return Err(Error::DimensionMismatch(format!(
            "polynomial in {} variables evaluated at a {}-tuple",
            f.nvars(),
            x.d()
        )));
    }
    Ok(())
}

/// Word values memoised by prefix.
struct WordValues<'a> {
    x: &'a MatTuple,
    memo: HashMap<Word, QMatrix>,
}

impl<'a> WordValues<'a> {
    fn new(x: &'a MatTuple) -> Self {
        let mut memo = HashMap::new();
        memo.insert(Word::empty(), QMatrix::identity(x.n()));
        WordValues { x, memo }
    }

    fn get(&mut self, w: &Word) -> &QMatrix {
        if !self.memo.contains_key(w) {
            let k = w.len();
            let head = w.prefix(k - 1);
            let last = w.letters().next_back().expect("nonempty");
            self.get(&head);
            let v = &self.memo[&head] * self.x.get(last);
            self.memo.insert(w.clone(), v);
        }
        &self.memo[w]
    }
}

/// `f(X)`: the unit word maps to the identity, concatenation to products.
pub fn eval(f: &NcPoly, x: &MatTuple) -> Result<QMatrix> {
    check(f, x)?;
    let mut vals = WordValues::new(x);
    let mut out = QMatrix::zeros(x.n(), x.n());
    for (w, c) in f.terms() {
        let m = vals.get(w).scale(c);
        out = &out + &m;
    }
    Ok(out)
}

/// Evaluates several polynomials sharing one word cache.
pub fn eval_many(fs: &[NcPoly], x: &MatTuple) -> Result<Vec<QMatrix>> {
    let mut vals = WordValues::new(x);
    fs.iter()
        .map(|f| {
            check(f, x)?;
            let mut out = QMatrix::zeros(x.n(), x.n());
            for (w, c) in f.terms() {
                let m = vals.get(w).scale(c);
                out = &out + &m;
            }
            Ok(out)
        })
        .collect()
}

/// `f(X) v`, computed right to left without forming `f(X)`.
pub fn eval_apply(f: &NcPoly, x: &MatTuple, v: &[crate::Scalar]) -> Result<QVector> {
    check(f, x)?;
    if v.len() != x.n() {
        return Err(Error::DimensionMismatch(format!("vector of length {} for n = {}", v.len(), x.n())));
    }
    let mut memo: HashMap<Word, QVector> = HashMap::new();
    memo.insert(Word::empty(), v.to_vec());
    let mut out = vec![crate::Scalar::zero(); x.n()];
    for (w, c) in f.terms() {
        for k in (0..w.len()).rev() {
            let suffix = w.suffix_from(k);
            if memo.contains_key(&suffix) {
                continue;
            }
            let rest = w.suffix_from(k + 1);
            let letter = suffix.letters().next().expect("nonempty");
            let val = x.get(letter).mul_vec(&memo[&rest]);
            memo.insert(suffix, val);
        }
        for (o, y) in out.iter_mut().zip(&memo[w]) {
            *o += c * y;
        }
    }
    Ok(out)
}

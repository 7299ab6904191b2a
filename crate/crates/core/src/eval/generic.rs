use std::collections::HashMap;

use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::word::Word;

/// Cap on the total number of terms held by one intermediate matrix.
pub const DEFAULT_TERM_CAP: usize = 2_000_000;

/// Square matrix of commutative polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    pub n: usize,
    pub entries: Vec<CPoly>,
}

impl CMatrix {
    fn identity(n: usize) -> Self {
        let mut entries = vec![CPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = CPoly::one();
        }
        CMatrix { n, entries }
    }

    /// Generic matrix for variable `i`: entry `(r, c)` is the indeterminate
    /// `t_{i n^2 + r n + c}`.
    pub fn generic(n: usize, i: usize) -> Self {
        let base = (i * n * n) as u32;
        CMatrix { n, entries: (0..(n * n) as u32).map(|k| CPoly::var(base + k)).collect() }
    }

    fn mul(&self, other: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut entries = vec![CPoly::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = &entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        CMatrix { n, entries }
    }

    fn term_count(&self) -> usize {
        self.entries.iter().map(CPoly::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CPoly::is_zero)
    }
}

/// `f` evaluated at the generic tuple of `n x n` matrices whose `n^2 d`
/// entries are independent commuting indeterminates.
pub fn generic_eval(f: &NcPoly, n: usize, cap: usize) -> Result<CMatrix> {
    if n == 0 {
        return Err(Error::Precondition("matrix size must be at least 1".into()));
    }
    let gens: Vec<CMatrix> = (0..f.nvars()).map(|i| CMatrix::generic(n, i)).collect();
    let mut memo: HashMap<Word, CMatrix> = HashMap::new();
    memo.insert(Word::empty(), CMatrix::identity(n));
    let mut out = CMatrix { n, entries: vec![CPoly::zero(); n * n] };
    for (w, c) in f.terms() {
        for k in 1..=w.len() {
            let pre = w.prefix(k);
            if memo.contains_key(&pre) {
                continue;
            }
            let last = pre.letters().next_back().expect("nonempty");
            let v = memo[&w.prefix(k - 1)].mul(&gens[last]);
            if v.term_count() > cap {
                return Err(Error::ResourceCap(format!("generic evaluation exceeded {cap} terms")));
            }
            memo.insert(pre, v);
        }
        let val = &memo[w];
        for (o, e) in out.entries.iter_mut().zip(&val.entries) {
            *o = &*o + &e.scale(c);
        }
        if out.term_count() > cap {
            return Err(Error::ResourceCap(format!("generic evaluation exceeded {cap} terms")));
        }
    }
    Ok(out)
}

/// Whether `f` is a polynomial identity of `n x n` matrices, decided by
/// exact symbolic evaluation at generic matrices.
pub fn pi_test(f: &NcPoly, n: usize) -> Result<bool> {
    pi_test_with_cap(f, n, DEFAULT_TERM_CAP)
}

pub fn pi_test_with_cap(f: &NcPoly, n: usize, cap: usize) -> Result<bool> {
    Ok(generic_eval(f, n, cap)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::standard_poly;
    use crate::parse::parse;

    #[test]
    fn commutator_is_identity_only_for_scalars() {
        let c = parse("[x1,x2]", 2).unwrap();
        assert!(pi_test(&c, 1).unwrap());
        assert!(!pi_test(&c, 2).unwrap());
    }

    #[test]
    fn amitsur_levitzki_small() {
        let s4 = standard_poly(4).unwrap();
        assert!(pi_test(&s4, 2).unwrap());
        assert!(!pi_test(&standard_poly(3).unwrap(), 2).unwrap());
    }

    #[test]
    fn hall_identity() {
        // [[x1,x2]^2, x3] vanishes on 2x2 matrices
        let h = parse("[[x1,x2]^2, x3]", 3).unwrap();
        assert!(pi_test(&h, 2).unwrap());
        assert!(!pi_test(&h, 3).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let s4 = standard_poly(4).unwrap();
        assert!(matches!(pi_test_with_cap(&s4, 3, 10), Err(Error::ResourceCap(_))));
    }
}

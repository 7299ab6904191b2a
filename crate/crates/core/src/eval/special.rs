use num_traits::One;

use super::tuple::MatTuple;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::poly::NcPoly;
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// Largest `k` accepted by [`standard_poly`] (`k!` terms).
pub const STANDARD_POLY_CAP: usize = 8;

/// Truncated Weyl pair: `X` is the shift with ones on the superdiagonal and
/// `Y` carries `1, 2, ..., n-1` on the subdiagonal, so that
/// `I - [X, Y] = n E_nn`.
pub fn weyl_pair(n: usize) -> Result<MatTuple> {
    if n == 0 {
        return Err(Error::Precondition("Weyl pair needs n >= 1".into()));
    }
    let mut x = QMatrix::zeros(n, n);
    let mut y = QMatrix::zeros(n, n);
    for i in 0..n - 1 {
        x[(i, i + 1)] = Scalar::one();
        y[(i + 1, i)] = scalar::int(i as i64 + 1);
    }
    MatTuple::new(vec![x, y])
}

/// `s_k = sum over permutations of sgn(p) x_{p(1)} ... x_{p(k)}` in `k` variables.
pub fn standard_poly(k: usize) -> Result<NcPoly> {
    if k == 0 {
        return Err(Error::Precondition("standard polynomial needs k >= 1".into()));
    }
    if k > STANDARD_POLY_CAP {
        return Err(Error::ResourceCap(format!("s_{k} exceeds the cap k <= {STANDARD_POLY_CAP}")));
    }
    let mut out = NcPoly::zero(k);
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        out.add_term(Word::from_letters(p.iter().copied()), scalar::int(sign));
    });
    Ok(out)
}

fn permute(p: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize])) {
    if start == p.len() {
        visit(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, visit);
        p.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval;
    use crate::linalg::bareiss;
    use crate::parse::parse;

    #[test]
    fn weyl_small_cases() {
        let w = weyl_pair(2).unwrap();
        assert_eq!(w.get(0), &QMatrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(w.get(1), &QMatrix::from_ints(&[&[0, 0], &[1, 0]]));
        let w = weyl_pair(3).unwrap();
        assert_eq!(w.get(1), &QMatrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]));
        assert!(weyl_pair(0).is_err());
        assert_eq!(weyl_pair(1).unwrap().get(0), &QMatrix::zeros(1, 1));
    }

    #[test]
    fn weyl_value_is_rank_one() {
        let f = parse("1 - [x1,x2]", 2).unwrap();
        for n in 2..=20 {
            let v = eval(&f, &weyl_pair(n).unwrap()).unwrap();
            assert_eq!(v, QMatrix::unit(n, n - 1, n - 1).scale(&scalar::int(n as i64)));
            assert_eq!(bareiss(&v).rank, 1);
        }
    }

    #[test]
    fn standard_polynomials() {
        assert_eq!(standard_poly(2).unwrap(), parse("x1*x2 - x2*x1", 2).unwrap());
        let s3 = standard_poly(3).unwrap();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.coeff(&Word::from_letters([1, 0, 2])), scalar::int(-1));
        assert_eq!(s3.coeff(&Word::from_letters([1, 2, 0])), scalar::int(1));
        assert_eq!(standard_poly(4).unwrap().len(), 24);
        assert!(matches!(standard_poly(9), Err(Error::ResourceCap(_))));
    }
}

//! Univariate rational polynomials: rational roots and characteristic
//! polynomials. Coefficient vectors are indexed by power, lowest first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::QMatrix;
use crate::scalar::Scalar;

/// Largest absolute value whose divisors are enumerated by trial division.
const DIVISOR_LIMIT: u64 = 1 << 40;

pub fn horner(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

fn trim(coeffs: &[Scalar]) -> &[Scalar] {
    let mut n = coeffs.len();
    while n > 0 && coeffs[n - 1].is_zero() {
        n -= 1;
    }
    &coeffs[..n]
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    Some(out)
}

/// Distinct rational roots, ascending. `None` when the constant or leading
/// coefficient is too large to enumerate candidates, or the polynomial is 0.
pub fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let c = trim(coeffs);
    if c.is_empty() {
        return None;
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Scalar::from(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|x| !x.is_zero()).expect("nonzero polynomial");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Scalar::zero());
    }
    let ints = &ints[low..];
    if ints.len() > 1 {
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().expect("nonempty"))?;
        let as_rat: Vec<Scalar> = ints.iter().map(|x| Scalar::from(x.clone())).collect();
        for &p in &ps {
            for &q in &qs {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for s in [1i64, -1] {
                    let x = Scalar::new(BigInt::from(p) * s, BigInt::from(q));
                    if horner(&as_rat, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

/// `det(t I - A)` via Faddeev-LeVerrier.
pub fn char_poly(a: &QMatrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut m = QMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = &(a * &m) + &QMatrix::scalar(n, &c[n + 1 - k]);
        std::mem::swap(&mut m, &mut next);
        let am = a * &m;
        c[n - k] = -am.trace() / Scalar::from(BigInt::from(k));
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn q(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn roots_of_products() {
        // (2t - 1)(t + 3) t = 2t^3 + 5t^2 - 3t
        assert_eq!(rational_roots(&q(&[0, -3, 5, 2])).unwrap(), vec![int(-3), int(0), frac(1, 2)]);
        assert_eq!(rational_roots(&q(&[2, 0, 1])).unwrap(), vec![]);
        assert_eq!(rational_roots(&q(&[5])).unwrap(), vec![]);
        assert!(rational_roots(&q(&[0, 0])).is_none());
    }

    #[test]
    fn characteristic_polynomial() {
        let a = QMatrix::from_ints(&[&[2, 1], &[0, 3]]);
        assert_eq!(char_poly(&a), q(&[6, -5, 1]));
        let b = QMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[6, -11, 6]]);
        // t^3 - 6t^2 + 11t - 6
        assert_eq!(char_poly(&b), q(&[-6, 11, -6, 1]));
        assert_eq!(rational_roots(&char_poly(&b)).unwrap(), q(&[1, 2, 3]));
    }
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default denominator cap for reconstruction.
pub const DEFAULT_MAX_DEN: u64 = 1_000_000;

/// Finds the first continued-fraction convergent `p/q` of `x` with
/// `q <= max_den` and `|x - p/q| < 1 / (2 q max_den)`.
///
/// The expansion runs on the exact binary value of `x`, so no rounding
/// enters the convergents. Returns `Ok(None)` when no convergent qualifies.
pub fn rational_reconstruct(x: f64, max_den: u64) -> Result<Option<Scalar>> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let max_den = max_den.max(1);
    let exact = Scalar::from_float(x).ok_or(Error::NonFinite)?;
    let cap = BigInt::from(max_den);
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut rest = exact.clone();
    loop {
        let a = rest.numer().div_floor(rest.denom());
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if k_next > cap {
            return Ok(None);
        }
        (h_prev, h) = (h, h_next);
        (k_prev, k) = (k, k_next);
        let conv = Scalar::new(h.clone(), k.clone());
        let tol = Scalar::new(BigInt::one(), BigInt::from(2) * &k * &cap);
        if (&exact - &conv).abs() < tol {
            return Ok(Some(conv));
        }
        let frac = &rest - Scalar::from_integer(a);
        if frac.is_zero() {
            return Ok(None);
        }
        rest = frac.recip();
    }
}

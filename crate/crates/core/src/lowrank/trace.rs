use nalgebra::{DMatrix, DVector};
use num_traits::Zero;
use rand::Rng;

use super::exactify::{affine_parts, affine_variables, round_nice};
use super::search::SearchConfig;
use super::{eval_f64, FMatTuple};
use crate::error::{Error, Result};
use crate::eval::{eval, MatTuple};
use crate::linalg::{solve_span, QMatrix, QVector, SpanSolution};
use crate::poly::NcPoly;
use crate::roots::rational_roots;
use crate::sample::Sampler;
use crate::scalar::{self, Scalar};

fn traces_vanish(fs: &[NcPoly], g: &NcPoly, x: &MatTuple) -> Result<bool> {
    for f in fs {
        if !eval(f, x)?.trace().is_zero() {
            return Ok(false);
        }
    }
    Ok(!eval(g, x)?.trace().is_zero())
}

fn residual(fs: &[NcPoly], x: &FMatTuple) -> DVector<f64> {
    DVector::from_iterator(fs.len(), fs.iter().map(|f| eval_f64(f, x).trace()))
}

/// Minimal-norm Gauss-Newton on the trace map, finite-difference Jacobian.
fn newton(fs: &[NcPoly], n: usize, d: usize, mut xs: Vec<f64>, iters: usize) -> Option<Vec<f64>> {
    for _ in 0..iters {
        let r = residual(fs, &FMatTuple::from_flat(n, d, &xs));
        if r.norm() < 1e-13 {
            return Some(xs);
        }
        let mut jac = DMatrix::zeros(fs.len(), xs.len());
        for i in 0..xs.len() {
            let h = 1e-6 * (1.0 + xs[i].abs());
            let orig = xs[i];
            xs[i] = orig + h;
            let up = residual(fs, &FMatTuple::from_flat(n, d, &xs));
            xs[i] = orig - h;
            let down = residual(fs, &FMatTuple::from_flat(n, d, &xs));
            xs[i] = orig;
            jac.set_column(i, &((up - down) / (2.0 * h)));
        }
        let pinv = jac.pseudo_inverse(1e-12).ok()?;
        let step = pinv * r;
        for (x, s) in xs.iter_mut().zip(step.iter()) {
            *x -= s;
        }
        if xs.iter().any(|x| !x.is_finite()) {
            return None;
        }
    }
    None
}

fn to_exact(n: usize, d: usize, xs: &[f64], max_den: u64) -> Result<Vec<QMatrix>> {
    let mut mats = Vec::with_capacity(d);
    for k in 0..d {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = round_nice(xs[k * n * n + i * n + j], max_den);
            }
        }
        mats.push(m);
    }
    Ok(mats)
}

/// Solves the (linear) trace equations for `X_i` exactly, starting from the
/// rounded point.
fn affine_fix(fs: &[NcPoly], g: &NcPoly, mats: &[QMatrix], i: usize) -> Result<Option<MatTuple>> {
    let n = mats[0].rows();
    let mut base = mats.to_vec();
    base[i] = QMatrix::zeros(n, n);
    let base = MatTuple::new(base)?;
    // row j: sum_p lin_j[(p n + p), :] . vec(Y) = -tr C_j
    let mut rows: Vec<QVector> = Vec::new();
    let mut rhs: QVector = Vec::new();
    for f in fs {
        let (c, lin) = affine_parts(f, &base, i)?;
        let mut row = vec![Scalar::zero(); n * n];
        for p in 0..n {
            for (k, e) in lin.row(p * n + p).iter().enumerate() {
                row[k] += e;
            }
        }
        rows.push(row);
        rhs.push(-c.trace());
    }
    // move to the current X_i: A (y0 + delta) = rhs
    let y0: QVector = mats[i].entries().to_vec();
    let target: QVector = rows
        .iter()
        .zip(&rhs)
        .map(|(row, b)| b - row.iter().zip(&y0).map(|(a, y)| a * y).sum::<Scalar>())
        .collect();
    let cols: Vec<QVector> = (0..n * n).map(|k| rows.iter().map(|r| r[k].clone()).collect()).collect();
    let SpanSolution::InSpan(delta) = solve_span(&cols, &target)? else { return Ok(None) };
    let mut out = mats.to_vec();
    let mut y = QMatrix::zeros(n, n);
    for k in 0..n * n {
        y[(k / n, k % n)] = &y0[k] + &delta[k];
    }
    out[i] = y;
    let x = MatTuple::new(out)?;
    Ok(traces_vanish(fs, g, &x)?.then_some(x))
}

/// One equation: walk the coordinates, treating the trace as a univariate
/// polynomial in that entry, and try its rational roots.
fn coordinate_fix(f: &NcPoly, fs: &[NcPoly], g: &NcPoly, mats: &[QMatrix]) -> Result<Option<MatTuple>> {
    let n = mats[0].rows();
    let deg = f.deg0();
    for k in 0..mats.len() {
        for e in 0..n * n {
            let (p, q) = (e / n, e % n);
            let mut values = Vec::with_capacity(deg + 1);
            for t in 0..=deg {
                let mut m = mats.to_vec();
                m[k][(p, q)] = scalar::int(t as i64);
                values.push(eval(f, &MatTuple::new(m)?)?.trace());
            }
            // interpolate: Vandermonde columns
            let cols: Vec<QVector> = (0..=deg)
                .map(|j| (0..=deg).map(|t| scalar::int(t as i64).pow(j as i32)).collect())
                .collect();
            let SpanSolution::InSpan(coeffs) = solve_span(&cols, &values)? else { continue };
            if coeffs.iter().skip(1).all(Zero::is_zero) {
                continue;
            }
            for root in rational_roots(&coeffs).unwrap_or_default() {
                let mut m = mats.to_vec();
                m[k][(p, q)] = root;
                let x = MatTuple::new(m)?;
                if traces_vanish(fs, g, &x)? {
                    return Ok(Some(x));
                }
            }
        }
    }
    Ok(None)
}

/// Looks for an exact `n x n` point with `tr f_j(X) = 0` for all `j` and
/// `tr g(X) != 0`. Best effort; every returned point is verified exactly.
pub fn trace_witness_search(fs: &[NcPoly], g: &NcPoly, n: usize, cfg: &SearchConfig) -> Result<Option<MatTuple>> {
    if n == 0 {
        return Err(Error::Precondition("matrix size must be at least 1".into()));
    }
    let d = g.nvars();
    if fs.iter().any(|f| f.nvars() != d) {
        return Err(Error::DimensionMismatch("generators and target in different variable counts".into()));
    }
    let mut sampler = Sampler::new(cfg.seed);
    for _ in 0..50 {
        let x = sampler.tuple(n, d);
        if traces_vanish(fs, g, &x)? {
            return Ok(Some(x));
        }
    }
    let affine: Vec<usize> = (0..d).filter(|i| fs.iter().all(|f| affine_variables(f).contains(i) || f.terms().all(|(w, _)| w.count(*i) == 0))).collect();
    for _ in 0..cfg.restarts {
        let x0: Vec<f64> = (0..n * n * d).map(|_| sampler.rng().random_range(-2.0..=2.0)).collect();
        let Some(xs) = newton(fs, n, d, x0, cfg.max_iters.min(200)) else { continue };
        let mats = to_exact(n, d, &xs, cfg.max_den)?;
        let x = MatTuple::new(mats.clone())?;
        if traces_vanish(fs, g, &x)? {
            return Ok(Some(x));
        }
        for &i in &affine {
            if let Some(x) = affine_fix(fs, g, &mats, i)? {
                return Ok(Some(x));
            }
        }
        if let [f] = fs {
            if let Some(x) = coordinate_fix(f, fs, g, &mats)? {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

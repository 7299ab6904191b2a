//! Turning floating-point near-solutions into exact rational points.

use num_traits::Zero;

use super::{eval_f64, FMatTuple};
use crate::error::Result;
use crate::eval::{eval, MatTuple};
use crate::linalg::{bareiss, rational_reconstruct, solve_span, QMatrix, QVector, SpanSolution};
use crate::poly::NcPoly;
use crate::scalar::Scalar;

/// Nearby rational: a qualifying convergent if there is one, otherwise the
/// nearest multiple of `1/max_den`.
pub(crate) fn round_nice(x: f64, max_den: u64) -> Scalar {
    if let Ok(Some(q)) = rational_reconstruct(x, max_den) {
        return q;
    }
    let den = max_den.max(1) as f64;
    let num = (x * den).round() as i64;
    Scalar::new(num.into(), (max_den.max(1) as i64).into())
}

fn reconstruct_all(x: &FMatTuple, max_den: u64) -> Result<Option<MatTuple>> {
    let n = x.n();
    let mut mats = Vec::new();
    for m in x.matrices() {
        let mut q = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                match rational_reconstruct(m[(i, j)], max_den)? {
                    Some(v) => q[(i, j)] = v,
                    None => return Ok(None),
                }
            }
        }
        mats.push(q);
    }
    Ok(Some(MatTuple::new(mats)?))
}

fn rounded(m: &nalgebra::DMatrix<f64>, max_den: u64) -> QMatrix {
    let (r, c) = m.shape();
    let mut q = QMatrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            q[(i, j)] = round_nice(m[(i, j)], max_den);
        }
    }
    q
}

/// Variables in which every word of `f` has degree at most one.
pub(crate) fn affine_variables(f: &NcPoly) -> Vec<usize> {
    (0..f.nvars())
        .filter(|&i| f.terms().all(|(w, _)| w.count(i) <= 1) && f.terms().any(|(w, _)| w.count(i) == 1))
        .collect()
}

/// `f(X) = C + sum_k c_k U_k X_i V_k` with the other variables fixed:
/// returns `C` and the matrix of `Y -> sum c_k U_k Y V_k` on row-major
/// coordinates.
pub(crate) fn affine_parts(f: &NcPoly, x: &MatTuple, i: usize) -> Result<(QMatrix, QMatrix)> {
    let n = x.n();
    let d = f.nvars();
    let mut c = QMatrix::zeros(n, n);
    let mut lin = QMatrix::zeros(n * n, n * n);
    for (w, coef) in f.terms() {
        let Some(k) = w.letters().position(|l| l == i) else {
            c = &c + &eval(&NcPoly::monomial(d, w.clone(), coef.clone()), x)?;
            continue;
        };
        let u = eval(&NcPoly::monomial(d, w.prefix(k), coef.clone()), x)?;
        let v = eval(&NcPoly::word(d, w.suffix_from(k + 1)), x)?;
        // (U Y V)[p][q] = sum_{s,t} U[p][s] Y[s][t] V[t][q]
        for p in 0..n {
            for s in 0..n {
                if u[(p, s)].is_zero() {
                    continue;
                }
                for t in 0..n {
                    for q in 0..n {
                        if !v[(t, q)].is_zero() {
                            lin[(p * n + q, s * n + t)] += &u[(p, s)] * &v[(t, q)];
                        }
                    }
                }
            }
        }
    }
    Ok((c, lin))
}

pub(crate) fn exact_rank(f: &NcPoly, x: &MatTuple) -> Result<usize> {
    Ok(bareiss(&eval(f, x)?).rank)
}

/// Exact point near `x` where `f` has rank at most `r`, if one is found.
///
/// First tries entrywise reconstruction. Failing that, for a variable `x_i`
/// in which `f` is affine, rounds the other matrices and the dominant left
/// singular vectors `A` of `f(X)`, then solves `f(X) = A B^t` exactly for
/// `(X_i, B)`, which is linear.
pub(crate) fn exactify_rank(f: &NcPoly, x: &FMatTuple, r: usize, max_den: u64) -> Result<Option<(MatTuple, usize)>> {
    if let Some(q) = reconstruct_all(x, max_den)? {
        let rank = exact_rank(f, &q)?;
        if rank <= r {
            return Ok(Some((q, rank)));
        }
    }
    let n = x.n();
    let value = eval_f64(f, x);
    let svd = value.clone().svd(true, false);
    let u = svd.u.expect("requested U");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let mut a = QMatrix::zeros(n, r.min(n));
    for (col, &k) in order.iter().take(r).enumerate() {
        let column = u.column(k);
        let scale = column.iter().fold(0.0f64, |m, v| if v.abs() > m.abs() { *v } else { m });
        for row in 0..n {
            a[(row, col)] = round_nice(column[row] / scale, max_den);
        }
    }
    let r = a.cols();
    for i in affine_variables(f) {
        let mut mats: Vec<QMatrix> = x.matrices().iter().map(|m| rounded(m, max_den)).collect();
        mats[i] = QMatrix::zeros(n, n);
        let base = MatTuple::new(mats.clone())?;
        let (c, lin) = affine_parts(f, &base, i)?;
        // unknowns: Y (n*n, row-major) then B (n x r, row-major)
        let mut cols: Vec<QVector> = (0..n * n).map(|j| lin.column(j)).collect();
        for q in 0..n {
            for j in 0..r {
                let mut col = vec![Scalar::zero(); n * n];
                for p in 0..n {
                    col[p * n + q] = -a[(p, j)].clone();
                }
                cols.push(col);
            }
        }
        let target: QVector = c.entries().iter().map(|e| -e.clone()).collect();
        if let SpanSolution::InSpan(sol) = solve_span(&cols, &target)? {
            let mut y = QMatrix::zeros(n, n);
            for s in 0..n {
                for t in 0..n {
                    y[(s, t)] = sol[s * n + t].clone();
                }
            }
            mats[i] = y;
            let point = MatTuple::new(mats)?;
            let rank = exact_rank(f, &point)?;
            if rank <= r {
                return Ok(Some((point, rank)));
            }
        }
    }
    Ok(None)
}

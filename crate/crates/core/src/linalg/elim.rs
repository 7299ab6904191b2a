use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{QMatrix, QVector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BareissResult {
    pub rank: usize,
    /// Present for square matrices.
    pub det: Option<Scalar>,
}

/// Rank and determinant by fraction-free elimination.
///
/// Each row is first cleared of denominators; the determinant is rescaled
/// afterwards. Pivot is the first nonzero entry in column order.
pub fn bareiss(a: &QMatrix) -> BareissResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut scale = Scalar::one();
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = a.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= Scalar::from_integer(l.clone());
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..rows {
            for j in col + 1..cols {
                let num = &m[k][col] * &m[i][j] - &m[i][col] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[k][col].clone();
        k += 1;
    }
    let det = a.is_square().then(|| {
        if k < rows {
            Scalar::zero()
        } else if rows == 0 {
            Scalar::one()
        } else {
            let d = Scalar::from_integer(m[rows - 1][cols - 1].clone()) / &scale;
            if sign < 0 {
                -d
            } else {
                d
            }
        }
    });
    BareissResult { rank: k, det }
}

/// Reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMatrix,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination with rational entries. Pivot = first nonzero in
/// the lowest-index column.
pub fn rref(a: &QMatrix) -> Rref {
    rref_impl(a, None).0
}

/// RREF together with the invertible `T` satisfying `T * a = rref`.
pub fn rref_with_transform(a: &QMatrix) -> (Rref, QMatrix) {
    let mut t = QMatrix::identity(a.rows());
    let (r, _) = rref_impl(a, Some(&mut t));
    (r, t)
}

fn rref_impl(a: &QMatrix, mut t: Option<&mut QMatrix>) -> (Rref, ()) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.to_rows();
    let mut tr = t.as_ref().map(|t| t.to_rows());
    let mut pivots = Vec::new();
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, k);
        if let Some(tr) = tr.as_mut() {
            tr.swap(p, k);
        }
        let inv = m[k][col].recip();
        for x in m[k].iter_mut() {
            *x *= &inv;
        }
        if let Some(tr) = tr.as_mut() {
            for x in tr[k].iter_mut() {
                *x *= &inv;
            }
        }
        for i in 0..rows {
            if i == k || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for j in col..cols {
                if !m[k][j].is_zero() {
                    let d = &f * &m[k][j];
                    m[i][j] -= d;
                }
            }
            if let Some(tr) = tr.as_mut() {
                for j in 0..rows {
                    if !tr[k][j].is_zero() {
                        let d = &f * &tr[k][j];
                        tr[i][j] -= d;
                    }
                }
            }
        }
        pivots.push(col);
        k += 1;
    }
    if let (Some(t), Some(tr)) = (t.as_mut(), tr) {
        **t = QMatrix::from_rows(tr).expect("square transform");
    }
    let matrix = if rows == 0 {
        QMatrix::zeros(0, cols)
    } else {
        QMatrix::from_rows(m).expect("rectangular")
    };
    (Rref { matrix, pivots }, ())
}

/// Basis of the right null space, one vector per free column (in column
/// order), with a 1 in that free column.
pub fn kernel(a: &QMatrix) -> Vec<QVector> {
    let r = rref(a);
    kernel_from_rref(&r, a.cols())
}

fn kernel_from_rref(r: &Rref, cols: usize) -> Vec<QVector> {
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![Scalar::zero(); cols];
            v[free] = Scalar::one();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Basis of `{ y : y^T a = 0 }`.
pub fn left_kernel(a: &QMatrix) -> Vec<QVector> {
    kernel(&a.transpose())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDetKernel {
    pub rank: usize,
    pub det: Option<Scalar>,
    pub kernel: Vec<QVector>,
}

/// Rank and determinant via Bareiss, kernel via Gauss-Jordan.
pub fn rank_det_kernel(a: &QMatrix) -> RankDetKernel {
    let b = bareiss(a);
    let kernel = kernel(a);
    debug_assert_eq!(b.rank + kernel.len(), a.cols());
    RankDetKernel { rank: b.rank, det: b.det, kernel }
}

/// Determinant of a square matrix.
pub fn det(a: &QMatrix) -> Result<Scalar> {
    bareiss(a).det.ok_or(Error::NotSquare { rows: a.rows(), cols: a.cols() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanSolution {
    /// `target = sum coefficients[i] * basis[i]`.
    InSpan(QVector),
    /// `functional . basis[i] = 0` for all `i` and `functional . target = 1`.
    NotInSpan { complement_functional: QVector },
}

/// Decides whether `target` lies in the span of `basis`.
///
/// Coefficients of non-pivot basis vectors are zero; pivots are the
/// lowest-index independent vectors. The separating functional is the first
/// left-kernel basis vector not annihilating `target`.
pub fn solve_span(basis: &[QVector], target: &[Scalar]) -> Result<SpanSolution> {
    let len = target.len();
    if let Some(b) = basis.iter().find(|b| b.len() != len) {
        return Err(Error::DimensionMismatch(format!(
            "basis vector of length {} against target of length {len}",
            b.len()
        )));
    }
    let mut cols = basis.to_vec();
    cols.push(target.to_vec());
    let aug = QMatrix::from_columns(&cols, len);
    let r = rref(&aug);
    let k = basis.len();
    if r.pivots.last() != Some(&k) {
        let mut coeffs = vec![Scalar::zero(); k];
        for (row, &p) in r.pivots.iter().enumerate() {
            coeffs[p] = r.matrix[(row, k)].clone();
        }
        return Ok(SpanSolution::InSpan(coeffs));
    }
    let a = QMatrix::from_columns(basis, len);
    for y in left_kernel(&a) {
        let s: Scalar = y.iter().zip(target).map(|(a, b)| a * b).sum();
        if !s.is_zero() {
            let inv = s.recip();
            return Ok(SpanSolution::NotInSpan {
                complement_functional: y.iter().map(|x| x * &inv).collect(),
            });
        }
    }
    Err(Error::Internal("target outside span but no separating functional".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn v(xs: &[i64]) -> QVector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn span_examples() {
        let basis = vec![v(&[1, 0]), v(&[0, 1])];
        assert_eq!(solve_span(&basis, &v(&[2, 3])).unwrap(), SpanSolution::InSpan(v(&[2, 3])));

        // phi . (1,1) = 0 and phi . (1,0) = 1 forces phi = (1,-1)
        let got = solve_span(&[v(&[1, 1])], &v(&[1, 0])).unwrap();
        assert_eq!(got, SpanSolution::NotInSpan { complement_functional: v(&[1, -1]) });

        assert_eq!(solve_span(&[], &[]).unwrap(), SpanSolution::InSpan(vec![]));
        assert_eq!(solve_span(&[], &v(&[0, 0])).unwrap(), SpanSolution::InSpan(vec![]));
        assert!(solve_span(&[v(&[1])], &v(&[1, 2])).is_err());
    }

    #[test]
    fn pivot_minimal_coefficients() {
        let basis = vec![v(&[1, 0]), v(&[2, 0]), v(&[0, 1])];
        assert_eq!(solve_span(&basis, &v(&[4, 5])).unwrap(), SpanSolution::InSpan(v(&[4, 0, 5])));
    }

    #[test]
    fn rank_det_kernel_examples() {
        let r = rank_det_kernel(&QMatrix::identity(3));
        assert_eq!((r.rank, r.det.clone()), (3, Some(int(1))));
        assert!(r.kernel.is_empty());

        let r = rank_det_kernel(&QMatrix::unit(3, 2, 2).scale(&int(3)));
        assert_eq!((r.rank, r.det.clone()), (1, Some(int(0))));
        assert_eq!(r.kernel, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);

        let r = rank_det_kernel(&QMatrix::zeros(2, 2));
        assert_eq!((r.rank, r.det.clone()), (0, Some(int(0))));
        assert_eq!(r.kernel, vec![v(&[1, 0]), v(&[0, 1])]);

        assert!(matches!(det(&QMatrix::zeros(2, 3)), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn rational_determinant() {
        let m = QMatrix::from_fracs(&[&[(1, 2), (1, 3)], &[(1, 4), (1, 5)]]);
        assert_eq!(det(&m).unwrap(), frac(1, 10) - frac(1, 12));
        let swap = QMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&swap).unwrap(), int(-1));
    }

    #[test]
    fn transform_reproduces_rref() {
        let a = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, t) = rref_with_transform(&a);
        assert_eq!(&t * &a, r.matrix);
        assert_eq!(r.rank(), 2);
    }
}

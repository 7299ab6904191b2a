use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::scalar;

/// A `d`-tuple of `n x n` rational matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatTuple {
    n: usize,
    matrices: Vec<QMatrix>,
}

/// On-disk form: every entry is a rational written `"p"` or `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleFile {
    pub n: usize,
    pub d: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl MatTuple {
    /// All matrices must be square of one common size `n >= 1`; `d >= 1`.
    pub fn new(matrices: Vec<QMatrix>) -> Result<Self> {
        let Some(first) = matrices.first() else {
            return Err(Error::NoVariables);
        };
        let n = first.rows();
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix size must be at least 1".into()));
        }
        if matrices.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("tuple matrices must be square of equal size".into()));
        }
        Ok(MatTuple { n, matrices })
    }

    /// The 0x0 tuple, neutral for [`MatTuple::direct_sum`].
    pub fn empty(d: usize) -> Self {
        MatTuple { n: 0, matrices: vec![QMatrix::zeros(0, 0); d] }
    }

    pub fn zero(n: usize, d: usize) -> Self {
        MatTuple { n, matrices: vec![QMatrix::zeros(n, n); d] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    pub fn get(&self, i: usize) -> &QMatrix {
        &self.matrices[i]
    }

    pub fn direct_sum(&self, other: &MatTuple) -> Result<MatTuple> {
        if self.d() != other.d() {
            return Err(Error::DimensionMismatch(format!(
                "direct sum of {}-tuple and {}-tuple",
                self.d(),
                other.d()
            )));
        }
        Ok(MatTuple {
            n: self.n + other.n,
            matrices: self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.direct_sum(b)).collect(),
        })
    }

    /// Simultaneous similarity `s_inv * X_i * s`.
    pub fn conjugate(&self, s: &QMatrix, s_inv: &QMatrix) -> MatTuple {
        MatTuple { n: self.n, matrices: self.matrices.iter().map(|m| &(s_inv * m) * s).collect() }
    }

    pub fn to_file(&self) -> TupleFile {
        TupleFile {
            n: self.n,
            d: self.d(),
            matrices: self
                .matrices
                .iter()
                .map(|m| m.to_rows().iter().map(|r| r.iter().map(scalar::render).collect()).collect())
                .collect(),
        }
    }

    pub fn from_file(f: &TupleFile) -> Result<Self> {
        if f.matrices.len() != f.d {
            return Err(Error::Format(format!("expected {} matrices, found {}", f.d, f.matrices.len())));
        }
        let mats = f
            .matrices
            .iter()
            .map(|m| {
                if m.len() != f.n || m.iter().any(|r| r.len() != f.n) {
                    return Err(Error::Format(format!("matrix is not {}x{}", f.n, f.n)));
                }
                let rows = m
                    .iter()
                    .map(|r| r.iter().map(|s| scalar::parse(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                QMatrix::from_rows(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        MatTuple::new(mats)
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: TupleFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_file(&f)
    }
}

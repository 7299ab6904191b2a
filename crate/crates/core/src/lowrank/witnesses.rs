use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::eval::{eval, pi_test, MatTuple};
use crate::linalg::{bareiss, QMatrix};
use crate::parse::parse;
use crate::poly::NcPoly;

/// The polynomial `1 - [x1, [x1, x2]^2]`.
pub fn witness_polynomial() -> NcPoly {
    parse("1 - [x1, [x1,x2]^2]", 2).expect("fixed text parses")
}

/// The known 3x3 and 4x4 pairs on which the polynomial has rank one.
pub fn known_witnesses() -> Vec<MatTuple> {
    let x3 = QMatrix::from_fracs(&[
        &[(0, 1), (-2, 1), (0, 1)],
        &[(1, 6), (0, 1), (-4, 1)],
        &[(0, 1), (1, 6), (0, 1)],
    ]);
    let y3 = QMatrix::from_fracs(&[
        &[(0, 1), (3, 1), (0, 1)],
        &[(1, 4), (0, 1), (0, 1)],
        &[(0, 1), (0, 1), (3, 2)],
    ]);
    let x4 = QMatrix::from_fracs(&[
        &[(0, 1), (1, 1), (1, 1), (0, 1)],
        &[(5, 9), (0, 1), (-5, 3), (-1, 1)],
        &[(0, 1), (2, 15), (0, 1), (-1, 5)],
        &[(0, 1), (0, 1), (-5, 3), (0, 1)],
    ]);
    let y4 = QMatrix::from_fracs(&[
        &[(0, 1), (-6, 5), (21, 2), (0, 1)],
        &[(0, 1), (0, 1), (-10, 1), (3, 2)],
        &[(1, 3), (1, 5), (0, 1), (3, 10)],
        &[(0, 1), (0, 1), (5, 2), (2, 1)],
    ]);
    vec![
        MatTuple::new(vec![x3, y3]).expect("3x3 pair"),
        MatTuple::new(vec![x4, y4]).expect("4x4 pair"),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub polynomial: String,
    /// Exact rank of the value at each known pair.
    pub ranks: Vec<usize>,
    /// Whether each value equals `n E_nn`.
    pub corner_values: Vec<bool>,
    /// Whether `f - 1` vanishes identically on 2x2 matrices.
    pub identity_on_2x2: bool,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.ranks.iter().all(|&r| r == 1) && self.identity_on_2x2
    }
}

pub fn verify_known_witnesses() -> Result<WitnessReport> {
    let f = witness_polynomial();
    let mut ranks = Vec::new();
    let mut corner_values = Vec::new();
    for x in known_witnesses() {
        let v = eval(&f, &x)?;
        let n = x.n();
        let mut corner = QMatrix::zeros(n, n);
        corner[(n - 1, n - 1)] = crate::scalar::int(n as i64);
        ranks.push(bareiss(&v).rank);
        corner_values.push(v == corner);
    }
    let shifted = &f - &NcPoly::one(2);
    let identity_on_2x2 = pi_test(&shifted, 2)?;
    Ok(WitnessReport { polynomial: f.to_string(), ranks, corner_values, identity_on_2x2 })
}

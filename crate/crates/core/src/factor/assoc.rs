use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{eval, eval_apply, MatTuple};
use crate::linalg::{bareiss, kernel, EchelonSpan, QMatrix, QVector, SparseVec};
use crate::poly::NcPoly;
use crate::sample::{EntryRange, Sampler};
use crate::scalar::{self, Scalar};
use crate::word::{words_up_to, Word};

/// 2x2 matrix of polynomials, row-major.
pub type Grid = [[NcPoly; 2]; 2];

pub fn grid_mul(a: &Grid, b: &Grid) -> Result<Grid> {
    let e = |i: usize, j: usize| -> Result<NcPoly> {
        a[i][0].checked_mul(&b[0][j])?.checked_add(&a[i][1].checked_mul(&b[1][j])?)
    };
    Ok([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
}

fn diag(d: usize, p: &NcPoly) -> Grid {
    [[p.clone(), NcPoly::zero(d)], [NcPoly::zero(d), NcPoly::one(d)]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    P,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssocBounds {
    /// Entry degree bound for the transforming matrices; `None` means
    /// `deg p + deg q`.
    pub degree: Option<usize>,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
}

impl AssocBounds {
    pub fn new(seed: u64) -> Self {
        AssocBounds { degree: None, n_max: 4, samples: 200, seed }
    }
}

/// Outcome of the stable association test for `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum AssocCertificate {
    /// `P diag(q, 1) Q = diag(p, 1)` with both matrices invertible.
    Yes {
        #[serde(rename = "P")]
        p: Grid,
        #[serde(rename = "Q")]
        q: Grid,
        #[serde(rename = "P_inv")]
        p_inv: Grid,
        #[serde(rename = "Q_inv")]
        q_inv: Grid,
    },
    /// The `singular` side kills `vector` at `point`; the other side is
    /// invertible there.
    No {
        point: MatTuple,
        #[serde(with = "crate::serde_util::rational_vec")]
        vector: QVector,
        singular: Side,
    },
    Unknown { degree_bound: usize, n_max: usize, samples: usize },
}

impl AssocCertificate {
    pub fn is_yes(&self) -> bool {
        matches!(self, AssocCertificate::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, AssocCertificate::No { .. })
    }

    /// Exact re-check; `Unknown` never verifies.
    pub fn verify(&self, p0: &NcPoly, q0: &NcPoly) -> Result<bool> {
        let d = p0.nvars();
        match self {
            AssocCertificate::Yes { p, q, p_inv, q_inv } => {
                let id = diag(d, &NcPoly::one(d));
                Ok(grid_mul(&grid_mul(p, &diag(d, q0))?, q)? == diag(d, p0)
                    && grid_mul(p, p_inv)? == id
                    && grid_mul(p_inv, p)? == id
                    && grid_mul(q, q_inv)? == id
                    && grid_mul(q_inv, q)? == id)
            }
            AssocCertificate::No { point, vector, singular } => {
                let (zero, other) = match singular {
                    Side::P => (p0, q0),
                    Side::Q => (q0, p0),
                };
                if vector.len() != point.n() || vector.iter().all(Zero::is_zero) {
                    return Ok(false);
                }
                let kills = eval_apply(zero, point, vector)?.iter().all(Zero::is_zero);
                Ok(kills && bareiss(&eval(other, point)?).det.is_some_and(|x| !x.is_zero()))
            }
            AssocCertificate::Unknown { .. } => Ok(false),
        }
    }

    pub(crate) fn retarget(&mut self, d: usize) -> Result<()> {
        if let AssocCertificate::Yes { p, q, p_inv, q_inv } = self {
            for g in [p, q, p_inv, q_inv] {
                for row in g.iter_mut() {
                    for e in row.iter_mut() {
                        *e = e.with_nvars(d)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn poly_from(d: usize, words: &[Word], coeffs: &[Scalar]) -> NcPoly {
    NcPoly::from_terms(d, words.iter().cloned().zip(coeffs.iter().cloned()))
}

/// Solves `sum_k c_k * terms[k] = target` where each unknown polynomial `a_k`
/// (degree <= deg) enters through `lhs[k](w)` for each basis word `w`;
/// equations are indexed by `(row, word)`.
fn solve_linear<F>(d: usize, deg: usize, unknowns: usize, column: F, target: &SparseVec<(usize, Word)>) -> Option<Vec<NcPoly>>
where
    F: Fn(usize, &NcPoly) -> Vec<NcPoly>,
{
    let words = words_up_to(d, deg);
    let mut span = EchelonSpan::new(true);
    for k in 0..unknowns {
        for w in &words {
            let mut col: SparseVec<(usize, Word)> = SparseVec::new();
            for (row, poly) in column(k, &NcPoly::word(d, w.clone())).into_iter().enumerate() {
                for (u, c) in poly.terms() {
                    col.insert((row, u.clone()), c.clone());
                }
            }
            span.insert(&col);
        }
    }
    let red = span.reduce(target);
    if !red.remainder.is_empty() {
        return None;
    }
    let mut out = vec![NcPoly::zero(d); unknowns];
    for (idx, c) in red.combo {
        out[idx / words.len()].add_term(words[idx % words.len()].clone(), c);
    }
    Some(out)
}

fn unit_target(rows: &[bool]) -> SparseVec<(usize, Word)> {
    rows.iter()
        .enumerate()
        .filter(|(_, &one)| one)
        .map(|(r, _)| ((r, Word::empty()), scalar::one()))
        .collect()
}

/// Bounded search for the transforming matrices.
///
/// Looks for `b, b'` with `p b' = b q` and `u', v'` with `u' b' + v' q = 1`;
/// then `P = [[b, p], [-v', u']]` and `Q = [[u', -1], [1 - b' u', b']]`
/// satisfy the identity and `Q` is invertible by construction. `P^{-1}` is
/// found by a further bounded solve.
fn yes_search(p: &NcPoly, q: &NcPoly, bound: usize, sampler: &mut Sampler) -> Result<Option<AssocCertificate>> {
    let d = p.nvars();
    let one = NcPoly::one(d);
    for deg in 0..=bound {
        let words = words_up_to(d, deg);
        // columns: p*w for b', -w*q for b
        let mut rows: std::collections::BTreeMap<Word, usize> = std::collections::BTreeMap::new();
        let mut cols: Vec<NcPoly> = Vec::new();
        for w in &words {
            cols.push(p * &NcPoly::word(d, w.clone()));
        }
        for w in &words {
            cols.push(-(&NcPoly::word(d, w.clone()) * q));
        }
        for c in &cols {
            for (u, _) in c.terms() {
                let n = rows.len();
                rows.entry(u.clone()).or_insert(n);
            }
        }
        let mut m = QMatrix::zeros(rows.len(), cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (u, x) in c.terms() {
                m[(rows[u], j)] = x.clone();
            }
        }
        let basis = kernel(&m);
        if basis.is_empty() {
            continue;
        }
        let mut candidates = basis.clone();
        if basis.len() > 1 {
            let sum: QVector = (0..cols.len()).map(|i| basis.iter().map(|b| b[i].clone()).sum()).collect();
            candidates.push(sum);
            for _ in 0..10 {
                let mut c = vec![Scalar::zero(); cols.len()];
                for b in &basis {
                    let t = sampler.scalar();
                    for (ci, bi) in c.iter_mut().zip(b) {
                        *ci += &t * bi;
                    }
                }
                candidates.push(c);
            }
        }
        let n = words.len();
        for cand in candidates {
            let bp = poly_from(d, &words, &cand[..n]);
            let b = poly_from(d, &words, &cand[n..]);
            if bp.is_zero() || b.is_zero() {
                continue;
            }
            for du in 0..=bound {
                // u' b' + v' q = 1
                let Some(uv) =
                    solve_linear(d, du, 2, |k, w| vec![if k == 0 { w * &bp } else { w * q }], &unit_target(&[true]))
                else {
                    continue;
                };
                let (u1, v1) = (uv[0].clone(), uv[1].clone());
                let pm: Grid = [[b.clone(), p.clone()], [-&v1, u1.clone()]];
                let qm: Grid = [[u1.clone(), -&one], [&one - &(&bp * &u1), bp.clone()]];
                let qi: Grid = [[bp.clone(), one.clone()], [&(&u1 * &bp) - &one, u1.clone()]];
                let Some(pi) = invert(&pm, bound)? else { continue };
                let cert = AssocCertificate::Yes { p: pm, q: qm, p_inv: pi, q_inv: qi };
                if cert.verify(p, q)? {
                    return Ok(Some(cert));
                }
                break;
            }
        }
    }
    Ok(None)
}

/// Two-sided inverse with entries of degree <= bound, if one exists.
fn invert(m: &Grid, bound: usize) -> Result<Option<Grid>> {
    let d = m[0][0].nvars();
    for deg in 0..=bound {
        let mut cols: Vec<NcPoly> = Vec::new();
        let mut ok = true;
        for j in 0..2 {
            // m * (r_0j, r_1j)^t = e_j
            let target = unit_target(&[j == 0, j == 1]);
            let sol = solve_linear(d, deg, 2, |k, w| vec![&m[0][k] * w, &m[1][k] * w], &target);
            match sol {
                Some(s) => cols.extend(s),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let r: Grid = [[cols[0].clone(), cols[2].clone()], [cols[1].clone(), cols[3].clone()]];
            let id = diag(d, &NcPoly::one(d));
            if grid_mul(&r, m)? == id {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

fn no_search(p: &NcPoly, q: &NcPoly, b: &AssocBounds) -> Result<Option<AssocCertificate>> {
    let d = p.nvars();
    let mut sampler = Sampler::with_range(b.seed, EntryRange { k: 2, q: 1 });
    for n in 1..=b.n_max {
        for _ in 0..b.samples {
            let x = sampler.tuple(n, d);
            let px = eval(p, &x)?;
            let qx = eval(q, &x)?;
            let dp = bareiss(&px).det.expect("square");
            let dq = bareiss(&qx).det.expect("square");
            let (side, m) = match (dp.is_zero(), dq.is_zero()) {
                (true, false) => (Side::P, &px),
                (false, true) => (Side::Q, &qx),
                _ => continue,
            };
            let vector = kernel(m).into_iter().next().expect("singular matrix has a kernel");
            let cert = AssocCertificate::No { point: x, vector, singular: side };
            if cert.verify(p, q)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// Semi-decision for stable association of `p` and `q`.
pub fn stable_assoc(p: &NcPoly, q: &NcPoly, bounds: AssocBounds) -> Result<AssocCertificate> {
    let d = p.nvars();
    if q.nvars() != d {
        return Err(Error::DimensionMismatch("p and q in different variable counts".into()));
    }
    if p.is_constant() || q.is_constant() {
        return Err(Error::Precondition("stable association needs nonconstant inputs".into()));
    }
    if p == q {
        let id = diag(d, &NcPoly::one(d));
        return Ok(AssocCertificate::Yes { p: id.clone(), q: id.clone(), p_inv: id.clone(), q_inv: id });
    }
    let bound = bounds.degree.unwrap_or(p.deg0() + q.deg0());
    if let Some(c) = no_search(p, q, &bounds)? {
        return Ok(c);
    }
    let mut sampler = Sampler::new(bounds.seed);
    if let Some(c) = yes_search(p, q, bound, &mut sampler)? {
        return Ok(c);
    }
    Ok(AssocCertificate::Unknown { degree_bound: bound, n_max: bounds.n_max, samples: bounds.samples })
}

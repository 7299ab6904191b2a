use num_traits::Zero;

use super::evaluate::eval;
use super::tuple::MatTuple;
use crate::error::{Error, Result};
use crate::linalg::{bareiss, QMatrix, QVector};
use crate::poly::NcPoly;
use crate::scalar::Scalar;

/// Exact data of one polynomial at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointValues {
    pub value: QMatrix,
    pub det: Scalar,
    pub trace: Scalar,
    /// `f(X) v`, when `v` was supplied.
    pub applied: Option<QVector>,
    /// `u^t f(X) v`, when both `u` and `v` were supplied.
    pub pairing: Option<Scalar>,
}

/// Membership of the point in each kind of zero set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroFlags {
    pub zero: bool,
    pub det: bool,
    pub trace: bool,
    pub directional: Option<bool>,
    pub weak: Option<bool>,
}

impl ZeroFlags {
    fn of(values: &[&PointValues]) -> Self {
        ZeroFlags {
            zero: values.iter().all(|p| p.value.is_zero()),
            det: values.iter().all(|p| p.det.is_zero()),
            trace: values.iter().all(|p| p.trace.is_zero()),
            directional: values
                .iter()
                .map(|p| p.applied.as_ref().map(|a| a.iter().all(Zero::is_zero)))
                .try_fold(true, |acc, x| x.map(|x| acc && x)),
            weak: values
                .iter()
                .map(|p| p.pairing.as_ref().map(Zero::is_zero))
                .try_fold(true, |acc, x| x.map(|x| acc && x)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub generators: Vec<PointValues>,
    pub target: Option<PointValues>,
    /// Flags for the joint zero sets of the generators.
    pub generator_flags: ZeroFlags,
    pub target_flags: Option<ZeroFlags>,
}

fn values(f: &NcPoly, x: &MatTuple, u: Option<&[Scalar]>, v: Option<&[Scalar]>) -> Result<PointValues> {
    let value = eval(f, x)?;
    let det = bareiss(&value).det.expect("square");
    let trace = value.trace();
    let applied = v.map(|v| value.mul_vec(v));
    let pairing = match (u, &applied) {
        (Some(u), Some(a)) => Some(u.iter().zip(a).map(|(p, q)| p * q).sum()),
        _ => None,
    };
    Ok(PointValues { value, det, trace, applied, pairing })
}

/// Evaluates generators and an optional target at `X` and reports which zero
/// sets (true, determinantal, tracial, directional, weak) contain the point.
pub fn classify_point(
    fs: &[NcPoly],
    g: Option<&NcPoly>,
    x: &MatTuple,
    u: Option<&[Scalar]>,
    v: Option<&[Scalar]>,
) -> Result<PointReport> {
    for vec in [u, v].into_iter().flatten() {
        if vec.len() != x.n() {
            return Err(Error::DimensionMismatch(format!("vector of length {} for n = {}", vec.len(), x.n())));
        }
    }
    let generators = fs.iter().map(|f| values(f, x, u, v)).collect::<Result<Vec<_>>>()?;
    let target = g.map(|g| values(g, x, u, v)).transpose()?;
    let generator_flags = ZeroFlags::of(&generators.iter().collect::<Vec<_>>());
    let target_flags = target.as_ref().map(|t| ZeroFlags::of(&[t]));
    Ok(PointReport { generators, target, generator_flags, target_flags })
}

use num_traits::Zero;

use super::{check_nvars, Witness};
use crate::error::{Error, Result};
use crate::eval::eval_apply;
use crate::linalg::{solve_span, EchelonSpan, SpanSolution};
use crate::poly::NcPoly;
use crate::sample::Sampler;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanSearch {
    pub n_max: usize,
    pub seed: u64,
    /// Sampled points per matrix size.
    pub tries: usize,
}

impl SpanSearch {
    pub fn new(seed: u64) -> Self {
        SpanSearch { n_max: 3, seed, tries: 25 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanOutcome {
    /// `g = sum coefficients[j] f_j`.
    Coefficients(Vec<Scalar>),
    /// `u^t f_j(X) v = 0` for every `j`, `u^t g(X) v != 0`.
    Witness(Witness),
    Unknown { n_max: usize },
}

/// Decides `g in span{f_j}`; on failure searches for a weak-zero witness.
pub fn span_membership(fs: &[NcPoly], g: &NcPoly, search: SpanSearch) -> Result<SpanOutcome> {
    let d = check_nvars(fs, g)?;
    let mut span = EchelonSpan::new(true);
    for f in fs {
        span.insert(&f.to_sparse());
    }
    let red = span.reduce(&g.to_sparse());
    if red.remainder.is_empty() {
        let mut coeffs = vec![Scalar::zero(); fs.len()];
        for (j, c) in red.combo {
            coeffs[j] = c;
        }
        let mut check = NcPoly::zero(d);
        for (c, f) in coeffs.iter().zip(fs) {
            check.add_scaled(f, c);
        }
        if &check != g {
            return Err(Error::Internal("span coefficients do not reproduce the target".into()));
        }
        return Ok(SpanOutcome::Coefficients(coeffs));
    }
    let mut sampler = Sampler::new(search.seed);
    for n in 1..=search.n_max {
        for _ in 0..search.tries {
            let x = sampler.tuple(n, d);
            let v = sampler.vector(n);
            let cols = fs.iter().map(|f| eval_apply(f, &x, &v)).collect::<Result<Vec<_>>>()?;
            let target = eval_apply(g, &x, &v)?;
            if let SpanSolution::NotInSpan { complement_functional } = solve_span(&cols, &target)? {
                let w = Witness::at(x, Some(complement_functional), Some(v), fs, g)?;
                if !w.separates(fs, g)? {
                    return Err(Error::Internal("weak-zero witness fails its own check".into()));
                }
                return Ok(SpanOutcome::Witness(w));
            }
        }
    }
    Ok(SpanOutcome::Unknown { n_max: search.n_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::scalar::int;

    fn p(s: &str) -> NcPoly {
        parse(s, 2).unwrap()
    }

    #[test]
    fn coefficients() {
        let got = span_membership(&[p("x1"), p("x2")], &p("2*x1 + 3*x2"), SpanSearch::new(0)).unwrap();
        assert_eq!(got, SpanOutcome::Coefficients(vec![int(2), int(3)]));
        let got = span_membership(&[], &p("0"), SpanSearch::new(0)).unwrap();
        assert_eq!(got, SpanOutcome::Coefficients(vec![]));
    }

    #[test]
    fn square_outside_span_of_variables() {
        let fs = [p("x1"), p("x2")];
        let g = p("x1^2");
        let SpanOutcome::Witness(w) = span_membership(&fs, &g, SpanSearch::new(1)).unwrap() else { panic!() };
        assert!(w.point.n() <= 3);
        assert!(w.separates(&fs, &g).unwrap());
    }
}

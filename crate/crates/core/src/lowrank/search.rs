use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::exactify::exactify_rank;
use super::{eval_f64, FMatTuple};
use crate::error::{Error, Result};
use crate::eval::MatTuple;
use crate::poly::NcPoly;
use crate::sample::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub target_rank: usize,
    pub restarts: usize,
    pub max_iters: usize,
    /// Objective value counted as converged.
    pub tol: f64,
    /// Initial step of the backtracking line search.
    pub step: f64,
    pub seed: u64,
    pub max_den: u64,
}

impl SearchConfig {
    pub fn new(target_rank: usize, seed: u64) -> Self {
        SearchConfig { target_rank, restarts: 20, max_iters: 5000, tol: 1e-12, step: 0.1, seed, max_den: 1000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best: FMatTuple,
    pub objective: f64,
    pub restart: usize,
    pub iterations: usize,
    /// Exact point with exact rank at most the target, when confirmed.
    pub exact: Option<(MatTuple, usize)>,
}

fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Sum of squared singular values beyond the first `r`.
pub fn tail_objective(m: &DMatrix<f64>, r: usize) -> f64 {
    singular_values(m).iter().skip(r).map(|s| s * s).sum()
}

struct Problem<'a> {
    f: &'a NcPoly,
    n: usize,
    d: usize,
    r: usize,
}

impl Problem<'_> {
    fn value(&self, xs: &[f64]) -> f64 {
        tail_objective(&eval_f64(self.f, &FMatTuple::from_flat(self.n, self.d, xs)), self.r)
    }

    /// Central differences with step `1e-6 (1 + |x_i|)`.
    fn gradient(&self, xs: &[f64]) -> Vec<f64> {
        let mut work = xs.to_vec();
        (0..xs.len())
            .map(|i| {
                let h = 1e-6 * (1.0 + xs[i].abs());
                work[i] = xs[i] + h;
                let up = self.value(&work);
                work[i] = xs[i] - h;
                let down = self.value(&work);
                work[i] = xs[i];
                (up - down) / (2.0 * h)
            })
            .collect()
    }
}

/// Backtracking gradient descent from `x0`; returns the final point, its
/// objective and the iteration count.
fn descend(p: &Problem, x0: Vec<f64>, cfg: &SearchConfig) -> (Vec<f64>, f64, usize) {
    let mut x = x0;
    let mut fx = p.value(&x);
    let mut step = cfg.step;
    let mut iters = 0;
    while iters < cfg.max_iters && fx >= cfg.tol {
        iters += 1;
        let g = p.gradient(&x);
        let gg: f64 = g.iter().map(|v| v * v).sum();
        if gg == 0.0 || !gg.is_finite() {
            break;
        }
        let mut accepted = false;
        while step > 1e-18 {
            let y: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a - step * b).collect();
            let fy = p.value(&y);
            if fy.is_finite() && fy <= fx - 1e-4 * step * gg {
                x = y;
                fx = fy;
                step *= 2.0;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (x, fx, iters)
}

/// Minimises the squared tail singular values of `f(X)` over `n x n` tuples,
/// then tries to turn the best point into an exact one of rank <= r.
pub fn lowrank_search(f: &NcPoly, n: usize, cfg: &SearchConfig) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::Precondition("matrix size must be at least 1".into()));
    }
    if cfg.restarts == 0 {
        return Err(Error::Precondition("at least one restart is required".into()));
    }
    let d = f.nvars();
    let p = Problem { f, n, d, r: cfg.target_rank };
    let mut sampler = Sampler::new(cfg.seed);
    let mut best: Option<(Vec<f64>, f64, usize, usize)> = None;
    for restart in 0..cfg.restarts {
        let x0: Vec<f64> = (0..n * n * d).map(|_| sampler.rng().random_range(-2.0..=2.0)).collect();
        let (x, fx, iters) = descend(&p, x0, cfg);
        if best.as_ref().is_none_or(|b| fx < b.1) {
            best = Some((x, fx, restart, iters));
        }
    }
    let (x, objective, restart, iterations) = best.expect("restarts >= 1");
    let best = FMatTuple::from_flat(n, d, &x);
    let exact = if objective < cfg.tol { exactify_rank(f, &best, cfg.target_rank, cfg.max_den)? } else { None };
    Ok(SearchResult { best, objective, restart, iterations, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn tail_of_identity() {
        assert!((tail_objective(&DMatrix::identity(3, 3), 1) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_variable_reaches_zero() {
        let f = parse("x1", 1).unwrap();
        let mut cfg = SearchConfig::new(0, 7);
        cfg.restarts = 2;
        let r = lowrank_search(&f, 2, &cfg).unwrap();
        assert!(r.objective < 1e-12);
        let (x, rank) = r.exact.expect("exact zero");
        assert_eq!(rank, 0);
        assert!(crate::eval::eval(&f, &x).unwrap().is_zero());
    }

    #[test]
    fn constant_cannot_drop_rank() {
        let f = parse("1", 1).unwrap();
        let mut cfg = SearchConfig::new(1, 1);
        cfg.restarts = 2;
        cfg.max_iters = 20;
        let r = lowrank_search(&f, 2, &cfg).unwrap();
        assert!(r.objective >= 1.0 - 1e-9);
        assert!(r.exact.is_none());
    }
}

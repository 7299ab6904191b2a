//! Rational solutions of the small polynomial systems left over by the
//! factorisation ansatz.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cpoly::{CPoly, Monomial};
use crate::roots::rational_roots;
use crate::scalar::Scalar;

const MAX_LEAVES: usize = 256;

#[derive(Clone, Debug, Default)]
pub(crate) struct Solutions {
    /// Each point assigns every variable that occurs; absent ones are free
    /// and set to 0.
    pub points: Vec<BTreeMap<u32, Scalar>>,
    /// False when some branch could not be resolved, so rational solutions
    /// may be missing.
    pub complete: bool,
}

/// All rational solutions of `eqs = 0`, with free variables fixed at zero.
pub(crate) fn solve(eqs: &[CPoly]) -> Solutions {
    let mut out = Solutions { points: vec![], complete: true };
    rec(eqs.to_vec(), vec![], &mut out);
    out
}

fn finish(assigned: &[(u32, CPoly)]) -> BTreeMap<u32, Scalar> {
    let mut vals: BTreeMap<u32, Scalar> = BTreeMap::new();
    for (v, p) in assigned.iter().rev() {
        let x = p.eval(&|u| vals.get(&u).cloned().unwrap_or_else(Scalar::zero));
        vals.insert(*v, x);
    }
    vals
}

fn rec(eqs: Vec<CPoly>, assigned: Vec<(u32, CPoly)>, out: &mut Solutions) {
    if out.points.len() >= MAX_LEAVES {
        out.complete = false;
        return;
    }
    let mut eqs: Vec<CPoly> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
    if eqs.iter().any(|e| e.as_constant().is_some()) {
        return;
    }
    eqs.sort_by_key(|e| (e.total_degree(), e.len()));
    eqs.dedup();
    if eqs.is_empty() {
        out.points.push(finish(&assigned));
        return;
    }
    // linear in some variable with a constant coefficient
    for e in &eqs {
        for v in e.variables() {
            if e.degree_in(v) != 1 {
                continue;
            }
            let cs = e.coefficients_in(v);
            let Some(a) = cs[1].as_constant() else { continue };
            let value = cs[0].scale(&(-a.recip()));
            return branch(&eqs, &assigned, v, value, out);
        }
    }
    // univariate: branch over rational roots
    if let Some(e) = eqs.iter().find(|e| e.variables().len() == 1) {
        let v = e.variables()[0];
        let coeffs: Vec<Scalar> =
            e.coefficients_in(v).iter().map(|c| c.as_constant().expect("univariate")).collect();
        match rational_roots(&coeffs) {
            Some(roots) => {
                for r in roots {
                    branch(&eqs, &assigned, v, CPoly::constant(r), out);
                }
            }
            None => out.complete = false,
        }
        return;
    }
    // single monomial: one of its variables vanishes
    if let Some(e) = eqs.iter().find(|e| e.len() == 1) {
        let (m, _): (&Monomial, _) = e.terms().next().expect("one term");
        for v in m.vars().collect::<Vec<_>>() {
            branch(&eqs, &assigned, v, CPoly::zero(), out);
        }
        return;
    }
    out.complete = false;
}

fn branch(eqs: &[CPoly], assigned: &[(u32, CPoly)], v: u32, value: CPoly, out: &mut Solutions) {
    let next: Vec<CPoly> = eqs.iter().map(|e| e.substitute(v, &value)).collect();
    let mut a = assigned.to_vec();
    a.push((v, value));
    rec(next, a, out);
}

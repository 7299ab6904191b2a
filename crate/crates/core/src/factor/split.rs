//! Two-factor splits `p = g h` with prescribed degrees, by solving for the
//! homogeneous components of `g` and `h` from the top down.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::params;
use crate::cpoly::CPoly;
use crate::linalg::{bareiss, rref_with_transform, QMatrix};
use crate::poly::NcPoly;
use crate::scalar::Scalar;
use crate::word::{words_of_length, Word};

type Component = BTreeMap<Word, CPoly>;

#[derive(Clone, Debug, Default)]
pub(crate) struct Splits {
    /// Pairs `(g, h)` with `g` monic, `g h = p`, both nonconstant.
    pub pairs: Vec<(NcPoly, NcPoly)>,
    pub complete: bool,
}

/// Every split of the monic polynomial `p` into two nonconstant factors.
pub(crate) fn splits(p: &NcPoly) -> Splits {
    let deg = p.deg0();
    let mut out = Splits { pairs: vec![], complete: true };
    for a in 1..deg {
        let s = split_at(p, a);
        out.complete &= s.complete;
        for pair in s.pairs {
            if !out.pairs.contains(&pair) {
                out.pairs.push(pair);
            }
        }
    }
    out
}

fn add_to(c: &mut Component, w: Word, x: CPoly) {
    if x.is_zero() {
        return;
    }
    let e = c.entry(w.clone()).or_insert_with(CPoly::zero);
    *e = &*e + &x;
    if e.is_zero() {
        c.remove(&w);
    }
}

fn split_at(p: &NcPoly, a: usize) -> Splits {
    let d = p.nvars();
    let deg = p.deg0();
    let b = deg - a;
    let none = Splits { pairs: vec![], complete: true };

    // The top component must be a rank-one tensor g_a (x) h_b.
    let prefixes = words_of_length(d, a);
    let suffixes = words_of_length(d, b);
    let row_of: BTreeMap<&Word, usize> = prefixes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let col_of: BTreeMap<&Word, usize> = suffixes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = QMatrix::zeros(prefixes.len(), suffixes.len());
    for (w, c) in p.top_component().terms() {
        m[(row_of[&w.prefix(a)], col_of[&w.suffix_from(a)])] = c.clone();
    }
    if bareiss(&m).rank != 1 {
        return none;
    }
    let lead = (0..prefixes.len()).rev().find(|&i| m.row(i).iter().any(|x| !x.is_zero())).expect("nonzero top");
    let j0 = m.row(lead).iter().position(|x| !x.is_zero()).expect("nonzero row");
    let pivot = m[(lead, j0)].clone();

    let mut g: Vec<Component> = vec![Component::new(); a + 1];
    let mut h: Vec<Component> = vec![Component::new(); b + 1];
    for (i, u) in prefixes.iter().enumerate() {
        add_to(&mut g[a], u.clone(), CPoly::constant(&m[(i, j0)] / &pivot));
    }
    for (j, v) in suffixes.iter().enumerate() {
        add_to(&mut h[b], v.clone(), CPoly::constant(m[(lead, j)].clone()));
    }

    let mut next_var = 0u32;
    let mut constraints: Vec<CPoly> = Vec::new();
    for t in 1..=deg {
        let k = deg - t;
        let mut rhs: Component = Component::new();
        for (w, c) in p.homogeneous_component(k).terms() {
            add_to(&mut rhs, w.clone(), CPoly::constant(c.clone()));
        }
        for s in 1..t {
            if s > a || t - s > b {
                continue;
            }
            for (u, cu) in &g[a - s] {
                for (v, cv) in &h[b - (t - s)] {
                    add_to(&mut rhs, u.concat(v), -&(cu * cv));
                }
            }
        }
        // unknowns: g_{a-t} then h_{b-t}
        let g_words = if t <= a { words_of_length(d, a - t) } else { vec![] };
        let h_words = if t <= b { words_of_length(d, b - t) } else { vec![] };
        if g_words.is_empty() && h_words.is_empty() {
            constraints.extend(rhs.into_values());
            continue;
        }
        let rows = words_of_length(d, k);
        let row_index: BTreeMap<&Word, usize> = rows.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let ncols = g_words.len() + h_words.len();
        let mut lmat = QMatrix::zeros(rows.len(), ncols);
        for (c, u) in g_words.iter().enumerate() {
            for (v, x) in &h[b] {
                lmat[(row_index[&u.concat(v)], c)] += x.as_constant().expect("constant top");
            }
        }
        for (c, v) in h_words.iter().enumerate() {
            for (u, x) in &g[a] {
                lmat[(row_index[&u.concat(v)], g_words.len() + c)] += x.as_constant().expect("constant top");
            }
        }
        let rhs_vec: Vec<CPoly> = rows.iter().map(|w| rhs.get(w).cloned().unwrap_or_else(CPoly::zero)).collect();
        let (r, tm) = rref_with_transform(&lmat);
        let y: Vec<CPoly> = (0..rows.len())
            .map(|i| {
                let mut acc = CPoly::zero();
                for (j, x) in rhs_vec.iter().enumerate() {
                    let c = &tm[(i, j)];
                    if !c.is_zero() && !x.is_zero() {
                        acc = &acc + &x.scale(c);
                    }
                }
                acc
            })
            .collect();
        let rank = r.rank();
        constraints.extend(y[rank..].iter().cloned());
        let mut z: Vec<CPoly> = vec![CPoly::zero(); ncols];
        let pivot_set: std::collections::BTreeSet<usize> = r.pivots.iter().copied().collect();
        for c in 0..ncols {
            if !pivot_set.contains(&c) {
                z[c] = CPoly::var(next_var);
                next_var += 1;
            }
        }
        for (row, &pc) in r.pivots.iter().enumerate() {
            let mut val = y[row].clone();
            for c in 0..ncols {
                if !pivot_set.contains(&c) {
                    let coef = &r.matrix[(row, c)];
                    if !coef.is_zero() {
                        val = &val - &z[c].scale(coef);
                    }
                }
            }
            z[pc] = val;
        }
        for (c, u) in g_words.iter().enumerate() {
            add_to(&mut g[a - t], u.clone(), z[c].clone());
        }
        for (c, v) in h_words.iter().enumerate() {
            add_to(&mut h[b - t], v.clone(), z[g_words.len() + c].clone());
        }
    }

    let sols = params::solve(&constraints);
    let mut out = Splits { pairs: vec![], complete: sols.complete };
    let build = |comps: &[Component], vals: &BTreeMap<u32, Scalar>| -> NcPoly {
        let mut poly = NcPoly::zero(d);
        for comp in comps {
            for (w, c) in comp {
                poly.add_term(w.clone(), c.eval(&|v| vals.get(&v).cloned().unwrap_or_else(Scalar::zero)));
            }
        }
        poly
    };
    for vals in sols.points {
        let gp = build(&g, &vals);
        let hp = build(&h, &vals);
        if &(&gp * &hp) == p && !out.pairs.contains(&(gp.clone(), hp.clone())) {
            out.pairs.push((gp, hp));
        }
    }
    out
}

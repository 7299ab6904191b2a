use crate::error::{Error, Result};
use crate::linalg::EchelonSpan;
use crate::poly::NcPoly;
use crate::word::{words_of_length, Word};

/// Reduced generating set of a left ideal with no element whose leading
/// homogeneous part is a left combination of the others' (of no larger
/// degree). For such a family every ideal element `sum a_i b_i` has degree
/// `max deg(a_i b_i)`.
#[derive(Clone, Debug)]
pub struct WeakBasis {
    pub elements: Vec<NcPoly>,
    /// `elements[k] = sum_j expressions[k][j] * f[j]`.
    pub expressions: Vec<Vec<NcPoly>>,
}

/// Reduces `fs` to a weakly independent family generating the same left
/// ideal, tracking how each element is built from the inputs.
pub fn weak_basis(fs: &[NcPoly]) -> Result<WeakBasis> {
    let Some(d) = fs.first().map(NcPoly::nvars) else {
        return Ok(WeakBasis { elements: vec![], expressions: vec![] });
    };
    if fs.iter().any(|f| f.nvars() != d) {
        return Err(Error::DimensionMismatch("generators with different variable counts".into()));
    }
    let unit = |j: usize| -> Vec<NcPoly> {
        (0..fs.len()).map(|k| if k == j { NcPoly::one(d) } else { NcPoly::zero(d) }).collect()
    };
    let mut elems: Vec<(NcPoly, Vec<NcPoly>)> =
        fs.iter().enumerate().filter(|(_, f)| !f.is_zero()).map(|(j, f)| (f.clone(), unit(j))).collect();

    'outer: loop {
        for i in 0..elems.len() {
            let deg = elems[i].0.deg0();
            let mut span = EchelonSpan::new(true);
            let mut tags: Vec<(usize, Word)> = Vec::new();
            for (h, (p, _)) in elems.iter().enumerate() {
                let dh = p.deg0();
                if h == i || dh > deg {
                    continue;
                }
                let top = p.top_component();
                for w in words_of_length(d, deg - dh) {
                    span.insert(&top.left_mul_word(&w).to_sparse());
                    tags.push((h, w));
                }
            }
            let red = span.reduce(&elems[i].0.top_component().to_sparse());
            if !red.remainder.is_empty() {
                continue;
            }
            let (mut p, mut expr) = elems[i].clone();
            for (g, c) in &red.combo {
                let (h, w) = &tags[*g];
                let neg = -c.clone();
                p.add_scaled(&elems[*h].0.left_mul_word(w), &neg);
                for (e, eh) in expr.iter_mut().zip(&elems[*h].1) {
                    e.add_scaled(&eh.left_mul_word(w), &neg);
                }
            }
            debug_assert!(p.degree() < elems[i].0.degree());
            if p.is_zero() {
                elems.remove(i);
            } else {
                elems[i] = (p, expr);
            }
            continue 'outer;
        }
        break;
    }
    let (elements, expressions) = elems.into_iter().unzip();
    Ok(WeakBasis { elements, expressions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> NcPoly {
        parse(s, 2).unwrap()
    }

    #[test]
    fn expressions_reproduce_elements() {
        let fs = vec![p("x1*x2 + x1"), p("x2 + 1"), p("x1^2*x2 - 3")];
        let wb = weak_basis(&fs).unwrap();
        for (e, expr) in wb.elements.iter().zip(&wb.expressions) {
            let mut acc = NcPoly::zero(2);
            for (c, f) in expr.iter().zip(&fs) {
                acc = &acc + &(c * f);
            }
            assert_eq!(&acc, e);
        }
        // x1*(x2+1) = x1*x2 + x1, and x1^2*x2 - 3 reduces to -x1^2 - 3 then
        // nothing further: the basis is {x2 + 1, x1^2 + 3} up to scaling.
        assert_eq!(wb.elements.len(), 2);
    }

    #[test]
    fn duplicates_collapse() {
        let wb = weak_basis(&[p("x1 - 1"), p("x1 - 1"), p("0")]).unwrap();
        assert_eq!(wb.elements, vec![p("x1 - 1")]);
    }
}

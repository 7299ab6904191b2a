use num_traits::{One, Zero};
use proptest::prelude::*;

use nczero::cert::{
    gns_witness, in_univariate_subalgebra, left_ideal_membership, span_membership, trace_membership, Certificate,
    CompositionOutcome, Membership, SpanSearch, TraceBranch, TraceOutcome,
};
use nczero::eval::{eval, MatTuple};
use nczero::linalg::{bareiss, rational_reconstruct, rref, solve_span, QMatrix, SpanSolution};
use nczero::lowrank::{lowrank_search, SearchConfig};
use nczero::parse::parse;
use nczero::sample::Sampler;
use nczero::scalar::{frac, int};
use nczero::{Error, NcPoly, Scalar, Word};

fn poly(d: usize, max_deg: usize, terms: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((prop::collection::vec(0..d, 0..=max_deg), -3i64..=3), 0..=terms)
        .prop_map(move |ts| NcPoly::from_terms(d, ts.into_iter().map(|(w, c)| (Word::from_letters(w), int(c)))))
}

fn matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec((-4i64..=4, 1i64..=3), n * n).prop_map(move |es| {
        let rows = es.chunks(n).map(|r| r.iter().map(|&(p, q)| frac(p, q)).collect()).collect();
        QMatrix::from_rows(rows).unwrap()
    })
}

fn tuple(n: usize, d: usize) -> impl Strategy<Value = MatTuple> {
    prop::collection::vec(matrix(n), d).prop_map(|ms| MatTuple::new(ms).unwrap())
}

/// Cofactor expansion along the first row.
fn naive_det(a: &QMatrix) -> Scalar {
    let n = a.rows();
    if n == 0 {
        return Scalar::one();
    }
    let mut acc = Scalar::zero();
    for j in 0..n {
        let minor: Vec<Vec<Scalar>> =
            (1..n).map(|i| (0..n).filter(|&k| k != j).map(|k| a.row(i)[k].clone()).collect()).collect();
        let m = naive_det(&QMatrix::from_rows(minor).unwrap_or(QMatrix::zeros(0, 0)));
        let term = &a.row(0)[j] * m;
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn trace_of(f: &NcPoly, x: &MatTuple) -> Scalar {
    eval(f, x).unwrap().trace()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(2, 3, 4), q in poly(2, 3, 4), r in poly(2, 2, 3)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &NcPoly::one(2), p.clone());
    }

    #[test]
    fn format_parse_round_trip(p in poly(3, 4, 6)) {
        prop_assert_eq!(parse(&p.format(), 3).unwrap(), p);
    }

    #[test]
    fn cyclic_reduce_is_linear_and_kills_commutators(p in poly(2, 4, 5), q in poly(2, 3, 4), a in -3i64..=3, b in -3i64..=3) {
        let (a, b) = (int(a), int(b));
        let combo = &p.scale(&a) + &q.scale(&b);
        prop_assert_eq!(combo.cyclic_reduce(), &p.cyclic_reduce().scale(&a) + &q.cyclic_reduce().scale(&b));
        prop_assert!(p.commutator(&q).cyclic_reduce().is_zero());
        prop_assert_eq!(p.cyclic_reduce().cyclic_reduce(), p.cyclic_reduce());
    }

    #[test]
    fn commutator_sums_are_traceless(p in poly(2, 2, 3), q in poly(2, 2, 3), x in tuple(3, 2)) {
        let c = p.commutator(&q);
        prop_assert!(trace_of(&c, &x).is_zero());
    }

    #[test]
    fn bareiss_agrees_with_naive(a in matrix(4), b in matrix(4)) {
        let ba = bareiss(&a);
        prop_assert_eq!(ba.rank, rref(&a).rank());
        prop_assert_eq!(ba.det.clone().unwrap(), naive_det(&a));
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(bareiss(&ab).det.unwrap(), ba.det.unwrap() * bareiss(&b).det.unwrap());
        prop_assert!(bareiss(&ab).rank <= ba.rank.min(bareiss(&b).rank));
    }

    #[test]
    fn reconstruct_recovers_small_fractions(p in -500i64..=500, q in 1i64..=60) {
        let x = p as f64 / q as f64;
        prop_assert_eq!(rational_reconstruct(x, 100).unwrap(), Some(frac(p, q)));
    }

    #[test]
    fn eval_is_a_homomorphism(p in poly(2, 3, 4), q in poly(2, 3, 4), x in tuple(3, 2)) {
        let (px, qx) = (eval(&p, &x).unwrap(), eval(&q, &x).unwrap());
        prop_assert_eq!(eval(&(&p * &q), &x).unwrap(), px.checked_mul(&qx).unwrap());
        let sum = eval(&(&p + &q), &x).unwrap();
        let direct: Vec<Scalar> = px.entries().iter().zip(qx.entries()).map(|(a, b)| a + b).collect();
        prop_assert_eq!(sum.entries(), &direct[..]);
        prop_assert_eq!(eval(&NcPoly::one(2), &x).unwrap(), QMatrix::identity(3));
    }

    #[test]
    fn eval_respects_conjugation_and_direct_sums(f in poly(2, 3, 4), x in tuple(2, 2), y in tuple(3, 2), seed in any::<u64>()) {
        let s = Sampler::new(seed).invertible(2);
        let s_inv = nczero::linalg::rref_with_transform(&s).1;
        let conj = x.conjugate(&s, &s_inv);
        let fx = eval(&f, &x).unwrap();
        prop_assert_eq!(eval(&f, &conj).unwrap(), s_inv.checked_mul(&fx).unwrap().checked_mul(&s).unwrap());
        let sum = x.direct_sum(&y).unwrap();
        prop_assert_eq!(eval(&f, &sum).unwrap(), fx.direct_sum(&eval(&f, &y).unwrap()));
    }

    #[test]
    fn left_membership_is_sound_both_ways(fs in prop::collection::vec(poly(2, 2, 3), 1..=2), g in poly(2, 3, 4)) {
        prop_assume!(fs.iter().all(|f| !f.is_zero()));
        match left_ideal_membership(&fs, &g).unwrap() {
            Membership::Combination(c) => {
                prop_assert_eq!(c.expand(&fs, 2).unwrap(), g.clone());
                prop_assert!(matches!(gns_witness(&fs, &g), Err(Error::Precondition(_))));
            }
            Membership::Witness(w) => {
                prop_assert!(w.separates(&fs, &g).unwrap());
            }
        }
    }

    #[test]
    fn composition_matches_brute_force(f in poly(2, 2, 3), g in poly(2, 4, 5)) {
        prop_assume!(f.deg0() >= 1);
        let got = in_univariate_subalgebra(&g, &f, None).unwrap();
        // brute force: g in span{f^0, ..., f^m} as coefficient vectors
        let m = g.deg0() / f.deg0();
        let powers: Vec<NcPoly> = (0..=m).map(|i| f.pow(i)).collect();
        let mut words: Vec<Word> = powers.iter().chain([&g]).flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
        words.sort();
        words.dedup();
        let vec_of = |p: &NcPoly| words.iter().map(|w| p.coeff(w)).collect::<Vec<_>>();
        let basis: Vec<_> = powers.iter().map(vec_of).collect();
        let member = matches!(solve_span(&basis, &vec_of(&g)).unwrap(), SpanSolution::InSpan(_));
        match got {
            CompositionOutcome::Member(c) => {
                prop_assert!(member);
                let mut acc = NcPoly::zero(2);
                for (i, ci) in c.iter().enumerate() {
                    acc.add_scaled(&f.pow(i), ci);
                }
                prop_assert_eq!(acc, g);
            }
            CompositionOutcome::NotMember(_) => prop_assert!(!member),
        }
    }

    #[test]
    fn tracial_certificates_match_traces(fs in prop::collection::vec(poly(2, 3, 3), 1..=2), g in poly(2, 3, 3), x in tuple(2, 2)) {
        if let TraceOutcome::Member(c) = trace_membership(&fs, &g).unwrap() {
            prop_assert!(c.verify(&fs, &g).unwrap());
            let lhs = match c.branch {
                TraceBranch::GInSpan => trace_of(&g, &x),
                TraceBranch::OneInSpan => int(2),
            };
            let rhs: Scalar = fs.iter().zip(&c.lambdas).map(|(f, l)| l * trace_of(f, &x)).sum();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn certificates_survive_json(fs in prop::collection::vec(poly(2, 2, 3), 1..=2), g in poly(2, 3, 3)) {
        prop_assume!(fs.iter().all(|f| !f.is_zero()));
        let result = left_ideal_membership(&fs, &g).unwrap();
        let cert = Certificate::LeftIdeal { d: 2, generators: fs, target: g, result };
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(back.verify().unwrap().is_verified());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn seeded_searches_are_deterministic(seed in any::<u64>()) {
        let fs = [parse("x1", 2).unwrap(), parse("x2", 2).unwrap()];
        let g = parse("x1*x2", 2).unwrap();
        let a = span_membership(&fs, &g, SpanSearch::new(seed)).unwrap();
        let b = span_membership(&fs, &g, SpanSearch::new(seed)).unwrap();
        prop_assert_eq!(a, b);
        let f = parse("1 - [x1,x2]", 2).unwrap();
        let cfg = SearchConfig { restarts: 2, max_iters: 200, ..SearchConfig::new(1, seed) };
        let r1 = lowrank_search(&f, 2, &cfg).unwrap();
        let r2 = lowrank_search(&f, 2, &cfg).unwrap();
        prop_assert_eq!(r1, r2);
    }
}

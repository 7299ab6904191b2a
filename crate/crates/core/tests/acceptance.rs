//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use nczero::cert::{
    hom_ideal_membership, in_univariate_subalgebra, left_ideal_membership, gns_witness, span_membership,
    trace_membership, CompositionOutcome, Membership, SpanOutcome, SpanSearch, TraceBranch, TraceOutcome, Value,
    Witness,
};
use nczero::eval::{eval, generic_eval, pi_test, standard_poly, weyl_pair, MatTuple, DEFAULT_TERM_CAP};
use nczero::factor::{factor, stable_assoc, AssocBounds, AssocCertificate, FactorConfig};
use nczero::linalg::{bareiss, QMatrix};
use nczero::lowrank::{lowrank_search, verify_known_witnesses, SearchConfig};
use nczero::parse::parse;
use nczero::sample::Sampler;
use nczero::scalar::int;
use nczero::word::words_of_length;
use nczero::{Error, NcPoly, Scalar};

type Outcome = Result<String, String>;

/// Number, name, check, runtime limit in seconds.
type Criterion = (u32, &'static str, fn() -> Outcome, u64);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T>(r: nczero::Result<T>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn rank(m: &QMatrix) -> usize {
    bareiss(m).rank
}

/// Values recomputed from scratch, without trusting the witness fields.
fn witness_value(w: &Witness, f: &NcPoly) -> Result<Value, String> {
    let m = e(eval(f, &w.point))?;
    Ok(match (&w.u, &w.v) {
        (None, None) => Value::Matrix(m),
        (None, Some(v)) => Value::Vector(m.mul_vec(v)),
        (Some(u), Some(v)) => Value::Scalar(u.iter().zip(m.mul_vec(v)).map(|(a, b)| a * b).sum()),
        _ => return Err("malformed witness".into()),
    })
}

fn independent_separation(w: &Witness, fs: &[NcPoly], g: &NcPoly) -> Result<bool, String> {
    for f in fs {
        if !witness_value(w, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(!witness_value(w, g)?.is_zero())
}

fn c1() -> Outcome {
    let f = parse("1 - [x1,x2]", 2).unwrap();
    for n in 2..=50 {
        let v = e(eval(&f, &e(weyl_pair(n))?))?;
        let target = QMatrix::unit(n, n - 1, n - 1).scale(&int(n as i64));
        check(v == target, format!("n={n}: value is not n*E_nn"))?;
        check(rank(&v) == 1, format!("n={n}: rank is not 1"))?;
    }
    Ok("n=2..50 value n*E_nn, rank 1".into())
}

fn c2() -> Outcome {
    let report = e(verify_known_witnesses())?;
    check(report.ranks == vec![1, 1], format!("ranks {:?}", report.ranks))?;
    check(report.identity_on_2x2, "identity fails on 2x2 matrices")?;
    // Independent check: [X1,X2]^2 + det([X1,X2]) I = 0 for generic 2x2.
    let c = parse("[x1,x2]", 2).unwrap();
    let cm = e(generic_eval(&c, 2, DEFAULT_TERM_CAP))?;
    let c2m = e(generic_eval(&c.pow(2), 2, DEFAULT_TERM_CAP))?;
    let det = &(&cm.entries[0] * &cm.entries[3]) - &(&cm.entries[1] * &cm.entries[2]);
    for i in 0..2 {
        for j in 0..2 {
            let mut s = c2m.entries[i * 2 + j].clone();
            if i == j {
                s = &s + &det;
            }
            check(s.is_zero(), "generic identity has a nonzero entry")?;
        }
    }
    Ok(format!("ranks {:?}, 2x2 identity holds symbolically", report.ranks))
}

fn c3() -> Outcome {
    let s4 = e(standard_poly(4))?;
    let s3 = e(standard_poly(3))?;
    check(e(pi_test(&s4, 2))?, "s4 should vanish on 2x2")?;
    check(!e(pi_test(&s4, 3))?, "s4 should not vanish on 3x3")?;
    check(!e(pi_test(&s3, 2))?, "s3 should not vanish on 2x2")?;
    Ok("s4 on 2x2 true, s4 on 3x3 false, s3 on 2x2 false".into())
}

fn random_generators(s: &mut Sampler, d: usize) -> Vec<NcPoly> {
    let k = 1 + s.below(3);
    (0..k).map(|_| s.nonzero_poly(d, 2, 3)).collect()
}

fn c4() -> Outcome {
    let mut s = Sampler::new(4004);
    let (mut members, mut witnesses) = (0, 0);
    for inst in 0..200 {
        let d = 1 + s.below(3);
        let fs = random_generators(&mut s, d);
        let mut g = NcPoly::zero(d);
        for f in &fs {
            let room = 4usize.saturating_sub(f.deg0());
            let p = s.poly(d, room, 3);
            g = &g + &(&p * f);
        }
        // (a) constructed member
        match left_ideal_membership(&fs, &g) {
            Ok(Membership::Combination(c)) => {
                check(c.is_left(), format!("instance {inst}: non-left cofactors"))?;
                check(e(c.expand(&fs, d))? == g, format!("instance {inst}: combination does not expand to g"))?;
                members += 1;
            }
            Ok(Membership::Witness(_)) => return Err(format!("instance {inst}: member reported as non-member")),
            Err(err) => return Err(format!("instance {inst}: error {err}")),
        }
        match gns_witness(&fs, &g) {
            Err(Error::Precondition(_)) => {}
            other => return Err(format!("instance {inst}: witness construction on a member gave {other:?}")),
        }
        // (b) perturbed
        let len = s.below(5);
        let w = s.word(d, len);
        let mut h = g.clone();
        h.add_term(w, int(1 + s.below(3) as i64));
        match left_ideal_membership(&fs, &h) {
            Ok(Membership::Combination(c)) => {
                check(e(c.expand(&fs, d))? == h, format!("instance {inst}: perturbed combination wrong"))?;
                members += 1;
                check(gns_witness(&fs, &h).is_err(), format!("instance {inst}: both answers produced"))?;
            }
            Ok(Membership::Witness(w)) => {
                check(w.v.is_some() && w.u.is_none(), format!("instance {inst}: witness is not directional"))?;
                check(independent_separation(&w, &fs, &h)?, format!("instance {inst}: witness does not separate"))?;
                witnesses += 1;
            }
            Err(Error::Internal(m)) => return Err(format!("instance {inst}: internal error {m}")),
            Err(err) => return Err(format!("instance {inst}: error {err}")),
        }
    }
    Ok(format!("200 instances, {members} combinations, {witnesses} witnesses, all verified"))
}

fn homogeneous_word_vanishing(x: &MatTuple, len: usize) -> Result<bool, String> {
    let d = x.d();
    for w in words_of_length(d, len) {
        if !e(eval(&NcPoly::word(d, w), x))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c5() -> Outcome {
    let x1 = parse("x1", 1).unwrap();
    let x1sq = parse("x1^2", 1).unwrap();
    match e(hom_ideal_membership(std::slice::from_ref(&x1sq), &x1))? {
        Membership::Witness(w) => {
            check(independent_separation(&w, std::slice::from_ref(&x1sq), &x1)?, "x1 not in (x1^2): bad witness")?;
            check(homogeneous_word_vanishing(&w.point, 2)?, "x1 not in (x1^2): witness not nilpotent")?;
        }
        _ => return Err("x1 reported in (x1^2)".into()),
    }
    match e(hom_ideal_membership(std::slice::from_ref(&x1), &x1sq))? {
        Membership::Combination(c) => check(e(c.expand(std::slice::from_ref(&x1), 1))? == x1sq, "x1^2 in (x1): bad combination")?,
        _ => return Err("x1^2 reported outside (x1)".into()),
    }
    let mut s = Sampler::new(5005);
    let (mut members, mut witnesses) = (0, 0);
    for inst in 0..100 {
        let d = 1 + s.below(3);
        let delta = 2 + s.below(2);
        let k = 1 + s.below(2);
        let fs: Vec<NcPoly> = (0..k)
            .map(|_| {
                let deg = 1 + s.below(2);
                s.homogeneous_poly(d, deg, 2)
            })
            .collect();
        let mut g = NcPoly::zero(d);
        for f in &fs {
            let rest = delta - f.deg0();
            let a = s.below(rest + 1);
            let u = s.word(d, a);
            let v = s.word(d, rest - a);
            g = &g + &f.sandwich(&u, &v).scale(&int(s.int(1, 3)));
        }
        if !g.is_zero() {
            match hom_ideal_membership(&fs, &g) {
                Ok(Membership::Combination(c)) => {
                    check(e(c.expand(&fs, d))? == g, format!("instance {inst}: combination wrong"))?;
                    members += 1;
                }
                other => return Err(format!("instance {inst}: member gave {other:?}")),
            }
        }
        let mut h = g.clone();
        let w = s.word(d, delta);
        h.add_term(w, int(1));
        if h.is_zero() {
            continue;
        }
        match hom_ideal_membership(&fs, &h) {
            Ok(Membership::Combination(c)) => {
                check(e(c.expand(&fs, d))? == h, format!("instance {inst}: perturbed combination wrong"))?;
                members += 1;
            }
            Ok(Membership::Witness(w)) => {
                check(independent_separation(&w, &fs, &h)?, format!("instance {inst}: witness does not separate"))?;
                let bound = (0..=delta).map(|i| d.pow(i as u32)).sum::<usize>();
                check(w.point.n() <= bound, format!("instance {inst}: witness size {} > {bound}", w.point.n()))?;
                check(homogeneous_word_vanishing(&w.point, delta + 1)?, format!("instance {inst}: not nilpotent"))?;
                witnesses += 1;
            }
            Err(err) => return Err(format!("instance {inst}: error {err}")),
        }
    }
    Ok(format!("x1 vs (x1^2) ok, 100 random: {members} combinations, {witnesses} nilpotent witnesses"))
}

fn trace_consistency(fs: &[NcPoly], g: &NcPoly, lambdas: &[Scalar], branch: TraceBranch, s: &mut Sampler) -> Result<(), String> {
    let d = g.nvars();
    for _ in 0..100 {
        let n = 1 + s.below(3);
        let x = s.tuple(n, d);
        let lhs = match branch {
            TraceBranch::GInSpan => e(eval(g, &x))?.trace(),
            TraceBranch::OneInSpan => int(n as i64),
        };
        let mut rhs = Scalar::zero();
        for (f, l) in fs.iter().zip(lambdas) {
            rhs += l * e(eval(f, &x))?.trace();
        }
        check(lhs == rhs, "trace identity fails at a sampled point")?;
    }
    Ok(())
}

fn c6() -> Outcome {
    let mut s = Sampler::new(6006);
    let f = vec![parse("1 - [x1,x2]", 2).unwrap()];
    for _ in 0..5 {
        let g = s.nonzero_poly(2, 3, 4);
        match e(trace_membership(&f, &g))? {
            TraceOutcome::Member(c) => {
                check(c.branch == TraceBranch::OneInSpan, "expected the 1-in-span branch")?;
                let mut residual = NcPoly::one(2);
                for (fj, l) in f.iter().zip(&c.lambdas) {
                    residual = &residual - &fj.scale(l);
                }
                for (p, q) in &c.commutators {
                    residual = &residual - &p.commutator(q);
                }
                check(residual.is_zero(), "1-in-span residual is nonzero")?;
                check(residual.cyclic_reduce().is_zero(), "cyclic residual nonzero")?;
                trace_consistency(&f, &g, &c.lambdas, c.branch, &mut s)?;
            }
            TraceOutcome::NotMember => return Err("1 - [x1,x2] tracial set reported nonempty".into()),
        }
    }
    let f2 = vec![parse("x1*x2", 2).unwrap()];
    let g2 = parse("x2*x1", 2).unwrap();
    match e(trace_membership(&f2, &g2))? {
        TraceOutcome::Member(c) => {
            check(c.branch == TraceBranch::GInSpan && c.lambdas == vec![Scalar::one()], "expected g-in-span with lambda 1")?;
            let mut residual = g2.clone();
            residual = &residual - &f2[0];
            for (p, q) in &c.commutators {
                residual = &residual - &p.commutator(q);
            }
            check(residual.is_zero(), "x2x1 residual nonzero")?;
            trace_consistency(&f2, &g2, &c.lambdas, c.branch, &mut s)?;
        }
        TraceOutcome::NotMember => return Err("x2x1 reported outside".into()),
    }
    Ok("1 - [x1,x2] gives 1-in-span, x2x1 vs x1x2 gives lambda 1, traces consistent".into())
}

fn c7() -> Outcome {
    let mut s = Sampler::new(7007);
    let mut done = 0;
    while done < 100 {
        let d = 1 + s.below(3);
        let k = 1 + s.below(4);
        let fs: Vec<NcPoly> = (0..k).map(|_| s.nonzero_poly(d, 3, 3)).collect();
        // only independent generator sets, so the coefficients are unique
        let mut words: Vec<_> = fs.iter().flat_map(|f| f.terms().map(|(w, _)| w.clone())).collect();
        words.sort();
        words.dedup();
        let rows: Vec<Vec<Scalar>> = fs.iter().map(|f| words.iter().map(|w| f.coeff(w)).collect()).collect();
        if rank(&QMatrix::from_rows(rows).unwrap()) < k {
            continue;
        }
        let cs: Vec<Scalar> = (0..k).map(|_| s.scalar()).collect();
        let mut g = NcPoly::zero(d);
        for (f, c) in fs.iter().zip(&cs) {
            g.add_scaled(f, c);
        }
        match span_membership(&fs, &g, SpanSearch::new(done as u64)) {
            Ok(SpanOutcome::Coefficients(got)) => check(got == cs, format!("instance {done}: coefficients differ"))?,
            other => return Err(format!("instance {done}: {other:?}")),
        }
        done += 1;
    }
    let fs = vec![parse("x1", 2).unwrap(), parse("x2", 2).unwrap()];
    let g = parse("x1^2", 2).unwrap();
    let mut found = vec![];
    for seed in 1..=5u64 {
        if let SpanOutcome::Witness(w) = e(span_membership(&fs, &g, SpanSearch::new(seed)))? {
            check(w.point.n() <= 3, "witness larger than 3")?;
            check(w.u.is_some() && w.v.is_some(), "witness is not a weak-zero pair")?;
            check(independent_separation(&w, &fs, &g)?, format!("seed {seed}: witness does not separate"))?;
            found.push(w.point.n());
        }
    }
    check(!found.is_empty(), "no witness for x1^2 on any of 5 seeds")?;
    Ok(format!("100 span round trips exact, x1^2 witness found on {}/5 seeds, sizes {found:?}", found.len()))
}

fn c8() -> Outcome {
    let f = parse("x1*x2*x1 + x1", 2).unwrap();
    let fs = e(factor(&f, FactorConfig::default()))?;
    check(fs.len() == 2, format!("{} factorizations", fs.len()))?;
    for fz in &fs {
        check(e(fz.verify(&f))?, "factorization product differs")?;
    }
    let a = parse("x1*x2 + 1", 2).unwrap();
    let b = parse("x2*x1 + 1", 2).unwrap();
    let cert = e(stable_assoc(&a, &b, AssocBounds::new(8)))?;
    check(cert.is_yes() && e(cert.verify(&a, &b))?, "stable association not certified")?;
    if let AssocCertificate::Yes { p, q, .. } = &cert {
        // P diag(b,1) Q == diag(a,1), multiplied out by hand
        let one = NcPoly::one(2);
        let zero = NcPoly::zero(2);
        let m = [[&b, &zero], [&zero, &one]];
        let mut pm = vec![vec![NcPoly::zero(2); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    pm[i][j] = &pm[i][j] + &(&p[i][k] * m[k][j]);
                }
            }
        }
        let want = [[&a, &zero], [&zero, &one]];
        for i in 0..2 {
            for j in 0..2 {
                let mut s = NcPoly::zero(2);
                for k in 0..2 {
                    s = &s + &(&pm[i][k] * &q[k][j]);
                }
                check(&s == want[i][j], "P diag(q,1) Q is not diag(p,1)")?;
            }
        }
    }
    Ok("two factorizations, x1x2+1 ~ x2x1+1 certified".into())
}

fn c9() -> Outcome {
    let mut s = Sampler::new(9009);
    for inst in 0..50 {
        let d = 1 + s.below(2);
        let f = loop {
            let f = s.nonzero_poly(d, 3, 3);
            if f.deg0() >= 1 {
                break f;
            }
        };
        let m = 1 + s.below(3);
        let mut cs: Vec<Scalar> = (0..=m).map(|_| s.scalar()).collect();
        cs[m] = s.nonzero_scalar();
        let mut g = NcPoly::zero(d);
        for (i, c) in cs.iter().enumerate() {
            g.add_scaled(&f.pow(i), c);
        }
        match e(in_univariate_subalgebra(&g, &f, None))? {
            CompositionOutcome::Member(mut got) => {
                while got.len() > cs.len() && got.last().is_some_and(Zero::is_zero) {
                    got.pop();
                }
                check(got == cs, format!("instance {inst}: coefficients differ"))?;
            }
            CompositionOutcome::NotMember(_) => return Err(format!("instance {inst}: member reported outside")),
        }
    }
    Ok("50 instances recovered exactly".into())
}

fn c10() -> Outcome {
    let f = parse("1 - [x1,x2]", 2).unwrap();
    let cfg = SearchConfig::new(1, 2024);
    let res = e(lowrank_search(&f, 4, &cfg))?;
    check(res.objective < 1e-12, format!("objective {:e}", res.objective))?;
    let (x, r) = res.exact.clone().ok_or("no exact rank-1 point")?;
    let v = e(eval(&f, &x))?;
    let got = rank(&v);
    check(got <= 1 && got == r, format!("exact rank {got}"))?;
    Ok(format!("objective {:.2e} at restart {}, exact rank {got}", res.objective, res.restart))
}

fn c11() -> Outcome {
    let mut s = Sampler::new(1111);
    let mut evals = 0;
    for inst in 0..100 {
        let d = 1 + s.below(3);
        let fs = random_generators(&mut s, d);
        let k = 1 + s.below(3);
        let mut g = NcPoly::zero(d);
        for _ in 0..k {
            let j = s.below(fs.len());
            let p = s.poly(d, 1, 2);
            let q = s.poly(d, 1, 2);
            g = &g + &(&(&p * &fs[j]) * &q);
        }
        for _ in 0..100 {
            let n = 1 + s.below(4);
            let x = s.tuple(n, d);
            let rmax = fs.iter().map(|f| eval(f, &x).map(|m| rank(&m))).collect::<nczero::Result<Vec<_>>>();
            let rmax = e(rmax)?.into_iter().max().unwrap_or(0);
            let rg = rank(&e(eval(&g, &x))?);
            check(rg <= k * rmax, format!("instance {inst}: rank {rg} > {k}*{rmax}"))?;
            evals += 1;
        }
    }
    Ok(format!("{evals} evaluations satisfy rank g(X) <= K max rank f_j(X)"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "weyl pair rank one", c1, 10),
        (2, "rank-one witnesses for 1 - [x1,[x1,x2]^2]", c2, 60),
        (3, "polynomial identity test", c3, 60),
        (4, "left ideal membership", c4, 600),
        (5, "homogeneous two-sided membership", c5, 600),
        (6, "tracial membership", c6, 600),
        (7, "linear span and weak zeros", c7, 600),
        (8, "factorization and stable association", c8, 600),
        (9, "univariate subalgebra", c9, 600),
        (10, "low-rank search", c10, 120),
        (11, "ideal members have bounded rank", c11, 600),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let t = Instant::now();
        let out = run();
        let took = t.elapsed();
        let out = match out {
            Ok(msg) if took > Duration::from_secs(limit) => Err(format!("{msg}; took {took:.1?} > {limit}s")),
            other => other,
        };
        match out {
            Ok(msg) => println!("criterion {id:>2} PASS  {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {msg} ({took:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}

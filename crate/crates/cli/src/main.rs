use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use nczero::cert::{
    hom_ideal_membership, in_univariate_subalgebra, left_ideal_membership, span_membership, trace_membership,
    Certificate, CompositionOutcome, EigenSearch, LinearAnswer, Membership, SpanOutcome, SpanSearch, TraceOutcome,
    Verification,
};
use nczero::eval::{classify_point, eval, pi_test, weyl_pair, MatTuple, ZeroFlags};
use nczero::factor::{
    detzero_inclusion, factor, stable_assoc, AssocBounds, AssocCertificate, DetZeroVerdict, FactorConfig,
};
use nczero::linalg::{rank_det_kernel, QVector};
use nczero::lowrank::{lowrank_search, rank_profile, trace_witness_search, verify_known_witnesses, SearchConfig};
use nczero::{parse::parse, scalar, NcPoly};

mod record;

use record::{check_writable, write_outputs, Inputs, Outcome, Status};

/// Exact decision procedures and certificates for zero sets of
/// noncommutative polynomials on matrix tuples.
///
/// Exit status: 0 decided or verified, 2 unknown within the search bounds,
/// 1 usage or data error.
#[derive(Parser)]
#[command(name = "nczero", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the certificate (or data document) here, plus a `.run.json` record.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Allow overwriting existing output files.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "subcommand")]
enum Command {
    /// Evaluate a polynomial at a matrix tuple.
    Eval(EvalArgs),
    /// Report which zero sets contain a point.
    Classify(ClassifyArgs),
    /// Left ideal membership with a cofactor or directional-zero certificate.
    MemberLeft(IdealArgs),
    /// Two-sided membership for homogeneous generators.
    MemberHom(IdealArgs),
    /// Membership in span of generators plus commutators.
    MemberTrace(TraceArgs),
    /// Linear span membership, with a weak-zero witness search.
    MemberSpan(SpanArgs),
    /// Membership of g in the univariate subalgebra generated by f.
    MemberComp(CompArgs),
    /// All complete factorizations.
    Factor(FactorArgs),
    /// Stable association of two polynomials.
    Assoc(AssocArgs),
    /// Inclusion of determinantal zero sets via factor matching.
    Detzero(DetZeroArgs),
    /// Polynomial identity test on n x n matrices.
    Pi(PiArgs),
    /// Print the Weyl pair of size n.
    Weyl(WeylArgs),
    /// Minimum observed exact rank for a range of sizes.
    Rankprofile(ProfileArgs),
    /// Numerical search for a low-rank value, with exact confirmation.
    Lowrank(LowrankArgs),
    /// Re-check a certificate file.
    VerifyCert(VerifyArgs),
    /// Check the known rank-one witnesses of 1 - [x1,[x1,x2]^2].
    PaperWitnesses,
}

#[derive(Args, Serialize)]
struct Vars {
    /// Number of variables.
    #[arg(short = 'd', long = "vars")]
    d: usize,
}

#[derive(Args, Serialize)]
struct EvalArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "poly")]
    f: String,
    /// Matrix tuple file.
    #[arg(short = 'x', long = "point")]
    x: PathBuf,
}

#[derive(Args, Serialize)]
struct ClassifyArgs {
    #[command(flatten)]
    vars: Vars,
    /// Generator; repeat for several.
    #[arg(short = 'f', long = "gen", required = true)]
    f: Vec<String>,
    #[arg(short = 'g', long = "target")]
    g: Option<String>,
    #[arg(short = 'x', long = "point")]
    x: PathBuf,
    /// Left vector, comma separated rationals.
    #[arg(short = 'u', long)]
    u: Option<String>,
    /// Right vector, comma separated rationals.
    #[arg(short = 'v', long)]
    v: Option<String>,
}

#[derive(Args, Serialize)]
struct IdealArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "gen", required = true)]
    f: Vec<String>,
    #[arg(short = 'g', long = "target")]
    g: String,
}

#[derive(Args, Serialize)]
struct TraceArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// On a negative answer, search numerically for a tracial witness of this size.
    #[arg(long, requires = "seed")]
    search_n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Serialize)]
struct SpanArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// Sampled points per matrix size.
    #[arg(long, default_value_t = 25)]
    tries: usize,
}

#[derive(Args, Serialize)]
struct CompArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "poly")]
    f: String,
    #[arg(short = 'g', long = "target")]
    g: String,
    /// Search for an eigen-witness on a negative answer.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
}

#[derive(Args, Serialize)]
struct FactorArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "poly")]
    f: String,
    /// Degree above which irreducibility is not searched.
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
}

#[derive(Args, Serialize)]
struct Bounds {
    /// Seed of the sampled searches; fixed, recorded default.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Degree bound for transformation matrices (default deg p + deg q).
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

impl Bounds {
    fn get(&self) -> AssocBounds {
        AssocBounds { degree: self.degree, n_max: self.n_max, samples: self.samples, seed: self.seed }
    }
}

#[derive(Args, Serialize)]
struct AssocArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'p')]
    p: String,
    #[arg(short = 'q')]
    q: String,
    #[command(flatten)]
    bounds: Bounds,
}

#[derive(Args, Serialize)]
struct DetZeroArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    #[command(flatten)]
    bounds: Bounds,
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
}

#[derive(Args, Serialize)]
struct PiArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "poly")]
    f: String,
    #[arg(short = 'n', long = "size")]
    n: usize,
}

#[derive(Args, Serialize)]
struct WeylArgs {
    #[arg(short = 'n', long = "size")]
    n: usize,
}

#[derive(Args, Serialize)]
struct ProfileArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "poly")]
    f: String,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Random samples per size.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Args, Serialize)]
struct LowrankArgs {
    #[command(flatten)]
    vars: Vars,
    #[arg(short = 'f', long = "poly")]
    f: String,
    #[arg(short = 'n', long = "size")]
    n: usize,
    /// Target rank.
    #[arg(short = 'r', long = "rank", default_value_t = 1)]
    r: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    restarts: usize,
    #[arg(long, default_value_t = 5000)]
    max_iters: usize,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Largest denominator tried when rounding to exact values.
    #[arg(long, default_value_t = 1000)]
    max_den: u64,
}

#[derive(Args, Serialize)]
struct VerifyArgs {
    file: PathBuf,
}

fn poly(inputs: &mut Inputs, role: &str, text: &str, d: usize) -> anyhow::Result<NcPoly> {
    inputs.text(role, text);
    parse(text, d).with_context(|| format!("parsing {role} `{text}`"))
}

fn polys(inputs: &mut Inputs, texts: &[String], d: usize) -> anyhow::Result<Vec<NcPoly>> {
    texts.iter().enumerate().map(|(i, t)| poly(inputs, &format!("f[{}]", i + 1), t, d)).collect()
}

fn tuple(inputs: &mut Inputs, path: &Path, d: usize) -> anyhow::Result<MatTuple> {
    let text = inputs.read("point", path)?;
    let x = MatTuple::from_json(&text).with_context(|| format!("reading tuple {}", path.display()))?;
    if x.d() != d {
        bail!("tuple has {} matrices but -d is {d}", x.d());
    }
    Ok(x)
}

fn vector(inputs: &mut Inputs, role: &str, text: &str) -> anyhow::Result<QVector> {
    inputs.text(role, text);
    text.split(',').map(|t| scalar::parse(t.trim()).with_context(|| format!("bad entry `{t}` in {role}"))).collect()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn flags_text(f: &ZeroFlags) -> String {
    let mut s = format!("zero {}, det {}, trace {}", yes(f.zero), yes(f.det), yes(f.trace));
    if let Some(dir) = f.directional {
        s += &format!(", directional {}", yes(dir));
    }
    if let Some(w) = f.weak {
        s += &format!(", weak {}", yes(w));
    }
    s
}

fn membership_outcome(cert: Certificate, result: &Membership, fs: &[NcPoly], kind: &str) -> Outcome {
    match result {
        Membership::Combination(c) => {
            let mut s = String::from("member: g =");
            for (k, t) in c.terms.iter().enumerate() {
                let sep = if k == 0 { " " } else { "\n    + " };
                s += &format!("{sep}({}) * f{} * ({})", t.left, t.generator + 1, t.right);
            }
            if c.terms.is_empty() {
                s += " 0";
            }
            Outcome::new(Status::Decided, "member", s).artifact(cert)
        }
        Membership::Witness(w) => {
            let s = format!(
                "not a member: {kind} witness of size {} annihilating all {} generators",
                w.point.n(),
                fs.len()
            );
            Outcome::new(Status::Decided, "not_member", s).artifact(cert)
        }
    }
}

fn run(cmd: &Command, inputs: &mut Inputs) -> anyhow::Result<Outcome> {
    Ok(match cmd {
        Command::Eval(a) => {
            let d = a.vars.d;
            let f = poly(inputs, "f", &a.f, d)?;
            let x = tuple(inputs, &a.x, d)?;
            let v = eval(&f, &x)?;
            let rdk = rank_det_kernel(&v);
            let det = rdk.det.as_ref().map(scalar::render).unwrap_or_default();
            let s = format!("f(X) =\n{v}\nrank {}, det {det}, trace {}", rdk.rank, scalar::render(&v.trace()));
            Outcome::new(Status::Decided, format!("rank {}", rdk.rank), s).artifact(&v)
        }
        Command::Classify(a) => {
            let d = a.vars.d;
            let fs = polys(inputs, &a.f, d)?;
            let g = a.g.as_deref().map(|t| poly(inputs, "g", t, d)).transpose()?;
            let x = tuple(inputs, &a.x, d)?;
            let u = a.u.as_deref().map(|t| vector(inputs, "u", t)).transpose()?;
            let v = a.v.as_deref().map(|t| vector(inputs, "v", t)).transpose()?;
            if u.is_some() && v.is_none() {
                bail!("-u needs -v");
            }
            let r = classify_point(&fs, g.as_ref(), &x, u.as_deref(), v.as_deref())?;
            let mut s = format!("generators: {}", flags_text(&r.generator_flags));
            if let Some(t) = &r.target_flags {
                s += &format!("\ntarget:     {}", flags_text(t));
            }
            for (i, p) in r.generators.iter().enumerate() {
                s += &format!("\nf{}: rank {}, det {}, trace {}", i + 1, rank_det_kernel(&p.value).rank, scalar::render(&p.det), scalar::render(&p.trace));
            }
            #[derive(Serialize)]
            struct Flags {
                zero: bool,
                det: bool,
                trace: bool,
                directional: Option<bool>,
                weak: Option<bool>,
            }
            let conv = |f: &ZeroFlags| Flags { zero: f.zero, det: f.det, trace: f.trace, directional: f.directional, weak: f.weak };
            let doc = serde_json::json!({
                "generators": conv(&r.generator_flags),
                "target": r.target_flags.as_ref().map(conv),
            });
            Outcome::new(Status::Decided, "classified", s).artifact(doc)
        }
        Command::MemberLeft(a) => {
            let d = a.vars.d;
            let fs = polys(inputs, &a.f, d)?;
            let g = poly(inputs, "g", &a.g, d)?;
            let result = left_ideal_membership(&fs, &g)?;
            let cert = Certificate::LeftIdeal { d, generators: fs.clone(), target: g, result: result.clone() };
            membership_outcome(cert, &result, &fs, "directional")
        }
        Command::MemberHom(a) => {
            let d = a.vars.d;
            let fs = polys(inputs, &a.f, d)?;
            let g = poly(inputs, "g", &a.g, d)?;
            let result = hom_ideal_membership(&fs, &g)?;
            let cert = Certificate::HomogeneousIdeal { d, generators: fs.clone(), target: g, result: result.clone() };
            membership_outcome(cert, &result, &fs, "nilpotent")
        }
        Command::MemberTrace(a) => {
            let d = a.ideal.vars.d;
            let fs = polys(inputs, &a.ideal.f, d)?;
            let g = poly(inputs, "g", &a.ideal.g, d)?;
            match trace_membership(&fs, &g)? {
                TraceOutcome::Member(c) => {
                    let lam: Vec<String> = c.lambdas.iter().map(scalar::render).collect();
                    let s = format!(
                        "member ({}): lambdas [{}], {} commutators",
                        serde_json::to_value(c.branch)?.as_str().unwrap_or_default(),
                        lam.join(", "),
                        c.commutators.len()
                    );
                    Outcome::new(Status::Decided, "member", s).artifact(Certificate::Tracial {
                        d,
                        generators: fs,
                        target: g,
                        result: c,
                    })
                }
                TraceOutcome::NotMember => {
                    let mut o = Outcome::new(Status::Decided, "not_member", "not a member: neither 1 nor g is in the span");
                    if let (Some(n), Some(seed)) = (a.search_n, a.seed) {
                        let cfg = SearchConfig::new(0, seed);
                        match trace_witness_search(&fs, &g, n, &cfg)? {
                            Some(x) => {
                                o.summary += &format!("\nexact tracial witness of size {n} found");
                                o = o.details(x.to_file());
                            }
                            None => o.summary += &format!("\nno tracial witness found at size {n}"),
                        }
                    }
                    o
                }
            }
        }
        Command::MemberSpan(a) => {
            let d = a.ideal.vars.d;
            let fs = polys(inputs, &a.ideal.f, d)?;
            let g = poly(inputs, "g", &a.ideal.g, d)?;
            let search = SpanSearch { n_max: a.n_max, seed: a.seed, tries: a.tries };
            let (status, outcome, s, result) = match span_membership(&fs, &g, search)? {
                SpanOutcome::Coefficients(c) => {
                    let cs: Vec<String> = c.iter().map(scalar::render).collect();
                    (Status::Decided, "member", format!("member: coefficients [{}]", cs.join(", ")), Some(LinearAnswer::Coefficients { coefficients: c }))
                }
                SpanOutcome::Witness(w) => {
                    let s = format!("not a member: weak-zero witness of size {}", w.point.n());
                    (Status::Decided, "not_member", s, Some(LinearAnswer::Witness(w)))
                }
                SpanOutcome::Unknown { n_max } => {
                    (Status::Unknown, "unknown", format!("not in the span; no weak-zero witness up to size {n_max}"), None)
                }
            };
            let o = Outcome::new(status, outcome, s);
            match result {
                Some(result) => o.artifact(Certificate::Span { d, generators: fs, target: g, result }),
                None => o,
            }
        }
        Command::MemberComp(a) => {
            let d = a.vars.d;
            let f = poly(inputs, "f", &a.f, d)?;
            let g = poly(inputs, "g", &a.g, d)?;
            let search = a.seed.map(|seed| EigenSearch { seed, samples: a.samples, n_max: a.n_max });
            let cert = |result| Certificate::Composition { d, f: f.clone(), g: g.clone(), result };
            match in_univariate_subalgebra(&g, &f, search)? {
                CompositionOutcome::Member(c) => {
                    let cs: Vec<String> = c.iter().map(scalar::render).collect();
                    let s = format!("member: g = sum c_i f^i with c = [{}]", cs.join(", "));
                    Outcome::new(Status::Decided, "member", s).artifact(cert(LinearAnswer::Coefficients { coefficients: c }))
                }
                CompositionOutcome::NotMember(Some(w)) => {
                    let s = format!("not a member: eigen-witness of size {}, eigenvalue {}", w.point.n(), scalar::render(&w.eigenvalue));
                    Outcome::new(Status::Decided, "not_member", s).artifact(cert(LinearAnswer::Witness(w)))
                }
                CompositionOutcome::NotMember(None) => Outcome::new(Status::Decided, "not_member", "not a member"),
            }
        }
        Command::Factor(a) => {
            let d = a.vars.d;
            let f = poly(inputs, "f", &a.f, d)?;
            let all = factor(&f, FactorConfig { max_degree: a.max_degree })?;
            let mut s = format!("{} factorization(s)", all.len());
            for fz in &all {
                let parts: Vec<String> = fz.factors.iter().map(|x| format!("({})", x.poly)).collect();
                let star = if fz.is_certified() { "" } else { "  [irreducibility unverified]" };
                s += &format!("\n  {} * {}{star}", scalar::render(&fz.unit), parts.join(" * "));
            }
            let status = if all.iter().all(|fz| fz.is_certified()) { Status::Decided } else { Status::Unknown };
            let certs: Vec<Certificate> =
                all.into_iter().map(|result| Certificate::Factorization { d, input: f.clone(), result }).collect();
            Outcome::new(status, format!("{} factorizations", certs.len()), s).artifact(certs)
        }
        Command::Assoc(a) => {
            let d = a.vars.d;
            let p = poly(inputs, "p", &a.p, d)?;
            let q = poly(inputs, "q", &a.q, d)?;
            let c = stable_assoc(&p, &q, a.bounds.get())?;
            let cert = |result| Certificate::StableAssociation { d, p: p.clone(), q: q.clone(), result };
            match &c {
                AssocCertificate::Yes { p: pm, q: qm, .. } => {
                    let show = |m: &[[NcPoly; 2]; 2]| format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]);
                    let s = format!("stably associated: P diag(q,1) Q = diag(p,1)\n  P = {}\n  Q = {}", show(pm), show(qm));
                    Outcome::new(Status::Decided, "yes", s).artifact(cert(c))
                }
                AssocCertificate::No { point, singular, .. } => {
                    let side = if *singular == nczero::factor::Side::P { "p" } else { "q" };
                    let s = format!("not stably associated: {side}(X) singular at a point of size {} where the other is invertible", point.n());
                    Outcome::new(Status::Decided, "no", s).artifact(cert(c))
                }
                AssocCertificate::Unknown { degree_bound, n_max, samples } => Outcome::new(
                    Status::Unknown,
                    "unknown",
                    format!("unknown: degree bound {degree_bound}, sizes up to {n_max}, {samples} samples per size"),
                ),
            }
        }
        Command::Detzero(a) => {
            let d = a.ideal.vars.d;
            let fs = polys(inputs, &a.ideal.f, d)?;
            let g = poly(inputs, "g", &a.ideal.g, d)?;
            let c = detzero_inclusion(&fs, &g, a.bounds.get(), FactorConfig { max_degree: a.max_degree })?;
            let (status, outcome, s) = match &c.verdict {
                DetZeroVerdict::Yes { generator, .. } => (
                    Status::Decided,
                    "yes",
                    format!("included: every factor of f{} is stably associated to a factor of g", generator + 1),
                ),
                DetZeroVerdict::No { .. } => {
                    (Status::Decided, "no", "not included: each generator has a factor matched by no factor of g".into())
                }
                DetZeroVerdict::Unknown => (Status::Unknown, "unknown", "unknown within the search bounds".into()),
            };
            let o = Outcome::new(status, outcome, s);
            if status == Status::Decided {
                o.artifact(Certificate::DetZero { d, generators: fs, target: g, result: c })
            } else {
                o.details(c)
            }
        }
        Command::Pi(a) => {
            let f = poly(inputs, "f", &a.f, a.vars.d)?;
            let id = pi_test(&f, a.n)?;
            let s = format!("f vanishes identically on {0}x{0} matrices: {1}", a.n, id);
            Outcome::new(Status::Decided, id.to_string(), s)
        }
        Command::Weyl(a) => {
            let x = weyl_pair(a.n)?;
            let s = format!("X =\n{}\nY =\n{}", x.get(0), x.get(1));
            Outcome::new(Status::Decided, "weyl", s).artifact(x.to_file())
        }
        Command::Rankprofile(a) => {
            let f = poly(inputs, "f", &a.f, a.vars.d)?;
            if a.n_min > a.n_max {
                bail!("--n-min exceeds --n-max");
            }
            let ns: Vec<usize> = (a.n_min..=a.n_max).collect();
            let rows = rank_profile(&f, &ns, a.samples, a.seed)?;
            let mut s = String::from("   n  min rank  attained at");
            for r in &rows {
                s += &format!("\n{:>4}  {:>8}  {}", r.n, r.min_rank, serde_json::to_string(&r.attained_at)?);
            }
            Outcome::new(Status::Decided, "profile", s).artifact(&rows)
        }
        Command::Lowrank(a) => {
            let f = poly(inputs, "f", &a.f, a.vars.d)?;
            let cfg = SearchConfig {
                restarts: a.restarts,
                max_iters: a.max_iters,
                tol: a.tol,
                max_den: a.max_den,
                ..SearchConfig::new(a.r, a.seed)
            };
            let res = lowrank_search(&f, a.n, &cfg)?;
            let mut s = format!(
                "best objective {:.3e} (restart {}, {} iterations)",
                res.objective, res.restart, res.iterations
            );
            let status = match &res.exact {
                Some((x, r)) => {
                    s += &format!("\nexact point of size {} with rank f(X) = {r}", x.n());
                    Status::Decided
                }
                None => {
                    s += "\nno exact point confirmed";
                    Status::Unknown
                }
            };
            #[derive(Serialize)]
            struct Doc<'a> {
                objective: f64,
                restart: usize,
                iterations: usize,
                best: &'a nczero::lowrank::FMatTuple,
                exact: Option<nczero::eval::TupleFile>,
                exact_rank: Option<usize>,
            }
            let doc = Doc {
                objective: res.objective,
                restart: res.restart,
                iterations: res.iterations,
                best: &res.best,
                exact: res.exact.as_ref().map(|(x, _)| x.to_file()),
                exact_rank: res.exact.as_ref().map(|(_, r)| *r),
            };
            let outcome = match &res.exact {
                Some((_, r)) => format!("exact rank {r}"),
                None => "unknown".into(),
            };
            Outcome::new(status, outcome, s).artifact(doc)
        }
        Command::VerifyCert(a) => {
            let text = inputs.read("certificate", &a.file)?;
            let value: serde_json::Value = serde_json::from_str(&text).context("certificate is not JSON")?;
            let items = match value {
                serde_json::Value::Array(v) => v,
                v => vec![v],
            };
            if items.is_empty() {
                bail!("no certificates in {}", a.file.display());
            }
            let mut failures = Vec::new();
            for (i, item) in items.iter().enumerate() {
                let c = Certificate::from_json(&item.to_string()).with_context(|| format!("certificate {}", i + 1))?;
                if let Verification::Failed(why) = c.verify()? {
                    failures.push(format!("certificate {}: {why}", i + 1));
                }
            }
            if failures.is_empty() {
                Outcome::new(Status::Decided, "verified", format!("verified {} certificate(s)", items.len()))
            } else {
                Outcome::new(Status::Failed, "failed", format!("verification failed\n{}", failures.join("\n")))
            }
        }
        Command::PaperWitnesses => {
            let r = verify_known_witnesses()?;
            let mut s = format!("f = {}", r.polynomial);
            for (i, (rank, corner)) in r.ranks.iter().zip(&r.corner_values).enumerate() {
                s += &format!("\npair {}: rank {rank}, value n E_nn: {}", i + 1, yes(*corner));
            }
            s += &format!("\nf - 1 vanishes on 2x2 matrices: {}", yes(r.identity_on_2x2));
            let status = if r.passed() { Status::Decided } else { Status::Failed };
            Outcome::new(status, if r.passed() { "passed" } else { "failed" }, s).artifact(&r)
        }
    })
}

fn command_name(cmd: &Command) -> String {
    serde_json::to_value(cmd).ok().and_then(|v| v["subcommand"].as_str().map(String::from)).unwrap_or_default()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(out) = &cli.out {
        if let Err(e) = check_writable(out, cli.force) {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    }
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let outcome = match run(&cli.command, &mut inputs) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let wall = start.elapsed().as_secs_f64();
    println!("{}", outcome.summary);
    if let Some(out) = &cli.out {
        let config = serde_json::to_value(&cli.command).expect("arguments serialise");
        if let Err(e) = write_outputs(out, &command_name(&cli.command), &config, &inputs, &outcome, wall) {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(outcome.status.code() as u8)
}

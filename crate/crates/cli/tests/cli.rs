use std::path::Path;
use std::process::{Command, Output};

fn nczero(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nczero")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn verify(dir: &Path, file: &str) {
    let o = nczero(&["verify-cert", file], dir);
    assert_eq!(code(&o), 0, "{file}: {}", stdout(&o));
}

fn run_record(dir: &Path, file: &str) -> serde_json::Value {
    let text = std::fs::read_to_string(dir.join(format!("{file}.run.json"))).unwrap();
    serde_json::from_str(&text).unwrap()
}

#[test]
fn left_membership_example() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["member-left", "-d", "2", "-f", "x1", "-g", "x2*x1", "--out", "c.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("(x2) * f1"));
    verify(t.path(), "c.json");
    let rec = run_record(t.path(), "c.json");
    assert_eq!(rec["command"], "member-left");
    assert_eq!(rec["outcome"], "member");
    assert_eq!(rec["input_digests"]["g"].as_str().unwrap().len(), 64);
}

#[test]
fn left_non_membership_has_checkable_witness() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["member-left", "-d", "2", "-f", "x1", "-g", "x1*x2", "--out", "w.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("not a member"));
    verify(t.path(), "w.json");
}

#[test]
fn known_witnesses_report() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["paper-witnesses"], t.path());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches("rank 1,").count(), 2);
}

#[test]
fn assoc_example_gives_yes() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["assoc", "-d", "2", "-p", "x1*x2+1", "-q", "x2*x1+1", "--out", "a.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("stably associated"));
    verify(t.path(), "a.json");
}

#[test]
fn assoc_no_and_unknown() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["assoc", "-d", "2", "-p", "x1", "-q", "x2*x1+1", "--out", "n.json"], t.path());
    assert_eq!(code(&o), 0);
    verify(t.path(), "n.json");
    // With no sampling and a zero degree bound nothing can be decided.
    let o = nczero(
        &["assoc", "-d", "2", "-p", "x1*x2+1", "-q", "x2*x1+1", "--samples", "0", "--degree", "0", "--out", "u.json"],
        t.path(),
    );
    assert_eq!(code(&o), 2, "{}", stdout(&o));
    assert!(!t.path().join("u.json").exists());
    assert_eq!(run_record(t.path(), "u.json")["status"], "unknown");
}

#[test]
fn homogeneous_membership_both_ways() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["member-hom", "-d", "1", "-f", "x1^2", "-g", "x1", "--out", "w.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("nilpotent witness"));
    verify(t.path(), "w.json");
    let o = nczero(&["member-hom", "-d", "2", "-f", "x1", "-g", "x2*x1*x2", "--out", "m.json"], t.path());
    assert_eq!(code(&o), 0);
    verify(t.path(), "m.json");
    let o = nczero(&["member-hom", "-d", "1", "-f", "x1+1", "-g", "x1"], t.path());
    assert_eq!(code(&o), 1);
}

#[test]
fn tracial_membership() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["member-trace", "-d", "2", "-f", "1 - [x1,x2]", "-g", "x1", "--out", "t.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("one-in-span"));
    verify(t.path(), "t.json");
    let o = nczero(&["member-trace", "-d", "2", "-f", "x1", "-g", "x2"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("not a member"));
    // search without a seed is a usage error
    let o = nczero(&["member-trace", "-d", "2", "-f", "x1", "-g", "x2", "--search-n", "2"], t.path());
    assert_eq!(code(&o), 1);
}

#[test]
fn span_requires_seed_and_is_deterministic() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["member-span", "-d", "2", "-f", "x1", "-f", "x2", "-g", "x1^2"], t.path());
    assert_eq!(code(&o), 1);
    let a = nczero(&["member-span", "-d", "2", "-f", "x1", "-f", "x2", "-g", "x1^2", "--seed", "4", "--out", "a.json"], t.path());
    let b = nczero(&["member-span", "-d", "2", "-f", "x1", "-f", "x2", "-g", "x1^2", "--seed", "4", "--out", "b.json"], t.path());
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let ca = std::fs::read_to_string(t.path().join("a.json")).unwrap();
    let cb = std::fs::read_to_string(t.path().join("b.json")).unwrap();
    assert_eq!(ca, cb);
    verify(t.path(), "a.json");
    let o = nczero(&["member-span", "-d", "2", "-f", "x1", "-f", "x2", "-g", "3*x1 - x2", "--seed", "0"], t.path());
    assert!(stdout(&o).contains("[3, -1]"));
}

#[test]
fn composition() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["member-comp", "-d", "2", "-f", "x1*x2", "-g", "x1*x2*x1*x2 - 2", "--out", "m.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[-2, 0, 1]"));
    verify(t.path(), "m.json");
    let o = nczero(&["member-comp", "-d", "2", "-f", "x1", "-g", "x2", "--seed", "1", "--out", "w.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("eigen-witness"));
    verify(t.path(), "w.json");
}

#[test]
fn factor_and_detzero() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["factor", "-d", "2", "-f", "x1*x2*x1 + x1", "--out", "f.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("2 factorization(s)"));
    verify(t.path(), "f.json");
    let o = nczero(&["detzero", "-d", "2", "-f", "x1*x2 + 1", "-g", "x1*(x2*x1 + 1)", "--out", "y.json"], t.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    verify(t.path(), "y.json");
}

#[test]
fn eval_classify_weyl() {
    let t = tempfile::tempdir().unwrap();
    let o = nczero(&["weyl", "-n", "3", "--out", "w3.json"], t.path());
    assert_eq!(code(&o), 0);
    let o = nczero(&["eval", "-d", "2", "-f", "1 - [x1,x2]", "-x", "w3.json"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rank 1, det 0, trace 3"));
    let o = nczero(&["classify", "-d", "2", "-f", "1 - [x1,x2]", "-x", "w3.json", "-u", "0,0,1", "-v", "1,0,0"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("zero no, det yes, trace no, directional yes, weak yes"));
    let o = nczero(&["eval", "-d", "3", "-f", "x1", "-x", "w3.json"], t.path());
    assert_eq!(code(&o), 1);
    std::fs::write(t.path().join("bad.json"), "{\"n\": 2}").unwrap();
    let o = nczero(&["eval", "-d", "2", "-f", "x1", "-x", "bad.json"], t.path());
    assert_eq!(code(&o), 1);
}

#[test]
fn pi_rankprofile_lowrank() {
    let t = tempfile::tempdir().unwrap();
    let s4 = "x1*x2*x3*x4 - x1*x2*x4*x3 - x1*x3*x2*x4 + x1*x3*x4*x2 + x1*x4*x2*x3 - x1*x4*x3*x2 \
              - x2*x1*x3*x4 + x2*x1*x4*x3 + x2*x3*x1*x4 - x2*x3*x4*x1 - x2*x4*x1*x3 + x2*x4*x3*x1 \
              + x3*x1*x2*x4 - x3*x1*x4*x2 - x3*x2*x1*x4 + x3*x2*x4*x1 + x3*x4*x1*x2 - x3*x4*x2*x1 \
              - x4*x1*x2*x3 + x4*x1*x3*x2 + x4*x2*x1*x3 - x4*x2*x3*x1 - x4*x3*x1*x2 + x4*x3*x2*x1";
    let o = nczero(&["pi", "-d", "4", "-f", s4, "-n", "2"], t.path());
    assert!(stdout(&o).ends_with("true\n"));
    let o = nczero(&["rankprofile", "-d", "2", "-f", "1 - [x1,x2]", "--n-max", "3"], t.path());
    assert_eq!(code(&o), 1, "seed is mandatory");
    let o = nczero(&["rankprofile", "-d", "2", "-f", "1 - [x1,x2]", "--n-max", "3", "--seed", "1"], t.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("   2         1"));
    let o = nczero(&["lowrank", "-d", "2", "-f", "1 - [x1,x2]", "-n", "3", "--seed", "2024", "--out", "l.json"], t.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(t.path().join("l.json")).unwrap()).unwrap();
    assert_eq!(doc["exact_rank"], 1);
}

#[test]
fn tampered_certificate_fails() {
    let t = tempfile::tempdir().unwrap();
    nczero(&["member-left", "-d", "2", "-f", "x1", "-g", "x2*x1", "--out", "c.json"], t.path());
    let p = t.path().join("c.json");
    let text = std::fs::read_to_string(&p).unwrap().replace("\"x2*x1\"", "\"x1*x2\"");
    std::fs::write(&p, text).unwrap();
    let o = nczero(&["verify-cert", "c.json"], t.path());
    assert_eq!(code(&o), 1);
}

#[test]
fn overwrite_needs_force() {
    let t = tempfile::tempdir().unwrap();
    let args = ["weyl", "-n", "2", "--out", "w.json"];
    assert_eq!(code(&nczero(&args, t.path())), 0);
    assert_eq!(code(&nczero(&args, t.path())), 1);
    let mut forced = args.to_vec();
    forced.push("--force");
    assert_eq!(code(&nczero(&forced, t.path())), 0);
}

#[test]
fn usage_errors_exit_one() {
    let t = tempfile::tempdir().unwrap();
    assert_eq!(code(&nczero(&["nonsense"], t.path())), 1);
    assert_eq!(code(&nczero(&["member-left", "-d", "2", "-f", "x3", "-g", "x1"], t.path())), 1);
    assert_eq!(code(&nczero(&["member-left", "-d", "2", "-f", "x1 x2", "-g", "x1"], t.path())), 1);
    assert_eq!(code(&nczero(&["--help"], t.path())), 0);
}

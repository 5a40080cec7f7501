//! Exit codes and output of the `delta-verifier` binary.

use std::fs;
use std::process::{Command, Output};

fn verifier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delta-verifier"))
        .args(args)
        .env_remove("DELTA_VERIFIER_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn small_run_passes() {
    let o = verifier(&["--check", "eq3", "--n-max", "2", "-q"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("eq3 [theorem] n=2 k=3: pass"), "{out}");
    assert!(out.ends_with("summary: cases 7, passed 7, theorem_failures 0, conjecture_mismatches 0\n"), "{out}");
}

#[test]
fn structured_format() {
    let o = verifier(&["--check", "delta-rise", "--n-max", "3", "--k", "1", "--format", "structured", "-q"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("check=delta-rise\nstatus=conjecture\nparam.n=3\nparam.k=1\nresult=pass\n"), "{out}");
    assert!(out.contains("summary.cases=2\n"), "{out}");
}

#[test]
fn progress_goes_to_stderr() {
    let o = verifier(&["--check", "xy", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 3, "{err}");
    assert!(!stdout(&o).contains(" in "));
}

#[test]
fn empty_profile() {
    let o = verifier(&["--profile", "none"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: cases 0, passed 0"));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let o = verifier(&["--check", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("no-such-check"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(verifier(&["--vars", "99", "--check", "xy"]).status.code(), Some(2));
    assert_eq!(verifier(&["--qtint-zero", "--qtint-one"]).status.code(), Some(2));
    assert_eq!(verifier(&["--profile", "huge"]).status.code(), Some(2));
}

#[test]
fn corrupt_cache_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("htilde_2.txt"), "2|not a symmetric function\n").unwrap();
    let path = dir.path().to_str().unwrap();
    let o = verifier(&["--check", "eq3", "--n-max", "2", "--cache-dir", path, "-q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_delta-verifier"))
        .args(["--check", "eq3", "--n-max", "3", "-q"])
        .env("DELTA_VERIFIER_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("htilde_3.txt").exists());
}

#[test]
fn qtint_one_breaks_the_k1_formula() {
    let o = verifier(&["--check", "k1", "--n-max", "3", "--qtint-one", "-q"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch"));
}

#[test]
fn fewer_variables() {
    let o = verifier(&["--check", "val-sym", "--n-max", "4", "--vars", "2", "-q"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn list_prints_the_catalog() {
    let o = verifier(&["--list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["battery", "cat4", "eq3", "xy"] {
        assert!(out.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

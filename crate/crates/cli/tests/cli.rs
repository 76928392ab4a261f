use std::fs;
use std::process::{Command, Output};

fn nonret(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonret"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn witness_prints_the_transition_table() {
    let out = nonret(&["witness", "--n", "4", "--dialect", "a,b"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("a: 1 2 3 1"), "{text}");
    assert!(text.contains("b: 2 2 1 3"), "{text}");
}

#[test]
fn op_and_atoms_read_a_saved_dfa() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w5.txt");
    let out = nonret(&["witness", "--n", "5", "--dialect", "a,b"]);
    fs::write(&path, &out.stdout).unwrap();
    let file = path.to_str().unwrap();

    let star = nonret(&["op", "star", "--dfa", file, "--emit", "count"]);
    assert!(star.status.success());
    assert_eq!(stdout(&star).trim(), "16");

    let abc = dir.path().join("w5abc.txt");
    let out = nonret(&["witness", "--n", "5", "--dialect", "a,b,c"]);
    fs::write(&abc, &out.stdout).unwrap();
    let rev = nonret(&["op", "reverse", "--dfa", abc.to_str().unwrap(), "--emit", "count"]);
    assert_eq!(stdout(&rev).trim(), "32");

    let atom = nonret(&["atoms", "--dfa", file, "--set", "0,1"]);
    assert!(atom.status.success());
    assert!(stdout(&atom).contains("complexity"));
}

#[test]
fn verify_passes_and_reports_json() {
    let out = nonret(&["verify", "--claim", "thm1.5-star", "--n", "4..6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["schema"], 1);
}

#[test]
fn verify_lists_claims() {
    let out = nonret(&["verify", "--list"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("thm1.1-semigroup"));
}

#[test]
fn unknown_claim_exits_with_usage_error() {
    let out = nonret(&["verify", "--claim", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown claim"));
}

#[test]
fn missing_dfa_file_is_an_error() {
    let out = nonret(&["op", "star", "--dfa", "/nonexistent/dfa.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn semigroup_reports_full_size() {
    let out = nonret(&["semigroup", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1024"));
}

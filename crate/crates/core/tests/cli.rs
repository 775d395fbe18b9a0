//! Black-box tests of the command-line interface: output shape and the
//! documented exit codes.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobeniuslab"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn validate_accepts_corpus_file() {
    let out = run(&["validate", &corpus("a10.alg")]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn parse_error_exits_2() {
    let dir = std::env::temp_dir().join("frobeniuslab-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    fs::write(&bad, "[field] rational\n[quiver]\narrow a : 1 -> 2\n").unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["classify", "/nonexistent/path.alg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn comult_fails_cleanly_on_non_gendo_frobenius_input() {
    let out = run(&["comult", &corpus("endb_bs1.alg")]);
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn comult_prints_the_expected_table() {
    let out = run(&["comult", &corpus("a10.alg"), "--normalize", "a1a3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("delta(e1) = e1 (x) a2a4 + a1 (x) a4 + a1a3 (x) e1"), "{text}");
    assert!(text.contains("delta(a1a3) = a1a3 (x) a1a3"), "{text}");
}

#[test]
fn classify_emits_json_and_verify_round_trips() {
    let out = run(&["classify", &corpus("b.alg"), "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = std::env::temp_dir().join("frobeniuslab-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("b.cert.json");
    fs::write(&cert, &out.stdout).unwrap();
    let ok = run(&["verify", cert.to_str().unwrap(), &corpus("b.alg")]);
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    // tampering with a witness coefficient must be caught
    let tampered = String::from_utf8(out.stdout).unwrap().replacen("\"1\"", "\"2\"", 1);
    let bad = dir.join("b.tampered.json");
    fs::write(&bad, tampered).unwrap();
    let fail = run(&["verify", bad.to_str().unwrap(), &corpus("b.alg")]);
    assert_eq!(fail.status.code(), Some(5));
    // verifying against the wrong input file must also fail
    let wrong = run(&["verify", cert.to_str().unwrap(), &corpus("a10.alg")]);
    assert_eq!(wrong.status.code(), Some(5));
}

use std::process::{Command, Output};

use serde_json::Value;

fn certify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_certify")).args(args).output().unwrap()
}

#[test]
fn json_schema() {
    let out = certify(&["--q", "7", "--g1", "T", "--g2", "1", "--max-deg", "1", "--pairs", "--pair-max-deg", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["meta"]["module"]["family_type"], "Type1");
    assert_eq!(doc["meta"]["adelic"]["status"], "cited");
    assert_eq!(doc["certificates"].as_array().unwrap().len(), 7);
    assert_eq!(doc["pairs"].as_array().unwrap().len(), 21);
    for c in doc["certificates"].as_array().unwrap().iter().chain(doc["pairs"].as_array().unwrap()) {
        assert_eq!(c["verdict"], "surjective");
        for ch in c["checks"].as_array().unwrap() {
            assert!(ch["name"].is_string() && ch["paper_anchor"].is_string());
            assert!(["verified", "cited", "failed", "not-applicable"].contains(&ch["status"].as_str().unwrap()));
            assert!(ch.get("data").is_some());
        }
    }
}

#[test]
fn small_q_refused_unless_allowed() {
    let out = certify(&["--q", "5", "--g1", "0", "--g2", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("q >= 7"));
    let out = certify(&["--q", "5", "--g1", "0", "--g2", "1", "--max-deg", "1", "--allow-small-q"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("out-of-scope"));
}

#[test]
fn parse_errors_carry_position() {
    let out = certify(&["--q", "7", "--g1", "T^2 + ?", "--g2", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--g1") && err.contains("position 6"), "{err}");
}

#[test]
fn not_in_family_exits_one() {
    let out = certify(&["--q", "7", "--g1", "T^2", "--g2", "T", "--max-deg", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("failed(family)"));
}

#[test]
fn extension_field_and_out_file() {
    let dir = std::env::temp_dir().join(format!("certify-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = certify(&[
        "--q", "9", "--ext-modulus", "u^2 + 1", "--g1", "0", "--g2", "1", "--max-deg", "1",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("9 primes, 0 pairs, all surjective: true"));
    std::fs::remove_dir_all(&dir).unwrap();
}

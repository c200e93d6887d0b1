//! End-to-end tests of the `schurq` binary: output bytes, exit codes,
//! run-to-run stability.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn core_quotient_sign_json() {
    assert_eq!(
        stdout(&["core-quotient-sign", "4,2,1", "--r", "3"]),
        "{\"bars_removed\":2,\"core\":\"1\",\"quotient\":[\"-\",\"1,1\"],\"sign\":-1}\n"
    );
    assert_eq!(
        stdout(&["core-quotient-sign", "3", "--r", "3"]),
        "{\"bars_removed\":1,\"core\":\"-\",\"quotient\":[\"1\",\"-\"],\"sign\":1}\n"
    );
    assert_eq!(
        stdout(&["core-quotient-sign", "1", "--r", "3"]),
        "{\"bars_removed\":0,\"core\":\"1\",\"quotient\":[\"-\",\"-\"],\"sign\":1}\n"
    );
}

#[test]
fn expand_json() {
    assert_eq!(
        stdout(&["expand", "3"]),
        "[{\"coeff\":\"4/3\",\"monomial\":[1,1,1]},{\"coeff\":\"2/3\",\"monomial\":[3]}]\n"
    );
    assert_eq!(
        stdout(&["expand", "3", "--r", "3"]),
        "[{\"coeff\":\"4/3\",\"monomial\":[1,1,1]}]\n"
    );
    assert_eq!(stdout(&["expand", "-"]), "[{\"coeff\":\"1/1\",\"monomial\":[]}]\n");
}

#[test]
fn expand_text() {
    assert_eq!(stdout(&["expand", "3", "--format", "text"]), "4/3 p1^3 + 2/3 p3\n");
}

#[test]
fn chartable_spin_csv() {
    assert_eq!(
        stdout(&["chartable", "--n", "3", "--kind", "spin", "--format", "csv"]),
        "\"index\",\"1,1,1\",\"3\"\n\"3\",2,1\n\"2,1\",1,-1\n"
    );
}

#[test]
fn chartable_ordinary() {
    assert_eq!(
        stdout(&["chartable", "--n", "2", "--kind", "ordinary", "--format", "csv"]),
        "\"index\",\"1,1\",\"2\"\n\"2\",1,1\n\"1,1\",1,-1\n"
    );
    // n = 0: the single trivial entry
    assert_eq!(
        stdout(&["chartable", "--n", "0", "--kind", "spin", "--format", "csv"]),
        "\"index\",\"-\"\n\"-\",1\n"
    );
}

#[test]
fn relations_json_and_csv() {
    let js = stdout(&["relations", "--n", "3", "--r", "3"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["blocks"][0]["core"], "-");
    assert_eq!(v["blocks"][0]["basis"][0], "2,1");
    let rows = v["blocks"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["lambda"], "3");
    assert_eq!(rows[0]["terms"][0]["mu"], "2,1");
    assert_eq!(rows[0]["terms"][0]["coeff"], "1/1");
    assert_eq!(rows[1]["lambda"], "2,1");
    assert_eq!(rows[1]["terms"][0]["coeff"], "1/1");

    assert_eq!(
        stdout(&["relations", "--n", "3", "--r", "3", "--format", "csv"]),
        "core,\"-\"\nlambda,\"2,1\"\n\"3\",1/1\n\"2,1\",1/1\n"
    );

    // trivial degree-0 table
    let js = stdout(&["relations", "--n", "0", "--r", "3"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["blocks"][0]["rows"][0]["lambda"], "-");
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify", "--n-max", "6", "--r", "3,5"]);
    assert!(out.starts_with("PASS:"), "got {out}");
    assert!(out.contains("relation rows"));
}

#[test]
fn verify_flag_accepts_consistent_output() {
    let with = stdout(&["expand", "4,2,1", "--verify"]);
    let without = stdout(&["expand", "4,2,1"]);
    assert_eq!(with, without);
    assert!(run(&["chartable", "--n", "4", "--kind", "ordinary", "--verify"])
        .status
        .success());
    assert!(run(&["core-quotient-sign", "5,4,2,1", "--r", "3", "--verify"])
        .status
        .success());
}

#[test]
fn parse_failures_exit_nonzero() {
    let out = run(&["expand", "2,4"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());

    let out = run(&["relations", "--n", "2", "--r", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["core-quotient-sign", "3,3", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["expand", "4,2,1"],
        vec!["relations", "--n", "5", "--r", "3", "--format", "csv"],
        vec!["chartable", "--n", "4", "--kind", "spin"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "args={args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("schurq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("expand.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&["expand", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        "[{\"coeff\":\"4/3\",\"monomial\":[1,1,1]},{\"coeff\":\"2/3\",\"monomial\":[3]}]\n"
    );
    std::fs::remove_file(&path).unwrap();
}

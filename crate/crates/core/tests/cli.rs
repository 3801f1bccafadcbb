use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_charge-basis");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

/// The report text up to the trailing `timings` object.
fn without_timings(text: &str) -> &str {
    &text[..text.find("\"timings\"").expect("timings present")]
}

#[test]
fn basis_of_three_one_lists_twelve_monomials() {
    let (code, v) = run_json(&["basis", "--mu", "3,1", "--kind", "charge"]);
    assert_eq!(code, 0);
    let mut got: Vec<String> =
        v["monomials"].as_array().unwrap().iter().map(|m| m.as_str().unwrap().to_string()).collect();
    got.sort();
    let mut expect =
        vec!["0012", "0102", "0120", "0011", "0101", "1001", "1010", "0110", "0001", "0010", "0100", "0000"];
    expect.sort();
    assert_eq!(got, expect);
    let (_, shuffle) = run_json(&["basis", "--mu", "3,1", "--kind", "shuffle"]);
    assert_eq!(shuffle["monomials"], v["monomials"]);
}

#[test]
fn basis_csv_is_sorted_by_descent_order() {
    let out = run(&["basis", "--mu", "2,1", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "monomial,degree");
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "000,0");
}

#[test]
fn verify_coinvariant_ring_of_s2() {
    let (code, v) = run_json(&["verify", "--mu", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["mu"], serde_json::json!([1, 1]));
    for key in ["schema_version", "tool_version", "config", "seed", "timings", "graded_ranks", "gamma"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_with_gamma_and_lex_order() {
    let (code, v) = run_json(&["verify", "--mu", "2,1,1", "--gamma", "2,2", "--order", "lex"]);
    assert_eq!(code, 0);
    assert_eq!(v["graded_ranks"], serde_json::json!([0, 0, 1, 1]));
}

#[test]
fn check_theorems_thm_a() {
    let (code, v) = run_json(&["check-theorems", "--suite", "thm-a", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["suites"][0]["suite"], "thm-a");
    assert_eq!(v["suites"][0]["pass"], true);
}

#[test]
fn report_file_matches_stdout_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let reports: Vec<String> = ["1", "3"]
        .iter()
        .enumerate()
        .map(|(i, threads)| {
            let path = dir.path().join(format!("r{i}.json"));
            let out = Command::new(BIN)
                .env("CHARGE_BASIS_THREADS", threads)
                .args(["check-theorems", "--suite", "swap", "--n", "5", "--seed", "7", "--report"])
                .arg(&path)
                .output()
                .unwrap();
            assert!(out.status.success());
            let file = std::fs::read_to_string(&path).unwrap();
            assert_eq!(without_timings(&file), without_timings(&String::from_utf8(out.stdout).unwrap()));
            file
        })
        .collect();
    assert_eq!(without_timings(&reports[0]), without_timings(&reports[1]));
    let v: Value = serde_json::from_str(&reports[0]).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["rsk", "2134"],
        &["cocharge", "3516247"],
        &["charge", "7426153"],
        &["charge-monomial", "7426153"],
        &["ctype", "634125"],
        &["blasiak", "211001"],
        &["chains", "1200112010", "[[1,2,3,4,6,7],[5,8,9,10]]"],
        &["basis", "--mu", "2,2"],
        &["hilbert", "--mu", "3,1"],
        &["hl", "--mu", "2,1,1", "--basis", "m"],
        &["antisym", "--mu", "3,1", "--gamma", "2,2"],
        &["verify", "--mu", "2,2"],
        &["check-theorems", "--suite", "golden"],
    ];
    for args in cases {
        let (code, v) = run_json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["schema"], format!("charge-basis/{}", args[0]));
        assert_eq!(v["pass"], true, "{args:?}");
    }
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["rsk", "2234"][..],
        &["basis", "--mu", "1,2"],
        &["antisym", "--mu", "3,1", "--gamma", "2,1"],
        &["blasiak", "12"],
        &["chains", "10", "[[1]]"],
        &["chains", "10", "not json"],
        &["verify", "--mu", "2,2,2"],
        &["check-theorems", "--suite", "nope"],
        &["check-theorems", "--suite", "cocharge", "--n", "9"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = Command::new(BIN).env("CHARGE_BASIS_THREADS", "zero").args(["rsk", "21"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhausted_budget_is_a_check_failure() {
    let out = run(&["verify", "--mu", "2,2,1", "--budget-ms", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unwritable_report_path_fails() {
    let out = run(&["rsk", "21", "--report", "/nonexistent-dir/r.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!Path::new("/nonexistent-dir/r.json").exists());
}

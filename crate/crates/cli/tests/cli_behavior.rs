//! End-to-end tests of the `qcohom` binary: exit codes, report schema and
//! determinism, q-invariance of the computed values, and the `gb` and
//! `zcount` subcommands.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qcohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcohom"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

fn verify_json(args: &[&str]) -> Value {
    let out = qcohom(args);
    assert!(
        out.status.success(),
        "verify failed: {}\n{}",
        stdout_of(&out),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout_of(&out)).expect("report should be valid json")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("qcohom-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn passes_with_defaults_for_n2() {
    let out = qcohom(&["verify", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["overall"], Value::Bool(true));
    assert_eq!(report["claims"].as_array().unwrap().len(), 11);
}

#[test]
fn fault_injection_fails_only_c1() {
    let out = qcohom(&["verify", "--n", "2", "--fault-inject-c1"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["overall"], Value::Bool(false));
    for claim in report["claims"].as_array().unwrap() {
        let expected_pass = claim["id"] != "C1";
        assert_eq!(claim["pass"], Value::Bool(expected_pass), "claim {}", claim["id"]);
    }
}

#[test]
fn configuration_errors_exit_2() {
    for args in [
        vec!["verify", "--n", "1"],
        vec!["verify", "--n", "2", "--q", "0"],
        vec!["verify", "--n", "2", "--claims", "C99"],
        vec!["verify", "--n", "2", "--claims", ""],
        vec!["verify", "--n", "2", "--trials", "0"],
        vec!["verify", "--n", "5"],
        vec!["verify", "--n", "2", "--format", "xml"],
        vec!["gb", "--input", "/nonexistent/ideal.json"],
    ] {
        let out = qcohom(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} should explain the error");
    }
}

#[test]
fn report_keys_keep_fixed_order() {
    let out = qcohom(&["verify", "--n", "2", "--claims", "C1"]);
    let text = stdout_of(&out);
    let positions: Vec<usize> = ["\"config\"", "\"claims\"", "\"overall\"", "\"runtime_ms\""]
        .iter()
        .map(|k| text.find(k).unwrap_or_else(|| panic!("missing key {k}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    let claim_keys: Vec<usize> = [
        "\"id\"",
        "\"description\"",
        "\"expected\"",
        "\"computed\"",
        "\"provenance\"",
        "\"pass\"",
    ]
    .iter()
    .map(|k| text.find(k).unwrap_or_else(|| panic!("missing key {k}")))
    .collect();
    assert!(claim_keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn provenance_is_populated() {
    let report = verify_json(&["verify", "--n", "2"]);
    for claim in report["claims"].as_array().unwrap() {
        let p = claim["provenance"].as_str().unwrap();
        assert!(!p.is_empty(), "claim {} has empty provenance", claim["id"]);
    }
}

#[test]
fn identical_configs_give_identical_reports_modulo_runtime() {
    let strip = |v: Value| -> Value {
        let mut v = v;
        v.as_object_mut().unwrap().remove("runtime_ms");
        v
    };
    let a = strip(verify_json(&["verify", "--n", "2", "--seed", "11"]));
    let b = strip(verify_json(&["verify", "--n", "2", "--seed", "11"]));
    assert_eq!(a, b);
}

#[test]
fn claim_subset_runs_only_requested_claims() {
    let report = verify_json(&["verify", "--n", "2", "--claims", "C5,C1,c5"]);
    let ids: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["C1", "C5"]);
}

#[test]
fn computed_values_are_q_invariant() {
    for n in ["2", "3"] {
        let mut claim_sets = Vec::new();
        for q in ["-1", "2", "5", "generic"] {
            let report = verify_json(&["verify", "--n", n, "--q", q]);
            assert_eq!(report["overall"], Value::Bool(true), "n={n} q={q}");
            claim_sets.push(report["claims"].clone());
        }
        for other in &claim_sets[1..] {
            assert_eq!(&claim_sets[0], other, "claims must not depend on the q mode (n={n})");
        }
    }
}

#[test]
fn n3_report_carries_the_expected_numbers() {
    let report = verify_json(&["verify", "--n", "3"]);
    let claims = report["claims"].as_array().unwrap();
    let computed = |id: &str| -> &Value {
        &claims
            .iter()
            .find(|c| c["id"] == id)
            .unwrap_or_else(|| panic!("claim {id} missing"))["computed"]
    };
    assert_eq!(computed("C1")["dimension"], 12);
    assert_eq!(computed("C2")["dimension"], 12);
    assert_eq!(computed("C3")["local_dim"], 2);
    assert_eq!(computed("C3")["tangent_dim"], 1);
    assert_eq!(computed("C4")["dimension"], 10);
    assert_eq!(computed("C6")["radical_dim"], 1);
    assert_eq!(computed("C7")["rank"], 4);
}

#[test]
fn n2_report_carries_the_expected_numbers() {
    let report = verify_json(&["verify", "--n", "2"]);
    let claims = report["claims"].as_array().unwrap();
    let computed = |id: &str| -> &Value {
        &claims
            .iter()
            .find(|c| c["id"] == id)
            .unwrap_or_else(|| panic!("claim {id} missing"))["computed"]
    };
    assert_eq!(computed("C1")["dimension"], 4);
    assert_eq!(computed("C4")["dimension"], 3);
    assert_eq!(computed("C3")["local_dim"], 1);
    assert_eq!(computed("C3")["tangent_dim"], 0);
    assert_eq!(computed("C3")["structure"], "reduced point");
    assert_eq!(computed("C6")["radical_dim"], 0);
    assert_eq!(computed("C7")["rank"], 2);
}

#[test]
fn text_format_prints_per_claim_lines_and_summary() {
    let out = qcohom(&["verify", "--n", "2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for id in ["C1", "C5", "C11"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "missing line for {id}");
    }
    assert!(text.contains("PASSED 11/11"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = temp_path("report.json");
    let out = qcohom(&[
        "verify",
        "--n",
        "2",
        "--claims",
        "C1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let report: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(report["overall"], Value::Bool(true));
    std::fs::remove_file(&path).ok();
}

#[test]
fn zcount_reports_the_solution_counts() {
    let out = qcohom(&["zcount", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["ordered_count"], 6);
    assert_eq!(v["point_count"], 3);
    assert_eq!(v["squarefree_degree"], 10);
    assert_eq!(v["excluded_degree"], 4);
}

#[test]
fn gb_subcommand_reduces_an_ideal_file() {
    let path = temp_path("ideal.json");
    std::fs::write(
        &path,
        r#"{
            "variables": ["x", "y"],
            "field": { "mode": "q-rational", "q": "-1" },
            "polynomials": [
                [["1", [2, 0]], ["-2", [0, 1]]],
                [["1", [0, 2]], ["1", [1, 0]]]
            ]
        }"#,
    )
    .unwrap();
    let out = qcohom(&["gb", "--input", path.to_str().unwrap(), "--order", "grevlex"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["order"], "grevlex");
    assert_eq!(v["quotient_dimension"], 4);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);

    let lex = qcohom(&["gb", "--input", path.to_str().unwrap(), "--order", "lex"]);
    let v: Value = serde_json::from_str(&stdout_of(&lex)).unwrap();
    assert_eq!(v["quotient_dimension"], 4);
    std::fs::remove_file(&path).ok();
}

#[test]
fn gb_rejects_malformed_files() {
    let path = temp_path("bad-ideal.json");
    std::fs::write(&path, r#"{"variables": ["x"], "field": {"mode": "q-rational", "q": "0"}, "polynomials": [[["1", [1]]]]}"#).unwrap();
    let out = qcohom(&["gb", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

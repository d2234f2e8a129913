use std::process::{Command, Output};

use egc_core::GrahamSum;
use serde_json::Value;

fn egc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_egc")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn j_single_type_one_monomial() {
    let out = egc(&["j", "--lambda", "2", "--phi", "1", "--rho", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["monomials"][0]["factors"], serde_json::json!([[1, 2]]));
    assert_eq!(v["normalization_beta_exp"], 1);
    let text = egc(&["j", "--lambda", "2", "--phi", "1", "--rho", "1"]);
    assert!(stdout(&text).contains("β(y1⊖y2)"));
}

#[test]
fn j_structural_zero_exits_two() {
    let out = egc(&["j", "--lambda", "1", "--phi", "0", "--rho", ""]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("  0"));
}

#[test]
fn j_reports_unique_nu() {
    let out = egc(&["j", "--lambda", "7,4,2,2,1", "--phi", "-1,0,1,2,4", "--rho", "5,4,2,1,1", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["nu"], serde_json::json!([7, 4, 2, 1, 1]));
    assert_eq!(v["q"], 2);
    for key in ["lambda", "phi", "rho", "case", "monomials", "normalization_beta_exp"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn j_json_round_trips_and_matches_text() {
    let args = ["j", "--lambda", "2,1", "--phi", "1,2", "--rho", "1"];
    let out = egc(&[&args[..], &["--format", "json"]].concat());
    let v = json(&out);
    let sum = GrahamSum::from_json(&v.to_string()).unwrap();
    assert_eq!(sum.normalization_beta_exp, 2);
    let text = stdout(&egc(&args));
    for (m, c) in sum.terms() {
        assert!(text.contains(&format!("{c:>4}  {m}")), "{m} missing from text output");
    }
}

#[test]
fn j_witnesses_are_listed() {
    let out = egc(&["j", "--lambda", "1,1", "--phi", "1,2", "--rho", "1", "--witnesses", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn incompatible_input_exits_one() {
    let out = egc(&["j", "--lambda", "2,1", "--phi", "0,3", "--rho", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not compatible"));
    assert_eq!(egc(&["j", "--lambda", "x"]).status.code(), Some(1));
}

#[test]
fn perm_vexillary_data() {
    let out = egc(&["perm", "--oneline", "3,4,5,1,6,2", "--base", "1", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["vexillary"], true);
    assert_eq!(v["shape"], serde_json::json!([2, 2, 2, 1]));
    assert_eq!(v["flag"], serde_json::json!([3, 3, 3, 5]));
    assert_eq!(v["length"], 7);
}

#[test]
fn perm_words() {
    // s2 s1 s_{-1} s0 avoids 2143 under the composition convention used here
    let v = json(&egc(&["perm", "--word", "2,1,-1,0", "--format", "json"]));
    assert_eq!(v["vexillary"], true);
    let v = json(&egc(&["perm", "--word", "2,0,1,-1", "--format", "json"]));
    assert_eq!(v["vexillary"], false);
    assert!(v["flag"].is_null());
    let out = egc(&["perm", "--word", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("identity"));
    assert_eq!(egc(&["perm", "--oneline", "1,1"]).status.code(), Some(1));
}

#[test]
fn verify_pi_passes_and_is_reproducible() {
    let args = ["verify", "--suite", "pi", "--seed", "42", "--trials", "5"];
    let a = egc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(json(&a)["pass"], true);
    let b = egc(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_theorem_at_size_five() {
    let out = egc(&["verify", "--suite", "theorem", "--max-size", "5", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("discrepancies = 0"));
}

#[test]
fn verify_rejects_bad_config() {
    assert_eq!(egc(&["verify", "--suite", "bogus"]).status.code(), Some(1));
    assert_eq!(egc(&["verify", "--prime", "91"]).status.code(), Some(1));
    assert_eq!(egc(&["verify", "--window", "3:-3"]).status.code(), Some(1));
}

#[test]
fn enumerate_counts_single_cell() {
    let v = json(&egc(&["enumerate", "--lambda", "1", "--window", "1:2", "--format", "json"]));
    assert_eq!(v["count"], 3);
    let v = json(&egc(&["enumerate", "--lambda", "2,1", "--phi", "1,2", "--sign", "positive", "--window", "-2:2", "--format", "json"]));
    assert!(v["tableaux"].as_array().unwrap().iter().all(|t| !t.as_str().unwrap().contains('-')));
}

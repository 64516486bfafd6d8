use std::process::{Command, Output};

use serde_json::Value;

fn miop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_miop")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn construct_reports_xi() {
    let out = miop(&["construct", "--family", "L", "--g", "7/3", "--indices", "1I"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["xi"], serde_json::json!(["17/6", "1"]));
    for key in ["config", "results", "checks", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["config"]["indices"][0]["v"], 1);
    assert_eq!(v["config"]["indices"][0]["type"], "I");
}

#[test]
fn degenerate_point_flags_genericity() {
    let out = miop(&["construct", "--family", "L", "--g", "-1/2", "--indices", "1I,2II"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["results"]["xi"], serde_json::json!(["0", "0", "-6", "4", "-1/2"]));
    assert_eq!(v["results"]["P"][3]["degenerate"], true);
}

#[test]
fn recurrence_golden_cases() {
    for args in [
        vec!["recurrence", "--family", "L", "--g", "2", "--indices", "1I", "--nmax", "10"],
        vec!["recurrence", "--family", "J", "--g", "7/3", "--h", "9/4", "--indices", "1I"],
    ] {
        let out = miop(&args);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["results"]["golden"], "pass");
        assert_eq!(v["results"]["routes_agree"], true);
    }
    let v = json(&miop(&["recurrence", "--family", "J", "--g", "7/3", "--h", "9/4", "--indices", "1I,2II", "--Y", "1,1"]));
    assert_eq!(v["results"]["golden"], "n/a");
    assert_eq!(v["results"]["L"], 6);
}

#[test]
fn raw_x_negative_control() {
    let out = miop(&["recurrence", "--family", "L", "--g", "7/3", "--indices", "1I,2II", "--raw-X", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["admissible"], false);
    assert_eq!(v["results"]["expected_negative"], true);
}

#[test]
fn verify_suites() {
    let out = miop(&["verify", "--suite", "bnk", "--nmax", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["suites"]["bnk"]["failed"], 0);
    let a = miop(&["verify", "--suite", "wronskian", "--seed", "42"]);
    let b = miop(&["verify", "--suite", "wronskian", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_and_latex_output() {
    let out = miop(&["verify", "--suite", "shiftalg", "--samples", "1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS") || l.ends_with("0 failed")));
    let path = std::env::temp_dir().join(format!("miop-{}.tex", std::process::id()));
    let out = miop(&["recurrence", "--family", "L", "--g", "2", "--indices", "1I", "--latex", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let tex = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(tex.contains("\\begin{tabular}"));
    assert!(tex.contains("\\frac{125}{8}"));
}

#[test]
fn config_errors() {
    assert_eq!(miop(&["construct", "--family", "L"]).status.code(), Some(2));
    assert_eq!(miop(&["construct", "--family", "H", "--indices", "1I"]).status.code(), Some(2));
    assert_eq!(miop(&["recurrence", "--family", "L", "--g", "2", "--Y", "0"]).status.code(), Some(2));
    assert_eq!(miop(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn isolation(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isolation")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = isolation(&full);
    let report: Value = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (report, out.status.code().unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lp_weights_prints_omega() {
    let out = isolation(&["lp-weights", "--delta", "4", "--variant", "general"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "omega = 13/41"), "{}", stdout(&out));
}

#[test]
fn exact_on_prism_gadget() {
    let g = fixture("fixtures/prism_k4.g6");
    let out = isolation(&["exact", "--in", path_str(&g)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "iota = 2"), "{}", stdout(&out));
}

#[test]
fn exact_with_cap_below_optimum() {
    let g = fixture("fixtures/metacirculant_14.g6");
    let (report, code) = json_report(&["exact", "--in", path_str(&g), "--cap", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["outcome"]["status"], "exceeds-cap");
    assert_eq!(report["results"]["outcome"]["cap"], 2);
}

#[test]
fn greedy_on_k2() {
    let g = fixture("fixtures/k2.g6");
    let out = isolation(&["greedy", "--in", path_str(&g), "--delta", "4", "--variant", "general"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "|S| = 1"), "{text}");
    assert!(text.lines().any(|l| l == "isolating = true"), "{text}");
    assert!(text.contains("precondition = does not hold"), "{text}");
}

#[test]
fn six_lp_optima_match_golden_files() {
    let expected = [
        (3, "general", "5/14"),
        (4, "general", "13/41"),
        (5, "general", "23/78"),
        (4, "triangle-free", "3/10"),
        (5, "triangle-free", "9/31"),
        (3, "girth5", "11/34"),
    ];
    for (delta, variant, omega) in expected {
        let d = delta.to_string();
        let (report, code) = json_report(&["lp-weights", "--delta", &d, "--variant", variant]);
        assert_eq!(code, 0);
        assert_eq!(report["results"]["optimal_omega"], omega, "delta={delta} {variant}");
        let golden: Value = serde_json::from_str(
            &std::fs::read_to_string(fixture(&format!("golden/lp_delta{delta}_{variant}.json"))).unwrap(),
        )
        .unwrap();
        assert_eq!(report["results"], golden, "delta={delta} {variant}");
    }
}

#[test]
fn gadget_certificates_match_golden_files() {
    for (file, x, y, b, golden) in [
        ("fixtures/prism_k4.g6", "0", "4", "2", "golden/certificate_prism_k4.json"),
        ("fixtures/metacirculant_14.g6", "0", "1", "3", "golden/certificate_metacirculant_14.json"),
    ] {
        let g = fixture(file);
        let (report, code) =
            json_report(&["certify-edge", "--in", path_str(&g), "--x", x, "--y", y, "--b", b]);
        assert_eq!(code, 0);
        assert_eq!(report["results"]["certificate"]["valid"], true);
        let golden: Value = serde_json::from_str(&std::fs::read_to_string(fixture(golden)).unwrap()).unwrap();
        assert_eq!(report["results"], golden, "{file}");
    }
}

#[test]
fn certificate_failure_exits_one() {
    let g = fixture("fixtures/prism_k4.g6");
    let out = isolation(&["certify-edge", "--in", path_str(&g), "--x", "0", "--y", "4", "--b", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l == "valid = false"));
}

#[test]
fn certify_edge_rejects_non_edge() {
    let g = fixture("fixtures/prism_k4.g6");
    let out = isolation(&["certify-edge", "--in", path_str(&g), "--x", "0", "--y", "7", "--b", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn gen_greedy_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("g.txt");
    let trace = dir.path().join("trace.json");
    let weights = dir.path().join("weights.json");
    let out = isolation(&[
        "gen",
        "--random",
        "min-degree",
        "--n",
        "60",
        "--param",
        "4",
        "--seed",
        "11",
        "--out",
        path_str(&graph),
        "--format",
        "edge-list",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = isolation(&[
        "greedy",
        "--in",
        path_str(&graph),
        "--delta",
        "4",
        "--variant",
        "general",
        "--trace-out",
        path_str(&trace),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("precondition = holds"));
    let out = isolation(&["lp-weights", "--delta", "4", "--variant", "general", "--out", path_str(&weights)]);
    assert_eq!(out.status.code(), Some(0));
    let (report, code) = json_report(&[
        "verify-bound",
        "--trace",
        path_str(&trace),
        "--in",
        path_str(&graph),
        "--weights",
        path_str(&weights),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["ok"], true);
    assert_eq!(report["results"]["final_residual"]["white"], 0);
}

#[test]
fn tampered_trace_fails_verification() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("g.g6");
    let trace = dir.path().join("trace.json");
    let weights = dir.path().join("weights.json");
    isolation(&[
        "gen",
        "--random",
        "regular",
        "--n",
        "30",
        "--param",
        "4",
        "--seed",
        "3",
        "--out",
        path_str(&graph),
    ]);
    isolation(&[
        "greedy",
        "--in",
        path_str(&graph),
        "--delta",
        "4",
        "--variant",
        "general",
        "--trace-out",
        path_str(&trace),
    ]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    doc["steps"][0]["xi"] = Value::from("100/1");
    std::fs::write(&trace, doc.to_string()).unwrap();
    std::fs::write(
        &weights,
        r#"{"omega":"13/41","beta1":"5/82","beta2":"5/41","beta3":"6/41","beta4":"7/41"}"#,
    )
    .unwrap();
    let out = isolation(&[
        "verify-bound",
        "--trace",
        path_str(&trace),
        "--in",
        path_str(&graph),
        "--weights",
        path_str(&weights),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l == "xi consistent = false"));
}

#[test]
fn check_weights_reports_violations() {
    let dir = TempDir::new().unwrap();
    let weights = dir.path().join("w.json");
    std::fs::write(
        &weights,
        r#"{"omega":"3/10","beta1":"1/15","beta2":"1/10","beta3":"1/8","beta4":"3/20"}"#,
    )
    .unwrap();
    let w = path_str(&weights);
    let out = isolation(&["check-weights", "--delta", "4", "--variant", "triangle-free", "--weights", w]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let (report, code) =
        json_report(&["check-weights", "--delta", "4", "--variant", "general", "--weights", w]);
    assert_eq!(code, 1);
    let labels: Vec<&str> = report["results"]["feasibility"]["violated"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["K2 component, blue neighbors in B2", "C5 component, blue neighbors in B3"]);
}

#[test]
fn gen_family_chain_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.g6");
    let b = dir.path().join("b.g6");
    for p in [&a, &b] {
        let out = isolation(&["gen", "--family", "meta-chain", "--s", "2", "--out", path_str(p)]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (report, _) = json_report(&["exact", "--in", path_str(&a), "--cap", "5"]);
    assert_eq!(report["results"]["n"], 28);
    assert_eq!(report["results"]["outcome"]["status"], "exceeds-cap");
}

#[test]
fn random_gen_depends_only_on_seed() {
    let run = |seed: &str| {
        stdout(&isolation(&["gen", "--random", "regular", "--n", "24", "--param", "5", "--seed", seed]))
    };
    assert_eq!(run("9"), run("9"));
    assert_ne!(run("9"), run("10"));
}

#[test]
fn report_file_matches_stdout_json() {
    let dir = TempDir::new().unwrap();
    let report_path = dir.path().join("report.json");
    let g = fixture("fixtures/prism_k4.g6");
    let (stdout_report, _) =
        json_report(&["exact", "--in", path_str(&g), "--report", path_str(&report_path)]);
    let file_report: Value = serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(stdout_report["results"], file_report["results"]);
    assert_eq!(file_report["input"]["graph6"], "G~`HW{");
    assert!(file_report["command"].as_array().unwrap().iter().any(|a| a == "exact"));
    assert!(file_report["version"].is_string());
}

#[test]
fn edge_list_and_graph6_inputs_agree() {
    let dir = TempDir::new().unwrap();
    let edges = dir.path().join("prism.txt");
    let out = isolation(&[
        "gen",
        "--family",
        "prism-chain",
        "--s",
        "2",
        "--format",
        "edge-list",
        "--out",
        path_str(&edges),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let g6 = dir.path().join("prism.g6");
    isolation(&["gen", "--family", "prism-chain", "--s", "2", "--out", path_str(&g6)]);
    let (a, _) = json_report(&["exact", "--in", path_str(&edges)]);
    let (b, _) = json_report(&["exact", "--in", path_str(&g6)]);
    assert_eq!(a["input"], b["input"]);
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(isolation(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(isolation(&["exact", "--bogus"]).status.code(), Some(2));
    assert_eq!(isolation(&["lp-weights", "--delta", "4", "--variant", "planar"]).status.code(), Some(2));
    assert_eq!(isolation(&["gen", "--random", "regular", "--n", "10"]).status.code(), Some(2));
    assert_eq!(isolation(&["gen", "--s", "2"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "A~~\n").unwrap();
    let out = isolation(&["exact", "--in", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    assert_eq!(isolation(&["lp-weights", "--delta", "2", "--variant", "general"]).status.code(), Some(1));
    assert_eq!(isolation(&["gen", "--family", "prism-chain", "--s", "1"]).status.code(), Some(1));
}

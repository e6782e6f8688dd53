//! End-to-end checks of the batch front door: exact-string JSON output,
//! deterministic bytes, config echo, and exit-code contracts.

use serde_json::Value;
use std::process::{Command, Output};

fn ekrlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ekrlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

#[test]
fn count_reports_exact_decimal_strings() {
    let out = ekrlab(&["count", "--setting", "hypergraph", "--n", "6", "--k", "3", "--t", "1"]);
    let v = json_of(&out);
    assert_eq!(v["total"], Value::String("59049".into()));
    assert_eq!(v["ground_size"], Value::String("20".into()));
    assert_eq!(v["command"], "count");
    // config echo carries the resolved parameters
    assert_eq!(v["config"]["setting"], "hypergraph");
    assert_eq!(v["config"]["n"], 6);
    assert_eq!(v["config"]["k"], 3);
    assert_eq!(v["config"]["t"], 1);
    assert!(v["total"].as_str().unwrap().bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn count_by_size_lists_coefficients() {
    let out = ekrlab(&[
        "count", "--setting", "hypergraph", "--n", "5", "--k", "2", "--t", "1", "--by-size",
    ]);
    let v = json_of(&out);
    let coeffs: Vec<&str> = v["by_size"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, vec!["1", "10", "30", "30", "5"]);
    assert_eq!(v["total"], "76");
}

#[test]
fn bounds_reports_formula_values() {
    let out = ekrlab(&["bounds", "--setting", "hypergraph", "--n", "7", "--k", "3", "--t", "1"]);
    let v = json_of(&out);
    assert_eq!(v["n0"], "15");
    assert_eq!(v["n1_exact"], "13");
    assert_eq!(v["t_count"], "7");
    assert_eq!(v["n2"], "5");
    assert_eq!(v["bonferroni_lower"], "228704");
    assert_eq!(v["bonferroni_upper"], "229376");
    assert_eq!(v["provenance"], "formula");
}

#[test]
fn bounds_fixed_size_condition_on_demand() {
    let out = ekrlab(&[
        "bounds", "--setting", "permutation", "--n", "6", "--t", "1", "--m", "100000",
    ]);
    let v = json_of(&out);
    assert!(v["cond_fixedsize"].is_number());
    assert_eq!(v["config"]["m"], 100000.0);
    // larger m drives the condition down
    let out2 = ekrlab(&[
        "bounds", "--setting", "permutation", "--n", "6", "--t", "1", "--m", "1000000",
    ]);
    let v2 = json_of(&out2);
    assert!(v2["cond_fixedsize"].as_f64().unwrap() < v["cond_fixedsize"].as_f64().unwrap());
}

#[test]
fn random_p1_gives_probability_one() {
    let out = ekrlab(&[
        "random", "--setting", "hypergraph", "--n", "12", "--k", "3", "--t", "1", "--p", "1.0",
        "--trials", "10", "--seed", "7",
    ]);
    let v = json_of(&out);
    assert_eq!(v["empirical_probability"], 1.0);
    assert_eq!(v["mean_max_size"], 55.0);
    assert_eq!(v["config"]["seed"], 7);
}

#[test]
fn deterministic_output_bytes() {
    let args = [
        "random", "--setting", "hypergraph", "--n", "9", "--k", "3", "--t", "1", "--p", "0.3",
        "--trials", "25", "--seed", "42",
    ];
    let a = ekrlab(&args);
    let b = ekrlab(&args);
    assert_eq!(a.stdout, b.stdout);
    // and across thread counts
    let mut args8: Vec<&str> = args.to_vec();
    args8.extend(["--threads", "8"]);
    let c = ekrlab(&args8);
    let va = json_of(&a);
    let vc = json_of(&c);
    assert_eq!(va["empirical_probability"], vc["empirical_probability"]);
    assert_eq!(va["mean_max_size"], vc["mean_max_size"]);
}

#[test]
fn sweep_emits_csv_with_header() {
    let out = ekrlab(&[
        "sweep", "--setting", "hypergraph", "--n", "9", "--k", "3", "--t", "1", "--p-grid",
        "0.2,0.6,1.0", "--trials", "10", "--seed", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let config_line = lines.next().unwrap();
    assert!(config_line.starts_with("# config: "));
    let config: Value = serde_json::from_str(config_line.trim_start_matches("# config: ")).unwrap();
    assert_eq!(config["setting"], "hypergraph");
    assert_eq!(config["trials"], 10);
    assert_eq!(
        lines.next().unwrap(),
        "p,trials,empirical_probability,confidence_radius,mean_sample_size,mean_max_size"
    );
    assert_eq!(lines.count(), 3);
}

#[test]
fn validation_errors_exit_2() {
    // unknown flag -> usage error from the parser
    let out = ekrlab(&["count", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // bad parameters -> validation error
    let out = ekrlab(&["count", "--setting", "hypergraph", "--n", "31", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // csv only for sweep
    let out = ekrlab(&[
        "count", "--setting", "hypergraph", "--n", "5", "--k", "2", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = ekrlab(&[
        "count", "--setting", "hypergraph", "--n", "12", "--k", "4", "--t", "1",
        "--budget-nodes", "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"), "stderr: {err}");
}

#[test]
fn env_budget_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_ekrlab"))
        .args(["count", "--setting", "permutation", "--n", "6", "--t", "1", "--by-size"])
        .env("EKRLAB_BUDGET_MS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_parse_back_and_revalidate() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["extremal", "--setting", "hypergraph", "--n", "7", "--k", "3", "--t", "1"],
        vec!["trivial-count", "--setting", "permutation", "--n", "4", "--t", "1", "--with-total"],
        vec!["spectral", "--n", "7", "--k", "3"],
        vec!["containers", "--n", "7", "--k", "3", "--epsilon", "0.5"],
        vec!["bounds", "--setting", "subspace", "--n", "5", "--k", "2", "--q", "3"],
        vec!["maximal", "--setting", "permutation", "--n", "4", "--t", "1"],
    ];
    for args in cases {
        let out = ekrlab(&args);
        let v = json_of(&out);
        assert!(v["command"].is_string(), "{args:?}");
        assert!(v["config"].is_object(), "{args:?}");
        assert!(v["config"]["threads"].is_u64());
        // every exact integer travels as a decimal string
        for key in ["total", "trivial", "n0", "t_count", "bonferroni_upper"] {
            if let Some(s) = v.get(key).and_then(|x| x.as_str()) {
                assert!(s.bytes().all(|b| b.is_ascii_digit()), "{key} = {s}");
            }
        }
    }
}

#[test]
fn trivial_count_matches_expected_petersen() {
    let out = ekrlab(&[
        "trivial-count", "--setting", "hypergraph", "--n", "5", "--k", "2", "--t", "1",
        "--with-total",
    ]);
    let v = json_of(&out);
    assert_eq!(v["trivial"], "66");
    assert_eq!(v["total"], "76");
    assert_eq!(v["nontrivial"], "10");
    assert_eq!(v["window_contains_trivial"], true);
}

#[test]
fn extremal_subcommand_matches_known_values() {
    let out = ekrlab(&["extremal", "--setting", "hypergraph", "--n", "6", "--k", "3", "--t", "1"]);
    let v = json_of(&out);
    assert_eq!(v["max"], 10);
    assert_eq!(v["max_nontrivial"], 10);
    assert_eq!(v["every_max_trivial"], false);
}

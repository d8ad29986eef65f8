use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qq-invariants")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn series_plain_low_degrees() {
    let o = bin(&["series", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 0 3 4 15\n");
}

#[test]
fn series_json_uses_string_integers() {
    let o = bin(&["series", "--max-degree", "14", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "qq-invariants/series/v1");
    assert_eq!(v["coefficients"][14], "57990");
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 15);
}

#[test]
fn series_csv() {
    let o = bin(&["--format", "csv", "series", "--max-degree", "2"]);
    assert_eq!(stdout(&o), "degree,coefficient\n0,1\n1,0\n2,3\n");
}

#[test]
fn verify_passes_with_quadrature() {
    let o = bin(&["verify", "--max-degree", "10", "--with-quadrature"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS quadrature_agreement"));
    assert!(text.ends_with("verdict: all checks passed\n"));
}

#[test]
fn verify_rejects_small_grid() {
    let o = bin(&["verify", "--max-degree", "6", "--with-quadrature", "--grid-size", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupted_tail_fixture_fails_naming_degree() {
    let original = std::fs::read_to_string(fixture("golden.toml")).unwrap();
    let corrupted = original.replace("[66, 2], [67, -2]", "[66, 2], [67, -3]");
    assert_ne!(original, corrupted);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.toml");
    std::fs::write(&path, corrupted).unwrap();
    let o = bin(&["verify", "--max-degree", "4", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("67"), "{err}");
}

#[test]
fn corrupted_taylor_fixture_fails_verification() {
    let original = std::fs::read_to_string(fixture("golden.toml")).unwrap();
    let corrupted = original.replace("5641, 12872", "5642, 12872");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.toml");
    std::fs::write(&path, corrupted).unwrap();
    let o = bin(&["verify", "--max-degree", "12", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL series_matches_printed_taylor"));
}

#[test]
fn product_fixture_invariants() {
    let o = bin(&["invariants", &fixture("states/product_diagonal.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "I1 = -1/36\nI2 = 1/6\nI3 = 1/3\nI4 = 1/108\nI5 = 0\nI6 = 1/18\nI7 = 1/18\n");
}

#[test]
fn invariants_json_exact_and_float() {
    let o = bin(&["invariants", &fixture("states/product_diagonal.json"), "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["scalar"], "exact");
    assert_eq!(v["invariants"][3]["value"], "1/108");
    assert_eq!(v["invariants"][6]["multidegree"], serde_json::json!([0, 1, 2]));

    let o = bin(&["invariants", &fixture("states/product_diagonal.json"), "--scalar", "float", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["scalar"], "float");
    assert!((v["invariants"][0]["value"].as_f64().unwrap() + 1.0 / 36.0).abs() < 1e-15);
}

#[test]
fn bell_state_has_maximally_mixed_marginal() {
    let o = bin(&["invariants", &fixture("states/bell_float.json"), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "I1,0,2,0,0"));
}

#[test]
fn malformed_state_exits_2() {
    let o = bin(&["invariants", &fixture("states/not_hermitian.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hermitian"));
    let o = bin(&["invariants", "/nonexistent/state.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn battery_seed_7() {
    let o = bin(&["invariants", "--battery", "--seed", "7", "--trials", "100", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "qq-invariants/battery/v1");
    assert_eq!(v["passed"], true);
    assert_eq!(v["trials"], 100);
    assert!(v["max_deviation"].as_array().unwrap().iter().all(|d| d.as_f64().unwrap() <= 1e-9));
}

#[test]
fn battery_impossible_tolerance_exits_1() {
    let o = bin(&["invariants", "--battery", "--seed", "7", "--trials", "20", "--tolerance", "0"]);
    // float rounding makes some deviation nonzero
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn randomized_commands_need_seed() {
    assert_eq!(bin(&["invariants", "--random"]).status.code(), Some(2));
    assert_eq!(bin(&["invariants", "--battery"]).status.code(), Some(2));
}

#[test]
fn multigraded_banner_and_row_sums() {
    let o = bin(&["multigraded", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("EXTENSION:"));
    assert!(text.contains("(1,1,1) 1\n"));
    assert!(text.contains("total degree 4: row sum 15 (single-graded 15)"));
    let o = bin(&["multigraded", "--max-degree", "3", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["extension"], true);
    assert_eq!(v["rows_consistent"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["invariants", "--random", "--seed", "11"][..],
        &["invariants", "--random", "--seed", "11", "--scalar", "float", "--format", "json"][..],
        &["invariants", "--battery", "--seed", "3", "--trials", "30", "--format", "json"][..],
        &["multigraded", "--max-degree", "5", "--format", "csv"][..],
        &["verify", "--max-degree", "8", "--with-quadrature", "--format", "json"][..],
    ] {
        assert_eq!(bin(args).stdout, bin(args).stdout, "{args:?}");
    }
    assert_ne!(
        bin(&["invariants", "--random", "--seed", "11"]).stdout,
        bin(&["invariants", "--random", "--seed", "12"]).stdout
    );
}

#[test]
fn memory_budget_refusal_exits_2() {
    let o = bin(&["series", "--max-degree", "30", "--memory-budget", "4000000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("feasible"));
}

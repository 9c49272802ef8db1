//! End-to-end tests of the rrkit binary: flag handling, exit codes,
//! verdict JSON shape, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn rrkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_pmax_passes_with_expected_fields() {
    let out = rrkit(&["verify", "pmax"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["check"], "pmax");
    assert!((v["p_max"].as_f64().unwrap() - 0.184).abs() < 1e-3);
    assert!(v["residual"].as_f64().unwrap().abs() <= 1e-12);
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_po_passes() {
    let out = rrkit(&["verify", "po"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["p_o"].as_f64().unwrap() - 0.211_324_865_405_187_1).abs() < 1e-15);
    assert!(v["slope_error"].as_f64().unwrap() <= 1e-4);
}

#[test]
fn verify_claim1_fails_below_threshold() {
    let out = rrkit(&["verify", "claim1", "--p", "0.03"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], false);

    let out = rrkit(&["verify", "claim1", "--p", "0.25"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    // unknown flag (clap)
    let out = rrkit(&["region", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // domain error: crossover outside [0, 1/2]
    let out = rrkit(&["region", "--channel", "bsscbsc", "--p", "0.7", "--bound", "capacity", "--out", "/tmp/x.csv"]);
    assert_eq!(out.status.code(), Some(2));
    // bsscbsc-only bound on a JSON channel
    let dir = tempfile::tempdir().unwrap();
    let triple = dir.path().join("t.json");
    std::fs::write(&triple, r#"{"y1": [[0.5,0.5],[0.0,1.0]], "y2": [[1.0,0.0],[0.5,0.5]], "y3": [[0.9,0.1],[0.1,0.9]]}"#).unwrap();
    let out = rrkit(&["region", "--channel", triple.to_str().unwrap(), "--bound", "capacity", "--out", "/tmp/x.csv"]);
    assert_eq!(out.status.code(), Some(2));
    // missing --p for bsscbsc
    let out = rrkit(&["region", "--channel", "bsscbsc", "--bound", "capacity", "--out", "/tmp/x.csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn io_failures_exit_3_without_partial_files() {
    let missing = Path::new("/nonexistent-dir/out.csv");
    let out = rrkit(&["region", "--channel", "bsscbsc", "--p", "0.25", "--bound", "capacity", "--out", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!missing.exists());
}

#[test]
fn json_channel_inner_bound_runs() {
    let dir = tempfile::tempdir().unwrap();
    let triple = dir.path().join("t.json");
    std::fs::write(&triple, r#"{"y1": [[0.5,0.5],[0.0,1.0]], "y2": [[1.0,0.0],[0.5,0.5]], "y3": [[0.75,0.25],[0.25,0.75]]}"#).unwrap();
    let out_csv = dir.path().join("inner.csv");
    let out = rrkit(&[
        "region", "--channel", triple.to_str().unwrap(), "--bound", "inner",
        "--grid", "41", "--aux-card", "2", "--out", out_csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_csv).unwrap();
    assert!(text.starts_with("R0,R1\n"));
    assert!(text.lines().count() > 2);
}

#[test]
fn capacity_csv_endpoints_match_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("cap.csv");
    let out = rrkit(&["region", "--channel", "bsscbsc", "--p", "0.25", "--bound", "capacity", "--out", out_csv.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    let first: Vec<f64> = rows[1].split(',').map(|t| t.parse().unwrap()).collect();
    let last: Vec<f64> = rows[rows.len() - 1].split(',').map(|t| t.parse().unwrap()).collect();
    assert!(first[0].abs() < 1e-12 && (first[1] - 0.311_278_124_459_132_9).abs() < 1e-10);
    assert!((last[0] - 0.188_721_875_540_867_14).abs() < 1e-10 && last[1].abs() < 1e-12);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("region.csv");
    let run = || {
        rrkit(&[
            "region", "--channel", "bsscbsc", "--p", "0.3", "--bound", "inner",
            "--grid", "61", "--out", path.to_str().unwrap(),
        ])
    };
    let o1 = run();
    let bytes1 = std::fs::read(&path).unwrap();
    let o2 = run();
    let bytes2 = std::fs::read(&path).unwrap();
    assert!(o1.status.success() && o2.status.success());
    assert_eq!(o1.stdout, o2.stdout);
    assert_eq!(bytes1, bytes2);

    let v1 = rrkit(&["verify", "lemma1", "--trials", "200", "--seed", "7"]);
    let v2 = rrkit(&["verify", "lemma1", "--trials", "200", "--seed", "7"]);
    assert_eq!(v1.stdout, v2.stdout);
    assert!(v1.status.success());
}

#[test]
fn verify_symmetry_random_passes() {
    let out = rrkit(&["verify", "symmetry", "--random", "--n", "5", "--seed", "7"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert!(v["max_relabel_deviation"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn verify_symmetry_from_codebook_file() {
    let dir = tempfile::tempdir().unwrap();
    let cb = dir.path().join("cb.json");
    std::fs::write(&cb, r#"{
        "n": 4,
        "codewords": {"0,0": "0011", "0,1": "0101", "1,0": "0000", "1,1": "1110"}
    }"#).unwrap();
    let out = rrkit(&["verify", "symmetry", "--codebook", cb.to_str().unwrap(), "--p", "0.2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_appendix_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rs.csv");
    let out = rrkit(&["verify", "appendix", "--grid", "101", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("x,R,S\n"));
    assert_eq!(text.lines().count(), 102);
}

#[test]
fn figures_emit_csv_and_gap_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = rrkit(&["figure", "fig2", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["gap_inner_region_a"].as_f64().unwrap() > 1e-3);
    assert!(dir.path().join("fig2.csv").exists());

    let out = rrkit(&["figure", "fig2", "--p", "0.1", "--out-dir", dir.path().to_str().unwrap()]);
    let v = stdout_json(&out);
    assert!(v["gap_inner_region_a"].as_f64().unwrap() <= 1e-6);

    let out = rrkit(&["figure", "fig3", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["min_gap"].as_f64().unwrap() >= -1e-9);
    let text = std::fs::read_to_string(dir.path().join("fig3.csv")).unwrap();
    assert_eq!(text.lines().count(), 2002);
}

#[test]
fn verify_bound3_medium_grid() {
    // the 2e-3 verdict tolerance needs enough conditional-grid resolution
    // to keep boundary chords tight; 151 points is the coarsest comfortable
    let out = rrkit(&["verify", "bound3", "--p", "0.3", "--grid", "151", "--aux-card", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert!(v["gap_bound3_capacity"].as_f64().unwrap() <= 2e-3);
}

#[test]
fn outer_approx_with_remark_constraint_reports_gap() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("outer.csv");
    let out = rrkit(&[
        "region", "--channel", "bsscbsc", "--p", "0.25", "--bound", "outer-approx",
        "--grid", "41", "--aux-card", "2", "--remark-constraint",
        "--out", out_csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert!(v["remark_constraint_gap"].is_number());
}

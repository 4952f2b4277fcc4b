//! End-to-end runs of the `capsearch` binary: flag handling, exit codes,
//! certificate round trips and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capsearch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("capsearch-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn classify_markdown_matches_published_layout() {
    let output = run(&["classify", "--dim", "4", "--format", "md"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("| |K| | # COMPLETE CAPS | # INCOMPLETE CAPS |"));
    assert!(text.contains("| 9 | 1 | 4 |"));
    assert!(text.contains("| 16 | 1 | 0 |"));
    assert!(text.contains("| 5* | 0 | 1 |"));
}

#[test]
fn classify_csv_has_one_row_per_size_and_type() {
    let output = run(&["classify", "--dim", "3", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("size,type,count\n"));
    assert!(text.contains("5,complete,1\n"));
    assert!(text.contains("5,incomplete,1\n"));
    assert!(text.contains("8,complete,1\n"));
}

#[test]
fn classify_json_parses_and_has_five_classes_at_dim_3() {
    let output = run(&["classify", "--dim", "3"]);
    assert_eq!(exit_code(&output), 0);
    let cert: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(cert["space"], "PG(3,2)");
    assert_eq!(cert["group_order"], 20160);
    // 5 published classes plus the flagged frame row
    assert_eq!(cert["classes"].as_array().unwrap().len(), 6);
}

#[test]
fn classify_rejects_bad_dimension_with_usage_exit() {
    let output = run(&["classify", "--dim", "7"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let output = run(&["classify", "--dim", "3", "--frobnicate"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn certificate_round_trip_verifies() {
    let path = temp_path("roundtrip.json");
    let output = run(&["classify", "--dim", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let output = run(&["verify", "--dim", "3", "--against", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0, "{}", stdout(&output));
    assert!(stdout(&output).contains("PASS certificate-classes"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn corrupted_certificate_fails_verification() {
    let path = temp_path("corrupted.json");
    let output = run(&["classify", "--dim", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    // corrupt one stabilizer order in place
    let corrupted = text.replacen("\"stabilizer_order\": 24", "\"stabilizer_order\": 12", 1);
    assert_ne!(
        corrupted, text,
        "expected a stabilizer_order: 24 entry to corrupt"
    );
    std::fs::write(&path, corrupted).unwrap();
    let output = run(&["verify", "--dim", "3", "--against", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1, "{}", stdout(&output));
    std::fs::remove_file(&path).ok();
}

#[test]
fn unparseable_certificate_fails_verification() {
    let path = temp_path("garbage.json");
    std::fs::write(&path, "{ not json").unwrap();
    let output = run(&["verify", "--dim", "3", "--against", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout(&output).contains("FAIL certificate-parse"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_fresh_dim_2_passes() {
    let output = run(&["verify", "--dim", "2"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("PASS oracle-brute-equality"));
    assert!(stdout(&output).contains("PASS mass-check"));
}

#[test]
fn inspect_sixteen_cap_reports_published_row() {
    let points = "1,19,2,4,8,16,21,13,25,26,11,7,22,14,28,31";
    let output = run(&["inspect", "--dim", "4", "--points", points]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("cap: yes"));
    assert!(text.contains("complete: yes"));
    assert!(text.contains("stabilizer order: 322560"));
    assert!(text.contains("weight enumerator: 8^{30}16^{1}"));
    assert!(text.contains("reference id: 16.1"));
}

#[test]
fn inspect_non_cap_exits_one_and_names_the_line() {
    let output = run(&["inspect", "--dim", "4", "--points", "1,2,3,8,16"]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout(&output);
    assert!(text.contains("cap: no"));
    assert!(text.contains("collinear line: 1 (10000), 2 (01000), 3 (11000)"));
}

#[test]
fn inspect_accepts_coordinate_strings() {
    let output = run(&[
        "inspect",
        "--dim",
        "3",
        "--points",
        "1000,0100,0010,0001,1111",
    ]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("complete: yes"));
    assert!(text.contains("candidates: 0"));
}

#[test]
fn inspect_rejects_bad_points_as_usage_error() {
    let output = run(&["inspect", "--dim", "4", "--points", "1,2,notapoint"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn classified_output_is_byte_identical_across_runs_and_threads() {
    let first = run(&["classify", "--dim", "4", "--threads", "1"]);
    let second = run(&["classify", "--dim", "4", "--threads", "1"]);
    let third = run(&["classify", "--dim", "4", "--threads", "4"]);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(stdout(&first), stdout(&third));
}

//! End-to-end tests of the `gyroalg` binary: exit codes, output shapes,
//! and the one-JSON-document contract of `--json`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gyroalg::groups;
use gyroalg::morphism::relabel;
use gyroalg::table::{validate_loop, CayleyTable};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gyroalg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Writes a table into `dir` and returns its path.
fn write_table(dir: &Path, name: &str, table: &CayleyTable) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, table.serialize()).expect("write table");
    path
}

#[test]
fn verify_accepts_groups_and_reports_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "z6.gyt", &groups::cyclic(6));
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("gyrogroup: yes"));
    assert!(text.contains("group: yes"));
}

#[test]
fn verify_rejects_loop_that_is_not_a_gyrogroup() {
    // Valid loop, but 1 has distinct left and right inverses.
    let text = "5\n0 1 2 3 4\n1 2 3 4 0\n2 0 4 1 3\n3 4 0 2 1\n4 3 1 0 2\n";
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.gyt");
    fs::write(&path, text).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not a gyrogroup"));
}

#[test]
fn verify_rejects_non_loop_with_exit_one() {
    // Row 1 repeats the value 0.
    let text = "3\n0 1 2\n1 0 0\n2 0 1\n";
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("notloop.gyt");
    fs::write(&path, text).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not a loop"));
}

#[test]
fn malformed_table_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.gyt");
    fs::write(&path, "2\n0 1\n1 seven\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).is_empty());
    assert!(!stderr(&out).is_empty());
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = run(&["verify", "/no/such/file.gyt"]);
    assert_eq!(code(&out), 2);
    assert!(!stderr(&out).is_empty());
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_mode_emits_exactly_one_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "k4.gyt", &groups::klein4());
    for args in [
        vec!["verify", path.to_str().unwrap(), "--json"],
        vec!["analyze", path.to_str().unwrap(), "--json"],
        vec!["check", "lagrange", path.to_str().unwrap(), "--json"],
        vec!["moebius", "--samples", "50", "--seed", "3", "--json"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 0, "args {args:?}");
        let doc: serde_json::Value =
            serde_json::from_str(&stdout(&out)).expect("whole stdout is one JSON document");
        assert!(doc.is_object());
    }
}

#[test]
fn json_mode_reports_violations_as_json_too() {
    let text = "5\n0 1 2 3 4\n1 2 3 4 0\n2 0 4 1 3\n3 4 0 2 1\n4 3 1 0 2\n";
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.gyt");
    fs::write(&path, text).unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 1);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["valid"], serde_json::json!(false));
    assert_eq!(doc["stage"], serde_json::json!("axioms"));
}

#[test]
fn search_writes_class_files_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("order4");
    let out = run(&["search", "--order", "4", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["order"], serde_json::json!(4));
    assert_eq!(manifest["class_count"], serde_json::json!(2));
    assert_eq!(manifest["complete"], serde_json::json!(true));

    for class in manifest["classes"].as_array().unwrap() {
        let file = class["file"].as_str().unwrap();
        let table = CayleyTable::parse(&fs::read_to_string(out_dir.join(file)).unwrap()).unwrap();
        assert!(validate_loop(&table).is_valid());
        assert!(gyroalg::Gyrogroup::validate(table).is_ok());
    }
}

#[test]
fn search_order_above_bound_is_a_usage_error() {
    let out = run(&["search", "--order", "9"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("9"));
}

#[test]
fn search_manifest_is_identical_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let run_a = run(&["search", "--order", "5", "--jobs", "1", "--out", a.to_str().unwrap()]);
    let run_b = run(&["search", "--order", "5", "--jobs", "3", "--out", b.to_str().unwrap()]);
    assert_eq!(code(&run_a), 0);
    assert_eq!(code(&run_b), 0);
    let bytes_a = fs::read(a.join("manifest.json")).unwrap();
    let bytes_b = fs::read(b.join("manifest.json")).unwrap();
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn check_subcommands_pass_on_a_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "z6.gyt", &groups::cyclic(6));
    for prop in ["lagrange", "wcp", "scp", "gyrocommutative", "structure"] {
        let out = run(&["check", prop, path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "property {prop}");
    }
}

#[test]
fn lattice_bound_overflow_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "z6.gyt", &groups::cyclic(6));
    for args in [
        vec!["analyze", path.to_str().unwrap(), "--lattice-bound", "4"],
        vec!["check", "lagrange", path.to_str().unwrap(), "--lattice-bound", "4"],
        vec!["check", "scp", path.to_str().unwrap(), "--lattice-bound", "4"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "args {args:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn check_gyrocommutative_fails_on_sym3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "s3.gyt", &groups::sym3());
    let out = run(&["check", "gyrocommutative", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("gyrocommutative: no"));
}

#[test]
fn quotient_by_normal_subgroup_prints_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "s3.gyt", &groups::sym3());
    let out = run(&["quotient", path.to_str().unwrap(), "--normal", "0,3,4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("normal: yes"));
    assert!(text.contains("2\n0 1\n1 0"));
}

#[test]
fn quotient_rejects_non_normal_and_non_subgyrogroup() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "s3.gyt", &groups::sym3());

    // {0, 1} is a subgroup of order 2 but not normal.
    let out = run(&["quotient", path.to_str().unwrap(), "--normal", "0,1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not normal"));

    // {0, 3} is not closed: 3 + 3 = 4.
    let out = run(&["quotient", path.to_str().unwrap(), "--normal", "0,3"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not a subgyrogroup"));

    let out = run(&["quotient", path.to_str().unwrap(), "--normal", "0,99"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn iso_finds_witness_for_relabeled_group() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = groups::cyclic(4);
    let shuffled = relabel(&z4, &[0, 3, 1, 2]);
    let pa = write_table(dir.path(), "z4.gyt", &z4);
    let pb = write_table(dir.path(), "z4s.gyt", &shuffled);
    let out = run(&["iso", pa.to_str().unwrap(), pb.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["isomorphic"], serde_json::json!(true));
    assert_eq!(doc["map"].as_array().unwrap().len(), 4);
}

#[test]
fn iso_distinguishes_profile_mismatch_from_search_failure() {
    let dir = tempfile::tempdir().unwrap();
    let pa = write_table(dir.path(), "z4.gyt", &groups::cyclic(4));
    let pb = write_table(dir.path(), "k4.gyt", &groups::klein4());
    let out = run(&["iso", pa.to_str().unwrap(), pb.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("order profiles differ"));

    let pc = write_table(dir.path(), "z6.gyt", &groups::cyclic(6));
    let out = run(&["iso", pa.to_str().unwrap(), pc.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("orders differ"));
}

#[test]
fn moebius_passes_at_default_tolerance() {
    let out = run(&["moebius", "--samples", "300", "--seed", "11", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pass"], serde_json::json!(true));
    assert_eq!(doc["samples"], serde_json::json!(300));
    assert_eq!(doc["seed"], serde_json::json!(11));
}

#[test]
fn moebius_rejects_zero_samples() {
    let out = run(&["moebius", "--samples", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn analyze_reports_classification_notes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "z5.gyt", &groups::cyclic(5));
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("prime order 5: cyclic group (verified)"));
}

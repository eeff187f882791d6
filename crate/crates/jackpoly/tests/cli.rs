//! End-to-end tests of the binary: golden outputs, format switches, and the
//! exit-code contract (0 success, 1 failed check, 2 usage error).

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_jackpoly"))
        .args(args)
        .output()
        .expect("spawn binary");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

#[test]
fn compute_plain_golden() {
    let (stdout, _, code) = run(&[
        "compute",
        "--partition",
        "1,1",
        "--n",
        "2",
        "--format",
        "plain",
    ]);
    assert_eq!(stdout, "J[1,1] = (2) m[1,1]\n");
    assert_eq!(code, 0);

    let (stdout, _, code) = run(&["compute", "--partition", "2,1"]);
    assert_eq!(stdout, "J[2,1] = (2 + a) m[2,1] + (6) m[1,1,1]\n");
    assert_eq!(code, 0);

    let (stdout, _, code) = run(&["compute", "--partition", "0"]);
    assert_eq!(stdout, "J[0] = (1) m[0]\n");
    assert_eq!(code, 0);
}

#[test]
fn compute_json_golden() {
    let (stdout, _, code) = run(&[
        "compute",
        "--partition",
        "2",
        "--n",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["lambda"], serde_json::json!([2]));
    assert_eq!(v["n"], serde_json::json!(2));
    assert_eq!(v["coeffs"][0]["mu"], serde_json::json!([2]));
    assert_eq!(v["coeffs"][0]["v"], serde_json::json!([[0, 1], [1, 1]]));
    assert_eq!(v["coeffs"][1]["mu"], serde_json::json!([1, 1]));
    assert_eq!(v["coeffs"][1]["v"], serde_json::json!([[0, 2]]));
    assert!(v.get("rational").is_none());
}

#[test]
fn compute_csv_golden() {
    let (stdout, _, code) = run(&["compute", "--partition", "2", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout, "mu,v\n2,1+a\n\"1,1\",2\n");
    assert_eq!(code, 0);
}

#[test]
fn compute_rejects_partition_longer_than_n() {
    let (stdout, stderr, code) = run(&["compute", "--partition", "2,1,1", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(
        stderr.contains("partition has 3 parts but n = 2"),
        "stderr: {stderr}"
    );
}

#[test]
fn compute_rejects_malformed_partitions() {
    for bad in ["2,x", "1,3", "-1", "1,,2", ""] {
        let (_, stderr, code) = run(&["compute", "--partition", bad]);
        assert_eq!(code, 2, "partition {bad:?} should be a usage error");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn compute_unknown_format_is_usage_error() {
    let (_, stderr, code) = run(&["compute", "--partition", "1", "--format", "yaml"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown format"));
}

#[test]
fn compute_evaluates_at_rational_alpha() {
    let (stdout, _, code) = run(&["compute", "--partition", "2", "--n", "2", "--alpha", "1/2"]);
    assert_eq!(stdout, "J[2] = (3/2) m[2] + (2) m[1,1]\n");
    assert_eq!(code, 0);

    let (stdout, _, _) = run(&[
        "compute",
        "--partition",
        "2",
        "--n",
        "2",
        "--alpha",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout, "mu,v\n2,4\n\"1,1\",2\n");

    let (_, stderr, code) = run(&["compute", "--partition", "2", "--alpha", "x"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn verify_selected_checks_golden() {
    let (stdout, _, code) = run(&["verify", "--max-weight", "4", "--checks", "eigen,oracle"]);
    assert_eq!(stdout, "eigen: 11/11 pass, oracle: 11/11 pass\n");
    assert_eq!(code, 0);
}

#[test]
fn verify_default_sweep_passes() {
    let (stdout, _, code) = run(&["verify"]);
    assert_eq!(code, 0);
    for name in [
        "eigen",
        "orthogonality",
        "triangularity",
        "normalization",
        "integrality",
        "positivity",
        "commutator",
        "dunkl-relations",
        "oracle",
    ] {
        assert!(
            stdout.contains(&format!("{name}: ")),
            "missing {name} in {stdout}"
        );
    }
    assert!(!stdout.contains("fail"));
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let (stdout, stderr, code) = run(&["verify", "--checks", "frobnicate"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("unknown check: frobnicate"));
}

#[test]
fn verify_rejects_weight_zero() {
    let (_, _, code) = run(&["verify", "--max-weight", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn table_csv_golden_weight_two() {
    let (stdout, _, code) = run(&["table", "--max-weight", "2", "--format", "csv"]);
    let expected = "\
lambda,mu,v,v_tilde
1,1,1,1
2,2,1+a,1+a
2,\"1,1\",2,1
\"1,1\",\"1,1\",2,1
";
    assert_eq!(stdout, expected);
    assert_eq!(code, 0);
}

#[test]
fn table_weight_zero_is_header_only() {
    let (stdout, _, code) = run(&["table", "--max-weight", "0"]);
    assert_eq!(stdout, "lambda,mu,v,v_tilde\n");
    assert_eq!(code, 0);
}

#[test]
fn table_weight_one_single_row() {
    let (stdout, _, _) = run(&["table", "--max-weight", "1"]);
    assert_eq!(stdout, "lambda,mu,v,v_tilde\n1,1,1,1\n");
}

#[test]
fn table_json_records() {
    let (stdout, _, code) = run(&["table", "--max-weight", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let records = v.as_array().expect("array");
    assert_eq!(records.len(), 4);
    assert_eq!(records[1]["lambda"], serde_json::json!([2]));
    assert_eq!(records[1]["v"], serde_json::json!([[0, 1], [1, 1]]));
    assert_eq!(records[2]["v_tilde"], serde_json::json!([[0, 1]]));
}

#[test]
fn table_out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("jackpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("table.csv");
    let path_str = path.to_str().expect("utf8 path");

    let (stdout, _, _) = run(&["table", "--max-weight", "2"]);
    let (file_stdout, _, code) = run(&["table", "--max-weight", "2", "--out", path_str]);
    assert_eq!(code, 0);
    assert!(file_stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).expect("written file"),
        stdout
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn table_unwritable_path_is_usage_error() {
    let (_, stderr, code) = run(&["table", "--max-weight", "1", "--out", "/nonexistent/t.csv"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot write"));
}

#[test]
fn table_evaluated_at_alpha() {
    let (stdout, _, _) = run(&["table", "--max-weight", "2", "--alpha", "2"]);
    assert!(stdout.contains("2,2,3,3\n"));
    assert!(stdout.contains("2,\"1,1\",2,1\n"));
}

#[test]
fn help_and_version_exit_zero() {
    let (_, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
    let (_, _, code) = run(&["--version"]);
    assert_eq!(code, 0);
    let (_, _, code) = run(&[]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

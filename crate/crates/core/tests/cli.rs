use std::process::Command;

use divisum::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use divisum::lab::report::parse_csv;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("divisum").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn sum_recip_dd_at_ten() {
    let (code, out, _) = run_args(&["sum", "--family", "recip_dd", "--xmax", "10", "--grid", "10"]);
    assert_eq!(code, EXIT_OK);
    let rows = parse_csv(&out);
    assert_eq!(rows[0], ["family", "x", "value", "normalized_ratio"]);
    assert_eq!(&rows[1][..3], ["RECIP_DD", "10", "5.0"]);
}

#[test]
fn census_b2_at_hundred() {
    let (code, out, _) = run_args(&["census", "--set", "b2", "--x", "100"]);
    assert_eq!(code, EXIT_OK);
    let rows = parse_csv(&out);
    assert_eq!(rows[0], ["set", "x", "threshold_low", "threshold_high", "count", "density_ratio", "verdict"]);
    assert_eq!(rows[1][0], "B2");
    assert_eq!(rows[1][4], "1");
}

#[test]
fn verify_identities_thousand() {
    let (code, out, _) = run_args(&["verify", "--check", "identities", "--xmax", "1000"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1000,1000,ok"));
}

#[test]
fn flag_errors_exit_two() {
    for args in [
        &["sum", "--family", "nope", "--xmax", "10"][..],
        &["census", "--set", "b4", "--x", "100"],
        &["verify", "--check", "nothing", "--xmax", "100"],
        &["sum", "--family", "d", "--xmax", "100", "--grid", "5"],
        &["c3", "--grid", "10,100"],
        &["census", "--set", "b1", "--x", "15"],
        &["sum", "--family", "d", "--xmax", "100", "--block-len", "1000"],
        &["sum", "--family", "d", "--xmax", "100", "--threads", "0"],
        &["bogus"],
    ] {
        let (code, _, err) = run_args(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn failing_verification_exits_one() {
    // The Turán window is frozen on N ≥ 10³; at N = 100 the ratio is
    // 0.2746, just below it.
    let (code, out, err) = run_args(&["verify", "--check", "turan", "--xmax", "100"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("false"));
    assert!(err.contains("verification failed"));
}

#[test]
fn csv_and_json_carry_identical_numbers() {
    let base = ["sum", "--family", "recip_d", "--xmax", "50000", "--grid", "10,99,1e3,12345,50000"];
    let (_, csv, _) = run_args(&base);
    let mut json_args = base.to_vec();
    json_args.extend(["--format", "json"]);
    let (_, json, _) = run_args(&json_args);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = parse_csv(&csv);
    let cps = doc["checkpoints"].as_array().unwrap();
    assert_eq!(rows.len() - 1, cps.len());
    for (row, cp) in rows[1..].iter().zip(cps) {
        assert_eq!(row[0], doc["family"].as_str().unwrap());
        assert_eq!(row[1].parse::<u64>().unwrap(), cp["x"].as_u64().unwrap());
        assert_eq!(row[2].parse::<f64>().unwrap().to_bits(), cp["value"].as_f64().unwrap().to_bits());
        assert_eq!(row[3].parse::<f64>().unwrap().to_bits(), cp["normalized_ratio"].as_f64().unwrap().to_bits());
    }
}

#[test]
fn constants_csv_and_json_agree() {
    let (code, csv, _) = run_args(&["constants", "--precision", "1e-6"]);
    assert_eq!(code, EXIT_OK);
    let (_, json, _) = run_args(&["constants", "--precision", "1e-6", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = parse_csv(&csv);
    assert_eq!(rows[0], ["name", "value", "abs_error", "method"]);
    for (row, entry) in rows[1..].iter().zip(doc.as_array().unwrap()) {
        assert_eq!(row[0], entry["name"].as_str().unwrap());
        assert_eq!(row[1].parse::<f64>().unwrap().to_bits(), entry["value"].as_f64().unwrap().to_bits());
        assert_eq!(row[3], entry["method"].as_str().unwrap());
    }
}

#[test]
fn powerful_count_and_list() {
    let (_, out, _) = run_args(&["powerful", "--bound", "100"]);
    assert_eq!(out, "bound,count\n100,14\n");
    let (_, out, _) = run_args(&["powerful", "--bound", "30", "--list"]);
    assert_eq!(out, "value\n1\n4\n8\n9\n16\n25\n27\n");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("divisum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golomb.csv");
    let (code, out, _) = run_args(&["verify", "--check", "golomb", "--xmax", "1000000", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,k,lower,upper,verdict\n100,14,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_honours_env_overrides() {
    let bin = env!("CARGO_BIN_EXE_divisum");
    let args = ["sum", "--family", "dd", "--xmax", "300000"];
    let a = Command::new(bin).args(args).env("DIVISUM_THREADS", "1").env("DIVISUM_BLOCK_LEN", "65536").output().unwrap();
    let b = Command::new(bin).args(args).env("DIVISUM_THREADS", "3").env("DIVISUM_BLOCK_LEN", "65536").output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(bin).args(args).env("DIVISUM_BLOCK_LEN", "12345").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

//! End-to-end tests of the `secrecy` binary: output formats, exit codes,
//! determinism, and the solve/gain round trip.

use std::process::{Command, Output};

fn secrecy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secrecy"))
        .args(args)
        .env_remove("SECRECY_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = secrecy(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn gain_even_40_text() {
    let text = stdout_of(&["gain", "--dim", "40", "--even", "--prefix", "0"]);
    assert_eq!(
        text,
        "gain = 4096/297 (~13.7912457912, ~11.3960349865 dB), certificate: certified\n"
    );
}

#[test]
fn solve_general_40_trims_trailing_zero() {
    let text = stdout_of(&[
        "solve",
        "--dim",
        "40",
        "--general",
        "--prefix",
        "0,0,0,39600,1048576",
    ]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("weights: 1, -80, 1360, -2560, 20480"),
        "full output:\n{}",
        text
    );
    let theta = lines.next().expect("theta line");
    assert!(
        theta.starts_with("theta: 1 + 39600*q^4 + 1048576*q^5"),
        "{}",
        theta
    );
}

#[test]
fn solve_even_40_predicts_q4_coefficient() {
    let text = stdout_of(&["solve", "--dim", "40", "--even", "--prefix", "0"]);
    assert!(text.contains("weights: 1, -1200"), "{}", text);
    assert!(text.contains("39600*q^4"), "{}", text);
}

#[test]
fn round_trip_prefix_weights() {
    let solved = stdout_of(&[
        "solve",
        "--dim",
        "40",
        "--general",
        "--prefix",
        "0,0,0,39600,1048576",
    ]);
    let weights = solved
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("weights: "))
        .expect("weights line")
        .to_string();
    let via_weights = stdout_of(&["gain", "--dim", "40", "--general", "--weights", &weights]);
    let via_prefix = stdout_of(&[
        "gain",
        "--dim",
        "40",
        "--general",
        "--prefix",
        "0,0,0,39600,1048576",
    ]);
    assert_eq!(via_weights, via_prefix);
    assert!(via_weights.contains("gain = 4096/301"), "{}", via_weights);
}

#[test]
fn deterministic_output() {
    let args = ["gain", "--dim", "24", "--even", "--prefix", "0", "--json"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
}

#[test]
fn diff_theorem2_dim16_exact_line() {
    let text = stdout_of(&["diff", "--theorem", "2", "--dim", "16"]);
    assert_eq!(
        text,
        "computed per-unit difference = 1/4096 = 4^-6; paper statement 4^-10; proof substitution 4^-6\n"
    );
}

#[test]
fn diff_theorem1_dim24() {
    let text = stdout_of(&["diff", "--theorem", "1", "--dim", "24"]);
    assert_eq!(
        text,
        "computed per-unit difference = 1/4096 = 3^0/4^6; paper statement 3^0/4^6; proof substitution 3^2/4^6\n"
    );
}

#[test]
fn certify_counterexample_refuted() {
    let out = secrecy(&["certify", "--poly", "1,-1,8"]);
    assert!(
        out.status.success(),
        "refutation is a successful computation"
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: refuted"), "{}", text);
    assert!(text.contains("P(1/16) = 31/32"), "{}", text);
    assert!(text.contains("critical point in [1/16, 1/16]"), "{}", text);
}

#[test]
fn scan_dim8_general() {
    let text = stdout_of(&[
        "scan",
        "--dim",
        "8",
        "--general",
        "--kissing",
        "0:2",
        "--csv",
    ]);
    assert_eq!(
        text,
        "kissing,last_weight,gain,gain_decimal,verdict\n\
         0,-16,4/3,1.33333333333,certified\n\
         1,-15,64/49,1.30612244898,certified\n\
         2,-14,32/25,1.28000000000,certified\n"
    );
}

#[test]
fn scan_dim24_even_unit_gaps() {
    // Consecutive inverse gains differ by exactly 1/4096 here:
    // 63/256 = 1008/4096, then 1009/4096, 1010/4096 = 505/2048.
    let text = stdout_of(&["scan", "--dim", "24", "--even", "--kissing", "0:2", "--csv"]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("kissing,last_weight,gain,gain_decimal,verdict")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows[0].starts_with("0,-720,256/63,"), "{}", rows[0]);
    assert!(rows[1].starts_with("1,-719,4096/1009,"), "{}", rows[1]);
    assert!(rows[2].starts_with("2,-718,2048/505,"), "{}", rows[2]);
    assert!(rows.iter().all(|r| r.ends_with(",certified")), "{}", text);
}

#[test]
fn enumerate_e8_gram() {
    let gram = r#"[[2,0,-1,0,0,0,0,0],
[0,2,0,-1,0,0,0,0],
[-1,0,2,-1,0,0,0,0],
[0,-1,-1,2,-1,0,0,0],
[0,0,0,-1,2,-1,0,0],
[0,0,0,0,-1,2,-1,0],
[0,0,0,0,0,-1,2,-1],
[0,0,0,0,0,0,-1,2]]"#;
    let path = std::env::temp_dir().join("secrecy_cli_test_e8.json");
    std::fs::write(&path, gram).expect("temp file");
    let text = stdout_of(&[
        "enumerate",
        "--gram",
        path.to_str().unwrap(),
        "--max-norm",
        "4",
    ]);
    assert!(text.contains("unimodular: true"), "{}", text);
    assert!(text.contains("even: true"), "{}", text);
    assert!(text.contains("\n2 240\n"), "{}", text);
    assert!(text.contains("\n4 2160\n"), "{}", text);
    assert!(text.contains("kissing: norm 2, count 240"), "{}", text);
}

#[test]
fn sample_csv_at_unity() {
    let text = stdout_of(&[
        "sample", "--dim", "40", "--even", "--prefix", "0", "--y", "1",
    ]);
    assert_eq!(text, "y,xi\n1.00000000000,13.7912457912\n");
}

#[test]
fn series_env_default_order() {
    let out = Command::new(env!("CARGO_BIN_EXE_secrecy"))
        .args(["series", "--form", "theta3"])
        .env("SECRECY_DEFAULT_ORDER", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "1 + 2*q + 2*q^4 + O(q^5)\n");
}

#[test]
fn order_flag_overrides_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_secrecy"))
        .args(["series", "--form", "theta3", "--order", "9"])
        .env("SECRECY_DEFAULT_ORDER", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "1 + 2*q + 2*q^4 + 2*q^9 + O(q^10)\n");
}

#[test]
fn domain_error_exits_one() {
    let out = secrecy(&["gain", "--dim", "12", "--even", "--prefix", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: "), "{}", err);
    assert!(err.contains("multiple of 8"), "{}", err);
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let unknown_flag = secrecy(&["gain", "--dim", "8", "--even", "--bogus"]);
    assert_eq!(unknown_flag.status.code(), Some(2));

    let missing_source = secrecy(&["gain", "--dim", "8", "--even"]);
    assert_eq!(missing_source.status.code(), Some(2));

    let conflicting = secrecy(&[
        "gain",
        "--dim",
        "8",
        "--even",
        "--prefix",
        "0",
        "--weights",
        "1",
    ]);
    assert_eq!(conflicting.status.code(), Some(2));

    let bad_range = secrecy(&["scan", "--dim", "8", "--general", "--kissing", "5:1"]);
    assert_eq!(bad_range.status.code(), Some(2));
}

#[test]
fn gain_json_shape() {
    let text = stdout_of(&["gain", "--dim", "40", "--even", "--prefix", "0", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(value["gain"], "4096/297");
    assert_eq!(value["certificate"]["verdict"], "certified");
    assert_eq!(value["polynomial"][2], "85/16");
}

#[test]
fn refuted_gain_reports_interior_minimum() {
    // A formal prefix with an absurdly large kissing count pushes the
    // minimum inside the interval; the gain line must say so.
    let text = stdout_of(&["gain", "--dim", "16", "--general", "--prefix", "0,4600"]);
    assert!(text.contains("certificate: refuted"), "{}", text);
    assert!(text.contains("interior minimum: P("), "{}", text);
    assert!(text.contains("gain at witness"), "{}", text);
}

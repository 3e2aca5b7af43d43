use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sector-kit"));
    c.env_remove("SECTORKIT_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn s3_from_generators() {
    let out = run(&["group", "--degree", "3", "--gens", "[[1,0,2],[1,2,0]]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema"], "sector-kit/1");
    assert_eq!(v["order"], 6);
    assert_eq!(v["classes"]["sizes"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2]));
    // the identity-class column is d_l / sqrt|G|
    for (l, d) in [1.0f64, 1.0, 2.0].iter().enumerate() {
        let re = v["S"][l][0][0].as_f64().unwrap();
        assert!((re - d / 6f64.sqrt()).abs() < 1e-12);
    }
}

#[test]
fn golden_ratio_incidence() {
    let out = run(&["index", "--incidence", "[[1,1],[1,0]]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["index"], 3);
    let phi2 = ((1.0 + 5f64.sqrt()) / 2.0).powi(2);
    assert!((v["opnorm_sq"].as_f64().unwrap() - phi2).abs() < 1e-13);
}

#[test]
fn baby_inclusion_routes_agree() {
    let spec = r#"{"small": [[2,2]], "big": [[4,1]], "incidence": [[2]]}"#;
    let v = json_of(&run(&["index", "--input", spec]));
    assert_eq!(v["index"], 4);
    assert_eq!(v["projector_index"], 4);
    assert_eq!(v["routes_agree"], true);
}

#[test]
fn free_kms_passes() {
    let out = run(&["zf", "--model", "free", "--check", "kms"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(v["pass"], true);
}

#[test]
fn verification_failure_exits_2_with_report() {
    let out = run(&["zf", "--model", "deformed", "--check", "crossing"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["pass"], false);
    assert!(v["residual"].as_f64().unwrap() > 1e-3);
}

#[test]
fn input_errors_exit_1() {
    let cases: &[&[&str]] = &[
        &["index", "--incidence", "[[1,1],[1]"],
        &["group", "--degree", "3", "--gens", "[[0,0,1]]"],
        &["verlinde", "--dataset", "nope"],
        &["nosuch"],
        &["group", "--input", r#"{"degree": 2, "generators": [[1,0]], "extra": 1}"#],
        &["group", "--input", r#"{"schema": "sector-kit/9", "degree": 2, "generators": [[1,0]]}"#],
        &["zf", "--model", "sinh-gordon", "--b", "3.0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["double", "--name", "d4"][..],
        &["verlinde", "--dataset", "fibonacci"],
        &["tl", "--q", "7", "--word", "[1,2,-1,3]"],
        &["zf", "--model", "ising", "--check", "zf"],
    ] {
        let a = run(args).stdout;
        let b = run(args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn env_tolerance_is_applied() {
    let out = bin()
        .env("SECTORKIT_TOL", "1e-30")
        .args(["group", "--name", "s4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let loose = bin().env("SECTORKIT_TOL", "1").args(["zf", "--model", "deformed", "--check", "kms"]).output().unwrap();
    assert_eq!(loose.status.code(), Some(0));
}

#[test]
fn stdin_and_output_file() {
    let mut child = bin()
        .args(["verlinde", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let semion = r#"{"labels": ["1","s"], "S": [[[0.7071067811865476,0],[0.7071067811865476,0]],[[0.7071067811865476,0],[-0.7071067811865476,0]]], "kappa": [[1,0],[0,1]]}"#;
    child.stdin.take().unwrap().write_all(semion.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["fusion"][1][1], serde_json::json!([1, 0]));

    let path = std::env::temp_dir().join(format!("sector-kit-{}.json", std::process::id()));
    let out = run(&["--output", path.to_str().unwrap(), "chain", "--monomial", "[[0,1],[1,2]]", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert!((v["commutator_norm"].as_f64().unwrap() - 4.0 / 9.0).abs() < 1e-12);
}

#[test]
fn small_scan_hits_only_quantized_points() {
    let out = run(&["scan", "--alpha-step", "0.005", "--eta-step", "0.005", "--n-max", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["off_quantized_set"], 0);
    assert!(!v["survivors"].as_array().unwrap().is_empty());
}

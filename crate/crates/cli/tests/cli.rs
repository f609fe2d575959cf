//! End-to-end tests of the binary: exit-code contract, output
//! determinism, and the certify -> realize -> verify-map round trip.

use std::fs;
use std::process::{Command, Output};

fn kosphere(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kosphere"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn phi_scalar_queries() {
    let out = kosphere(&["phi", "2", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");

    let out = kosphere(&["phi", "1", "3"]);
    assert_eq!(stdout(&out), "inf\n");

    let out = kosphere(&["--format", "json", "phi", "0", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["phi"], "1");
}

#[test]
fn tables_pass_their_reference_checks() {
    let out = kosphere(&["phi-table", "--check"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("check ok"));

    let out = kosphere(&["order-table", "--check", "--format", "md"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().count() >= 10);

    let out = kosphere(&["order-table", "--format", "csv"]);
    let body = stdout(&out);
    assert_eq!(body.lines().count(), 9); // header + 8 rows
    assert!(body.starts_with("n/m,"));
}

#[test]
fn coefficient_and_ideal_queries() {
    let out = kosphere(&["coeff", "a*a"]);
    assert_eq!(stdout(&out), "4*l^1\n");

    let out = kosphere(&["coeff", "e*a + 2*e"]);
    assert_eq!(stdout(&out), "0\n");

    let out = kosphere(&["coeff", "b^1 + e"]);
    assert_eq!(out.status.code(), Some(2));

    let out = kosphere(&["ideal", "(2,e2,a)", "--", "-1"]);
    assert!(stdout(&out).contains("index 2"));

    let out = kosphere(&["--format", "json", "ideal", "(e)", "--", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["index"], "inf");
}

#[test]
fn classify_exit_codes() {
    let out = kosphere(&["classify", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("OnlyNullHomotopic"));

    let out = kosphere(&["classify", "2", "6"]);
    assert!(stdout(&out).contains("EvenDegreesOnly"));

    let out = kosphere(&["classify", "9", "16"]);
    assert_eq!(out.status.code(), Some(3), "unknown verdicts exit 3");
    assert!(stdout(&out).contains("Unknown"));

    let out = kosphere(&["classify", "0", "1"]);
    assert_eq!(out.status.code(), Some(2), "usage errors exit 2");

    let out = kosphere(&["certify", "1", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn kgroups_json_schema() {
    let out = kosphere(&["--format", "json", "kgroups", "2", "6", "r"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["field"], "R");
    assert_eq!(v["n"], 2);
    assert_eq!(v["m"], 6);
    assert_eq!(v["wedge"]["index"], "2");
    assert_eq!(v["wedge"]["ambient"]["kind"], "Z");
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn certify_realize_verify_round_trip_for_small_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let mut trips = 0usize;
    for n in 1..=8u64 {
        for m in 1..=8u64 {
            let certify = kosphere(&["certify", &n.to_string(), &m.to_string()]);
            if certify.status.code() == Some(3) {
                continue; // not a certified pair
            }
            assert!(certify.status.success());

            let d_path = dir.path().join(format!("d_{n}_{m}.json"));
            fs::write(&d_path, certify.stdout).unwrap();

            let realize = kosphere(&["realize", d_path.to_str().unwrap()]);
            assert!(realize.status.success(), "realize ({n}, {m}): {}", stderr(&realize));

            let m_path = dir.path().join(format!("map_{n}_{m}.json"));
            fs::write(&m_path, realize.stdout).unwrap();

            let verify = kosphere(&["verify-map", m_path.to_str().unwrap()]);
            assert!(
                verify.status.success(),
                "verify-map ({n}, {m}): {}",
                stderr(&verify)
            );
            trips += 1;
        }
    }
    assert!(trips >= 20, "expected many certified pairs, saw {trips}");
}

#[test]
fn tampered_maps_are_rejected_with_a_located_identity() {
    let dir = tempfile::tempdir().unwrap();
    let certify = kosphere(&["certify", "2", "4"]);
    let d_path = dir.path().join("d.json");
    fs::write(&d_path, certify.stdout).unwrap();
    let realize = kosphere(&["realize", d_path.to_str().unwrap()]);
    assert!(realize.status.success());

    let mut v: serde_json::Value = serde_json::from_slice(&realize.stdout).unwrap();
    let entry = &mut v["mats"][1][0][0];
    *entry = serde_json::json!(entry.as_i64().unwrap() + 1);
    let m_path = dir.path().join("tampered.json");
    fs::write(&m_path, serde_json::to_string(&v).unwrap()).unwrap();

    let verify = kosphere(&["verify-map", m_path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(1));
    let diag = stderr(&verify);
    assert!(
        diag.contains("coefficient identity fails at"),
        "diagnostic should locate the identity: {diag}"
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["classify-range", "6"],
        vec!["--format", "json", "audit", "6"],
        vec!["--format", "md", "phi-table"],
    ] {
        let a = kosphere(&args);
        let b = kosphere(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
        assert!(a.status.success());
    }
}

#[test]
fn audit_summary_is_clean() {
    let out = kosphere(&["audit", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("violations 0"));

    let out = kosphere(&["--format", "json", "audit", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["pairs"], 16);
}

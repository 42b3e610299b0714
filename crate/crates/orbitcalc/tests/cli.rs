//! End-to-end tests of the `orbitcalc` binary: exit codes, report schema,
//! algebra spec files, and batch mode.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_orbitcalc"))
}

#[test]
fn verify_su2_exits_zero_with_expected_json() {
    let out = bin()
        .args(["verify", "--algebra", "su2", "--weight", "1", "--format", "json"])
        .output()
        .expect("run binary");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json output");
    for key in ["config", "results", "residuals", "verdict", "version"] {
        assert!(v.get(key).is_some(), "missing top-level key {key}");
    }
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["results"]["cotangent"]["dim_q"], 3);
    assert_eq!(v["results"]["cotangent"]["dim_bimodule"], 12);
    for (name, value) in v["residuals"].as_object().unwrap() {
        let r = value.as_f64().unwrap();
        assert!(r.is_finite() && r >= 0.0, "residual {name} = {r}");
    }
}

#[test]
fn verify_direct_sum_reports_kernel_dimension() {
    let out = bin()
        .args([
            "verify", "--algebra", "su2+su2", "--weight", "1", "0", "--format", "json",
        ])
        .output()
        .expect("run binary");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["cotangent"]["dim_g_o"], 3);
    assert_eq!(v["results"]["cotangent"]["dim_q"], 3);
}

#[test]
fn irrep_su3_adjoint() {
    let out = bin()
        .args(["irrep", "--algebra", "su3", "--weight", "1", "1", "--format", "json"])
        .output()
        .expect("run binary");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["irrep"]["dim"], 8);
    assert_eq!(v["results"]["irrep"]["oracle_dim"], 8);
}

#[test]
fn orbit_su3_fundamental() {
    let out = bin()
        .args(["orbit", "--algebra", "su3", "--weight", "1", "0", "--format", "json"])
        .output()
        .expect("run binary");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["orbit"]["dim_k"], 4);
    assert_eq!(v["results"]["orbit"]["dim_m"], 4);
    assert_eq!(v["results"]["struk"]["stabilizer_roots"], 1);
}

#[test]
fn usage_errors_exit_two() {
    // Wrong weight length.
    let out = bin()
        .args(["verify", "--algebra", "su3", "--weight", "1"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(2));

    // Unknown algebra.
    let out = bin()
        .args(["roots", "--algebra", "g2"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(2));

    // Missing weight entirely.
    let out = bin()
        .args(["verify", "--algebra", "su2"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(2));

    // clap-level parse failure.
    let out = bin().args(["no-such-command"]).output().expect("run binary");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn algebra_spec_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("su2.json");
    let spec = orbitcalc::LieAlgebra::su(2).unwrap().to_spec();
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();

    let out = bin()
        .args([
            "verify",
            "--algebra",
            path.to_str().unwrap(),
            "--weight",
            "1",
            "--format",
            "json",
        ])
        .output()
        .expect("run binary");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["cotangent"]["dim_q"], 3);
}

#[test]
fn malformed_spec_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"label": "x", "dim": 1, "unknown_field": true}"#).unwrap();
    let out = bin()
        .args(["roots", "--algebra", path.to_str().unwrap()])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weights_file_batch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weights.txt");
    std::fs::write(&path, "1\n2\n# comment line\n3\n").unwrap();
    let out = bin()
        .args([
            "verify",
            "--algebra",
            "su2",
            "--weights-file",
            path.to_str().unwrap(),
            "--format",
            "json",
        ])
        .output()
        .expect("run binary");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cases = v["results"]["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 3);
    assert!(cases.iter().all(|c| c["verdict"] == "pass"));
}

#[test]
fn checks_subset_runs_only_requested() {
    let out = bin()
        .args([
            "verify", "--algebra", "su3", "--weight", "1", "1", "--checks", "roots,triples",
            "--format", "json",
        ])
        .output()
        .expect("run binary");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["results"].get("roots").is_some());
    assert!(v["results"].get("cotangent").is_none());
}

#[test]
fn output_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin()
        .args([
            "roots",
            "--algebra",
            "su2",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ])
        .output()
        .expect("run binary");
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"]["roots"]["count"], 2);
}

#[test]
fn tolerance_env_override_still_passes() {
    let out = bin()
        .args(["verify", "--algebra", "su2", "--weight", "2", "--format", "json"])
        .env("ORBITCALC_TOL", "1e-8")
        .output()
        .expect("run binary");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
}

//! End-to-end checks of the binary: exit codes, report shapes, and the
//! byte-identical-reports guarantee for a fixed configuration.

use std::process::{Command, Output};

fn ncriem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncriem"))
        .args(args)
        .env_remove("NCRIEM_SEED")
        .output()
        .expect("binary runs")
}

#[test]
fn verify_sphere_passes_with_json_report() {
    let out = ncriem(&["verify", "sphere", "--format", "json"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "sphere");
    assert_eq!(v["seed"], 0);
    assert_eq!(v["backend"], "gauss");
    assert!(v["checks"].as_array().unwrap().len() >= 8);
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass");
        assert!(check["paper_ref"].is_string());
        assert_eq!(check["elapsed_ms"], 0);
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = ncriem(&["verify", "s3-calculus", "--format", "json", "--seed", "7"]);
    let b = ncriem(&["verify", "s3-calculus", "--format", "json", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // a different seed gives a valid but not necessarily identical report
    let c = ncriem(&["verify", "s3-calculus", "--format", "json", "--seed", "8"]);
    assert!(c.status.success());
}

#[test]
fn env_seed_overrides_flag() {
    let flagged = ncriem(&["verify", "sphere", "--format", "json", "--seed", "3"]);
    let via_env = Command::new(env!("CARGO_BIN_EXE_ncriem"))
        .args(["verify", "sphere", "--format", "json", "--seed", "3"])
        .env("NCRIEM_SEED", "11")
        .output()
        .unwrap();
    let v1: serde_json::Value = serde_json::from_slice(&flagged.stdout).unwrap();
    let v2: serde_json::Value = serde_json::from_slice(&via_env.stdout).unwrap();
    assert_eq!(v1["seed"], 3);
    assert_eq!(v2["seed"], 11);
}

#[test]
fn unknown_suite_exits_with_usage_error() {
    let out = ncriem(&["verify", "up-is-down"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn classify_reports_have_the_documented_shape() {
    let out = ncriem(&["classify", "s3", "--conditions", "metric,star"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["condition_set"], serde_json::json!(["metric", "star_compatible"]));
    assert!(v["families"].as_array().unwrap().len() >= 4);
    for fam in v["families"].as_array().unwrap() {
        for key in ["name", "paper_ref", "params_or_sampler", "pass", "witness"] {
            assert!(!fam[key].is_null(), "missing {key}");
        }
    }
    assert!(v["off_family_samples"]["all_failed"].as_bool().unwrap());
    assert_eq!(v["tolerance"], 1e-10);
}

#[test]
fn classify_rejects_unknown_conditions() {
    let out = ncriem(&["classify", "s3", "--conditions", "torsionless"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ncriem(&["classify", "s3", "--conditions", "invertible-sigma"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("supported sets"));
}

#[test]
fn classify_qsu2_braided_points() {
    let out = ncriem(&["classify", "qsu2", "--conditions", "metric,star,torsion-compat,braid"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let fam = &v["families"][0];
    assert_eq!(fam["paper_ref"], "6.2.4");
    assert_eq!(fam["pass"], true);
}

#[test]
fn solve_lc_reference_run() {
    let out = ncriem(&["solve-lc", "--q", "2", "--metric", "1,1,1"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["disc"], 148.0);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 4);
    for s in v["solutions"].as_array().unwrap() {
        assert!(s["residuals"]["torsion"].as_f64().unwrap() < 1e-9);
    }
    // q = 1 is rejected
    let bad = ncriem(&["solve-lc", "--q", "1", "--metric", "1,1,1"]);
    assert_eq!(bad.status.code(), Some(2));
    let bad_metric = ncriem(&["solve-lc", "--q", "2", "--metric", "1,-1,1"]);
    assert_eq!(bad_metric.status.code(), Some(2));
}

#[test]
fn sample_moduli_families() {
    for fam in ["s3-torsion-free-star", "s3-generalized-lc"] {
        let out = ncriem(&["sample-moduli", "--family", fam, "--count", "20", "--format", "text"]);
        assert!(out.status.success(), "{fam}: {out:?}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
    }
}

#[test]
fn sigma_dump_round_trips_through_matrix_json() {
    let out = ncriem(&["sigma-dump", "--geometry", "s3", "--params", "1,0,0,1,0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"], 9);
    assert_eq!(v["backend"], "gauss");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 81);
    // symbolic dump under the rational-function backend
    let sym = ncriem(&[
        "sigma-dump",
        "--geometry",
        "qsu2",
        "--backend",
        "qratfn",
        "--q-param",
        "q",
        "--params",
        "(1+q^2)/q^4,-(1+q^2),0,0,0,0,0",
    ]);
    assert!(sym.status.success(), "{sym:?}");
    let v: serde_json::Value = serde_json::from_slice(&sym.stdout).unwrap();
    assert_eq!(v["backend"], "qratfn");
    assert_eq!(v["entries"][0], "q^2");
}

#[test]
fn csv_has_documented_column_order() {
    let out = ncriem(&["verify", "sphere", "--format", "csv"]);
    assert!(out.status.success());
    let body = String::from_utf8_lossy(&out.stdout);
    assert!(body.starts_with("suite,id,paper_ref,status,witness,elapsed_ms\n"));
}

#[test]
fn timings_flag_populates_elapsed() {
    let out = ncriem(&["verify", "sphere", "--format", "json", "--timings"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // at least the field exists and is a number; values vary by machine
    assert!(v["checks"][0]["elapsed_ms"].is_u64());
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn rbreak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbreak"))
        .args(args)
        .output()
        .expect("spawn rbreak")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn estimate_reports_members_and_class() {
    let demo = data("mcd_demo.csv");
    let v = json(&rbreak(&["estimate", demo.to_str().unwrap(), "--estimator", "mcd"]));
    assert_eq!(v["equivariance_class"], "affine");
    assert_eq!(v["members"].as_array().unwrap().len(), 1);
    assert_eq!(v["config_hash"].as_str().unwrap().len(), 64);
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn exit_codes() {
    let demo = data("mcd_demo.csv");
    let demo = demo.to_str().unwrap();
    assert_eq!(code(&rbreak(&["estimate", demo, "--estimator", "nope"])), 3);
    let empty = tempfile::NamedTempFile::new().unwrap();
    let empty = empty.path().to_str().unwrap();
    assert_eq!(code(&rbreak(&["estimate", empty, "--estimator", "mcd"])), 2);
    assert_eq!(code(&rbreak(&["attack", demo, "--estimator", "mcd", "--m", "11"])), 4);
    assert_eq!(code(&rbreak(&["scenario-pm", "--seed", "1", "--deltas", "1.5"])), 4);
    assert_eq!(code(&rbreak(&["estimate", demo, "--estimator", "pm"])), 4);
    assert_eq!(code(&rbreak(&["bounds", "3", "3", "1"])), 4);
}

#[test]
fn attack_curve_has_one_row_per_gamma_and_is_reproducible() {
    let demo = data("mcd_demo.csv");
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let curve = dir.path().join(name);
        let out = rbreak(&[
            "attack",
            demo.to_str().unwrap(),
            "--estimator",
            "mcd",
            "--m",
            "4",
            "--seed",
            "7",
            "--emit-curve",
            curve.to_str().unwrap(),
        ]);
        let v = json(&out);
        assert_eq!(v["diverged"], true);
        assert_eq!(v["distances"].as_array().unwrap().len(), 8);
        let text = std::fs::read_to_string(&curve).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "gamma,distance");
        assert_eq!(lines.len(), 9);
        outputs.push((out.stdout, text));
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn fsbv_certificates() {
    let demo = data("mcd_demo.csv");
    let v = json(&rbreak(&[
        "fsbv",
        demo.to_str().unwrap(),
        "--estimator",
        "mcd",
        "--seed",
        "3",
    ]));
    assert_eq!(v["fsbv"], "4/10");
    let median = data("median_n5.csv");
    let v = json(&rbreak(&["fsbv", median.to_str().unwrap(), "--estimator", "cmedian"]));
    assert_eq!(v["fsbv"], "3/5");
    let v = json(&rbreak(&[
        "fsbv",
        median.to_str().unwrap(),
        "--estimator",
        "cmedian",
        "--max-m",
        "2",
    ]));
    assert_eq!(v["fsbv"], "no attack in suite succeeded");
}

#[test]
fn bounds_table() {
    let v = json(&rbreak(&["bounds", "10", "2", "2"]));
    assert_eq!(v["translation"]["fraction"], "5/10");
    assert_eq!(v["affine_condition_h"]["fraction"], "4/10");
    assert_eq!(v["zuo_pm"]["fraction"], "5/10");
}

#[test]
fn scenario_pm_rows() {
    let out = rbreak(&[
        "scenario-pm",
        "--seed",
        "2",
        "--random-directions",
        "500",
    ]);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let norms: Vec<f64> = rows.iter().map(|r| r["pm_norm"].as_f64().unwrap()).collect();
    assert!(norms[2] < norms[0]);
    assert!(rows.iter().all(|r| r["origin_outlyingness"].as_f64().unwrap() < 10.0));
    assert_eq!(out.stdout, rbreak(&["scenario-pm", "--seed", "2", "--random-directions", "500"]).stdout);
}

#[test]
fn depth_condition_and_metric() {
    let demo = data("mcd_demo.csv");
    let demo = demo.to_str().unwrap();
    let v = json(&rbreak(&["depth", demo, "--point", "1.5,1.6"]));
    assert_eq!(v["depth_exact"], true);
    assert!(v["tukey_depth"].as_u64().unwrap() >= 1);
    let v = json(&rbreak(&["condition", demo, "--estimator", "wmean"]));
    assert_eq!(v["report"]["holds_empirically"], true);
    let v = json(&rbreak(&["metric", "--x", "1,2,3", "--y", "3,1,2.5"]));
    assert_eq!(v["distance"].as_f64().unwrap(), 0.5);
    assert_eq!(code(&rbreak(&["metric", "--x", "1", "--y", "2", "--delta", "0.1"])), 4);
    let v = json(&rbreak(&[
        "metric", "--x", "1,5,2", "--y", "1,5,2", "--delta", "0.1", "--seed", "4",
    ]));
    assert_eq!(v["lipschitz_probe"]["within_bound"], true);
}

#[test]
fn single_precision_runs() {
    let demo = data("mcd_demo.csv");
    let v = json(&rbreak(&[
        "--precision",
        "f32",
        "estimate",
        demo.to_str().unwrap(),
        "--estimator",
        "cmedian",
    ]));
    assert_eq!(v["config"]["precision"], "f32");
}

// Copyright 2026 The gaussherald Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gaussherald"))
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

#[test]
fn herald_writes_hash_and_seed() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cat.json");
    let cfg = config("herald_cat.json");
    let (code, _, err) = run(&["herald", "--config", cfg.to_str().unwrap(), "--seed", "42", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["seed"], 42);
    assert_eq!(doc["config_hash"].as_str().unwrap().len(), 64);
    let p = doc["result"]["state"]["probability"].as_f64().unwrap();
    assert!((p - 0.1120).abs() < 1e-3);
    assert_eq!(doc["result"]["state"]["path"], "closed_form");
    // no stray temporary files
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn same_config_same_hash() {
    let cfg = config("herald_cat.json");
    let (_, a, _) = run(&["herald", "--config", cfg.to_str().unwrap()]);
    let (_, b, _) = run(&["herald", "--config", cfg.to_str().unwrap()]);
    let (_, c, _) = run(&["herald", "--config", cfg.to_str().unwrap(), "--cutoff", "20"]);
    let hash = |s: &str| serde_json::from_str::<Value>(s).unwrap()["config_hash"].clone();
    assert_eq!(hash(&a), hash(&b));
    assert_ne!(hash(&a), hash(&c));
}

#[test]
fn wigner_csv() {
    let cfg = config("herald_cat.json");
    let (code, out, _) = run(&["herald", "--config", cfg.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[1].starts_with("# config_hash="));
    assert!(lines[2].starts_with("# seed="));
    assert_eq!(lines[3], "x,p,w");
    assert_eq!(lines.len(), 4 + 41 * 41);
}

#[test]
fn decoupled_detector_falls_back() {
    let cfg = config("herald_decoupled.json");
    let (code, out, err) = run(&["herald", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["result"]["state"]["path"], "fock");
}

#[test]
fn validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"circuit": {"modes": 1, "squeeze": [{"r": 0.1}]}, "colour": "red"}"#).unwrap();
    let (code, _, err) = run(&["herald", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown field"));

    std::fs::write(&bad, r#"{"circuit": {"modes": 2, "squeeze": [{"r": 3.5}, {"r": 0.0}]}, "pattern": {"detected": [1], "counts": [1]}}"#).unwrap();
    let (code, _, _) = run(&["herald", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 2);

    let (code, _, _) = run(&["herald", "--format", "xml"]);
    assert_eq!(code, 2);
}

#[test]
fn infeasible_design_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("hard.json");
    std::fs::write(
        &cfg,
        r#"{"target": {"kind": "cat", "alpha": 2.0, "parity": "even"},
            "pattern": {"detected": [1], "counts": [2]}, "modes": 2, "fidelity_floor": 0.9999}"#,
    )
    .unwrap();
    let out = dir.path().join("design.json");
    let (code, _, _) = run(&["design", "--config", cfg.to_str().unwrap(), "--restarts", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 3);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["result"]["status"], "infeasible");
}

#[test]
fn design_and_probe_run() {
    let cfg = config("design_noon2.json");
    let (code, out, err) = run(&["design", "--config", cfg.to_str().unwrap(), "--restarts", "2", "--format", "csv"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("target,fidelity,probability,status,restarts"));

    let (code, out, _) = run(&["probe-conjecture", "--seed", "3"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert!(doc["result"]["rate"].as_f64().unwrap() > 0.9);
}

#[test]
fn reproduce_and_diagnostics() {
    let cfg = config("reproduce_cat_table.json");
    let (code, out, _) = run(&["reproduce", "--config", cfg.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4 + 8);

    let (code, out, _) = run(&["diag-derivative", "--seed", "1"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert!(doc["result"]["max_relative_error"].as_f64().unwrap() < 1e-9);
}

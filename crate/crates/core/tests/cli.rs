// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use serde_json::Value;

fn uncert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uncert")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SUBGROUP_10: &[&str] = &["--group", "2,2,2,2,2,2,2,2,2,2", "--set", "subgroup:e1,e2,e3,e4,e5,e6,e7,e8"];

#[test]
fn theorem_on_subgroup_holds() {
    let out = uncert(&[SUBGROUP_10, &["--cmd", "theorem", "--laws", "main"]].concat());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let first = &v["reports"][0];
    assert_eq!(first["law"], "rho_bias");
    assert_eq!(first["verdict"], "holds");
    assert_eq!(first["lhs"].as_f64().unwrap(), 16777216.0);
    assert_eq!(first["rhs"].as_f64().unwrap(), 12582912.0);
}

#[test]
fn reruns_are_identical_without_timing() {
    let args = ["--group", "3,8", "--set", "random:0.4", "--seed", "11", "--cmd", "verify", "--no-timing"];
    let (a, b) = (uncert(&args), uncert(&args));
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("wall_time_s"));
}

#[test]
fn csv_and_json_carry_the_same_values() {
    let base = ["--group", "12", "--cmd", "verify", "--seed", "5", "--no-timing"];
    let j = json(&uncert(&base));
    let c = uncert(&[&base[..], &["--format", "csv"]].concat());
    let text = String::from_utf8(c.stdout).unwrap();
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let header = rows.headers().unwrap().clone();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let reports = j["reports"].as_array().unwrap();
    let records: Vec<_> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), reports.len());
    for (rec, rep) in records.iter().zip(reports) {
        assert_eq!(rec[col("law")], *rep["law"].as_str().unwrap());
        assert_eq!(rec[col("verdict")], *rep["verdict"].as_str().unwrap());
        assert_eq!(rec[col("lhs")], rep["lhs"].to_string());
        assert_eq!(rec[col("rhs")], rep["rhs"].to_string());
        assert_eq!(rec[col("ratio")], rep["ratio"].to_string());
    }
}

#[test]
fn spec_file_batch_keeps_order() {
    let dir = std::env::temp_dir().join(format!("uncert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("batch.json");
    std::fs::write(
        &path,
        r#"[
          {"group": [7], "set_a": {"kind": "explicit", "elements": [0, 1, 3]}, "command": "compute"},
          {"group": [101], "set_a": {"kind": "quadratic_residues", "p": 101}, "command": "compute"}
        ]"#,
    )
    .unwrap();
    let out = uncert(&["--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["size_a"], 3);
    assert_eq!(v[0]["diff_size"], 7);
    assert_eq!(v[1]["size_a"], 50);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bad_input_exits_with_usage_code() {
    assert_eq!(uncert(&["--group", "0", "--cmd", "compute"]).status.code(), Some(2));
    assert_eq!(uncert(&["--group", "4", "--set", "explicit:9", "--cmd", "compute"]).status.code(), Some(2));
    assert_eq!(uncert(&["--cmd", "compute"]).status.code(), Some(2));
}

#[test]
fn oversized_group_exits_with_resource_code() {
    let out = uncert(&["--group", "1024,1024,4", "--set", "explicit:0", "--cmd", "compute"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn energy_difference_product_on_progression() {
    let out = uncert(&["--group", "16", "--set", "progression:0,1,5", "--cmd", "theorem", "--laws", "energy_difference_product"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["reports"][0]["verdict"], "holds");
}

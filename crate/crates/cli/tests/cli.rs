use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_genus-forge"));
    cmd.env_remove("GENUS_FORGE_ORACLE_LIMIT");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).expect("golden file")
}

fn csv_rows(text: &str) -> Vec<Vec<(String, String)>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    rdr.records()
        .map(|r| {
            let r = r.unwrap();
            header.iter().cloned().zip(r.iter().map(String::from)).collect()
        })
        .collect()
}

fn json_rows(text: &str) -> Vec<Vec<(String, String)>> {
    let doc: Value = serde_json::from_str(text).unwrap();
    assert_eq!(doc["schema"], "genus-forge/1");
    doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_object()
                .unwrap()
                .iter()
                .map(|(k, v)| {
                    let s = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    (k.clone(), s)
                })
                .collect()
        })
        .collect()
}

#[test]
fn square_gluings_by_oracle() {
    let out = run(&["genus-table", "--n-max", "2", "--method", "oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,g,epsilon_g\n1,0,1\n2,0,2\n2,1,1\n");
}

#[test]
fn all_methods_agree_through_seven() {
    let out = run(&["genus-table", "--n-max", "7", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert!(rows.iter().all(|r| r[4].1 == "agree"));
    let oracle_rows = rows.iter().filter(|r| r[2].1 == "oracle").count();
    // one row per genus: sum over n of (n/2 + 1)
    assert_eq!(oracle_rows, (1..=7).map(|n| n / 2 + 1).sum::<usize>());
}

#[test]
fn all_skips_oracle_past_limit() {
    let out = run(&[
        "--oracle-limit",
        "3",
        "genus-table",
        "--n-max",
        "5",
        "--method",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert!(rows
        .iter()
        .filter(|r| r[2].1 == "oracle")
        .all(|r| r[0].1.parse::<usize>().unwrap() <= 3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["genus-table", "--n-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["mc", "--samples", "10"]).status.code(), Some(2));
    assert_eq!(run(&["mc", "--n", "3", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["dist", "--n", "3", "--method", "all"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["--format", "xml", "dist", "--n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn oracle_limit_flag_and_env() {
    let beyond = run(&[
        "--oracle-limit",
        "3",
        "genus-table",
        "--n-max",
        "4",
        "--method",
        "oracle",
    ]);
    assert_eq!(beyond.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&beyond.stderr).contains("capped"));

    let env_out = bin()
        .args(["dist", "--n", "4", "--method", "oracle"])
        .env("GENUS_FORGE_ORACLE_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(env_out.status.code(), Some(2));
    let raised = bin()
        .args(["dist", "--n", "4", "--method", "oracle"])
        .env("GENUS_FORGE_ORACLE_LIMIT", "4")
        .output()
        .unwrap();
    assert!(raised.status.success());
}

#[test]
fn golden_outputs_are_byte_stable() {
    let table = run(&["genus-table", "--n-max", "5", "--method", "all"]);
    assert_eq!(stdout(&table), golden("genus_table_all_5.csv"));
    let dist = run(&["dist", "--n", "4", "--decimal", "6", "--format", "json"]);
    assert_eq!(stdout(&dist), golden("dist_4.json"));
    let mc = run(&[
        "mc",
        "--n",
        "5",
        "--samples",
        "20000",
        "--seed",
        "3",
        "--decimal",
        "5",
    ]);
    assert_eq!(stdout(&mc), golden("mc_5.csv"));
}

#[test]
fn csv_and_json_carry_the_same_rows() {
    for args in [
        &["genus-table", "--n-max", "6", "--method", "all"][..],
        &["dist", "--n", "6", "--method", "theorem", "--decimal", "3"][..],
        &["verify", "--suite", "identities"][..],
        &["mc", "--n", "4", "--samples", "5000", "--seed", "2"][..],
    ] {
        let csv_out = run(&[&["--format", "csv"][..], args].concat());
        let json_out = run(&[&["--format", "json"][..], args].concat());
        assert_eq!(
            csv_rows(&stdout(&csv_out)),
            json_rows(&stdout(&json_out)),
            "{args:?}"
        );
    }
}

#[test]
fn dist_rows_are_exact_strings() {
    let out = run(&["--format", "json", "dist", "--n", "2"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["nu"], 3);
    assert_eq!(rows[2]["probability_num"], "2");
    assert_eq!(rows[2]["probability_den"], "3");
}

#[test]
fn mc_trivial_and_reproducible() {
    let out = run(&["mc", "--n", "1", "--samples", "10", "--seed", "1"]);
    assert!(out.status.success());
    let row = &csv_rows(&stdout(&out))[0];
    assert_eq!(row[5], ("tv".into(), "0/1".into()));

    let one = run(&[
        "--threads",
        "1",
        "mc",
        "--n",
        "15",
        "--samples",
        "200000",
        "--seed",
        "7",
    ]);
    let four = run(&[
        "--threads",
        "4",
        "mc",
        "--n",
        "15",
        "--samples",
        "200000",
        "--seed",
        "7",
    ]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "identities"][..],
        &["verify", "--suite", "fourier", "--N-max", "6"][..],
        &["verify", "--suite", "distributions", "--n-max", "7"][..],
        &["verify", "--suite", "characters", "--N-max", "8"][..],
    ] {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let rows = csv_rows(&stdout(&out));
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r[2].1 == "pass"));
    }
}

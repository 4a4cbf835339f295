//! End-to-end runs of the `arakelov-xn` binary.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arakelov-xn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    rd.records().map(|r| r.unwrap().iter().map(str::to_string).collect()).collect()
}

fn json_rows(text: &str) -> Vec<Vec<String>> {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect())
        .collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn invariants_row_at_15() {
    let o = run(&["invariants", "15"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("N,index,genus,cusps,vol_over_pi,main_coefficient,volume\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][..6], ["15", "1440", "73", "96", "480", "3/5"]);
}

#[test]
fn csv_and_json_carry_identical_strings() {
    for args in
        [vec!["invariants", "--levels", "15,21,33"], vec!["geometry", "15,21"], vec!["spectral", "--t-grid", "1,4"]]
    {
        let csv = run(&[args.as_slice(), &["--format", "csv"]].concat());
        let json = run(&[args.as_slice(), &["--format", "json"]].concat());
        assert_eq!(csv.status.code(), Some(0));
        assert_eq!(json.status.code(), Some(0));
        assert_eq!(csv_rows(&stdout(&csv)), json_rows(&stdout(&json)), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
        assert_eq!(v["schema_version"], 1);
    }
}

#[test]
fn identical_runs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let params = write(dir.path(), "p.json", r#"{"C1": 0.25, "kappa": "zero"}"#);
    for format in ["csv", "json"] {
        let mut files = Vec::new();
        for i in 0..2 {
            let out = dir.path().join(format!("run{i}.{format}"));
            let o =
                run(&["pipeline", "15,21,9", "--params", &params, "--format", format, "--out", out.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
            assert!(stdout(&o).is_empty());
            files.push(std::fs::read(out).unwrap());
        }
        assert!(!files[0].is_empty());
        assert_eq!(files[0], files[1], "{format}");
    }
}

#[test]
fn pipeline_needs_a_params_file() {
    let o = run(&["pipeline", "15"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing field `params`"), "{}", stderr(&o));

    let o = run(&["pipeline", "15", "--params", "/nonexistent/params.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/params.json"), "{}", stderr(&o));
}

#[test]
fn params_file_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write(dir.path(), "u.json", r#"{"C1": 1.0, "c2": 3.0}"#);
    let o = run(&["pipeline", "15", "--params", &unknown]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown field `c2`"), "{}", stderr(&o));

    let bad_kappa = write(dir.path(), "k.json", r#"{"kappa": "one"}"#);
    assert_eq!(run(&["pipeline", "15", "--params", &bad_kappa]).status.code(), Some(2));

    let table = write(dir.path(), "t.json", r#"{"kappa": {"1": 0.5, "2": -0.5, "4": 0.25, "7": -0.25}}"#);
    assert_eq!(run(&["pipeline", "15", "--params", &table]).status.code(), Some(0));
    assert_eq!(run(&["pipeline", "15,21", "--params", &table]).status.code(), Some(2));
    let unbalanced = write(dir.path(), "b.json", r#"{"kappa": {"1": 0.5, "2": 0.5, "4": 0.25, "7": -0.25}}"#);
    assert_eq!(run(&["pipeline", "15", "--params", &unbalanced]).status.code(), Some(2));
}

#[test]
fn absent_params_are_tagged_default0() {
    let dir = tempfile::tempdir().unwrap();
    let params = write(dir.path(), "p.json", r#"{"C1": 0.5}"#);
    let o = run(&["pipeline", "15", "--params", &params]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    let get = |q: &str| rows.iter().find(|r| r[1] == q).unwrap().clone();
    assert_eq!(get("param_C1")[2..4], ["0.5", "user"]);
    assert_eq!(get("param_selberg_limit")[2..4], ["0", "default0"]);
    assert_eq!(get("param_G_const")[2..4], ["0", "default0"]);
    assert_eq!(get("param_kappa")[2..4], ["zero", "default0"]);
    assert_eq!(get("C")[2], "3/5");
    assert!(get("block_r_inf")[3].contains("C1=user"));
    assert!(rows.iter().all(|r| !r[3].is_empty()));
}

#[test]
fn inadmissible_levels() {
    let o = run(&["invariants", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("9 = 3²"), "{}", stderr(&o));
    // the pipeline keeps rejected levels as rows
    let dir = tempfile::tempdir().unwrap();
    let params = write(dir.path(), "p.json", "{}");
    let o = run(&["pipeline", "9,15", "--params", &params]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0][..4], ["9", "rejected", "", "level gate"]);
}

#[test]
fn configuration_errors_exit_2() {
    for args in [
        vec!["invariants", "15", "--precision", "51"],
        vec!["invariants", "15", "--unknown-flag"],
        vec!["frobnicate"],
        vec!["invariants", "15", "--params", "x.json"],
        vec!["spectral", "--t-grid", "1,-2"],
        vec!["verify"],
        vec!["verify", "nonsense"],
        vec!["hyperbolic", "15", "--trace", "52"],
        vec!["invariants", "abc"],
        vec!["invariants", "15", "--levels", "21"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn hyperbolic_rows() {
    let o = run(&["hyperbolic", "15", "--trace", "227", "--bound", "20000", "--precision", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0][4], "classes_found");
    let units: Vec<&Vec<String>> = rows.iter().filter(|r| r[4] == "unit_t").collect();
    assert_eq!(units.len().to_string(), rows[0][6]);
    assert!(units.iter().all(|r| r[3] == "229" && r[6] == "227"));
    let residues: Vec<&Vec<String>> = rows.iter().filter(|r| r[4] == "residue").collect();
    assert!(residues.iter().all(|r| r[6].starts_with("0.00010621")), "{residues:?}");
}

#[test]
fn verify_lemma41_passes() {
    let o = run(&["verify", "lemma41"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = csv_rows(&stdout(&o));
    assert!(rows.len() >= 8);
    assert!(rows.iter().all(|r| r[0] == "lemma41" && r[2] == "pass"));
}

#[test]
fn verify_reports_failures_with_exit_1() {
    // the 𝒢/(φ g log N) trend check is red on 15, 105, 1155
    let o = run(&["verify", "geometric", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let rows = json_rows(&stdout(&o));
    assert!(rows.iter().any(|r| r[2] == "fail" && r[1].contains("decreasing")));
    assert!(rows.iter().filter(|r| r[1].starts_with("two routes")).all(|r| r[2] == "pass"));
}

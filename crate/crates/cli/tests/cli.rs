use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use polycauchy::{cauchy, CauchyKind, RatPoly};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycauchy")).args(args).env_remove("POLYCAUCHY_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polycauchy-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn cauchy_number_table() {
    let o = run(&["table", "cauchy-numbers", "--kind", "first", "--max-n", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().last(), Some("4\t-19/30"));
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn eval_second_kind_at_one() {
    let o = run(&["eval", "cauchy", "--kind", "second", "--n", "2", "--k", "1", "--x", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-1/6\n");
}

#[test]
fn eval_accepts_negative_fractions() {
    let o = run(&["eval", "cauchy", "--n", "2", "--x", "-1/2"]);
    assert_eq!(stdout(&o), "1/12\n");
}

#[test]
fn every_construction_agrees_on_eval() {
    for c in ["gsn", "integral", "series", "binomial-conv", "bernoulli"] {
        let o = run(&["eval", "cauchy", "--kind", "second", "--n", "5", "--x", "2/3", "--construction", c]);
        assert!(o.status.success(), "{c}");
        let expected = cauchy(CauchyKind::Second, 5, 1).eval(&polycauchy::q(2, 3));
        assert_eq!(stdout(&o).trim(), expected.to_string(), "{c}");
    }
}

#[test]
fn verify_single_identity() {
    let o = run(&["verify", "--id", "G04.int1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1 cases passed"));
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["verify", "--id", "G09.zhao", "--id", "G06.k-recurrence-sign", "--max-n", "5", "--json", "--no-timing"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["id"], "G09.zhao");
}

#[test]
fn verify_reads_config() {
    let dir = scratch("config");
    let cfg = dir.join("grid.cfg");
    fs::write(&cfg, "max_n = 3\nk = 1, 2\n").unwrap();
    let o = run(&["verify", "--id", "G04.int1", "--config", cfg.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["points"], 4);
    fs::write(&cfg, "max_n = three\n").unwrap();
    assert_eq!(run(&["verify", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["table", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "G99.none"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "cauchy", "--n", "2", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "cauchy", "--n", "2", "--x", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "cauchy", "--n", "2", "--k", "2", "--construction", "series"]).status.code(), Some(2));
}

#[test]
fn json_export_round_trips() {
    let dir = scratch("json");
    let out = dir.join("c.json");
    let o = run(&["export", "cauchy", "--kind", "second", "--k", "2", "--format", "json", "--out", out.to_str().unwrap(), "--max-n", "6"]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 7);
    for (n, e) in entries.iter().enumerate() {
        assert_eq!(e["family"], "cauchy");
        assert_eq!(e["params"]["n"], n);
        let cs: Vec<&str> = e["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
        assert_eq!(RatPoly::parse_coeffs(&cs).unwrap(), cauchy(CauchyKind::Second, n, 2));
    }
    run(&["export", "cauchy", "--kind", "second", "--k", "2", "--format", "json", "--out", out.to_str().unwrap(), "--max-n", "6"]);
    assert_eq!(fs::read_to_string(&out).unwrap(), text);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn tsv_export_of_numbers() {
    let dir = scratch("tsv");
    let out = dir.join("c.tsv");
    let o = run(&["export", "cauchy-numbers", "--format", "tsv", "--out", out.to_str().unwrap(), "--max-n", "6"]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n\tvalue");
    assert_eq!(&rows[1..], ["0\t1", "1\t1/2", "2\t-1/6", "3\t1/4", "4\t-19/30", "5\t9/4", "6\t-863/84"]);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn empty_range_exports_header_only() {
    let dir = scratch("empty");
    let tsv = dir.join("e.tsv");
    let json = dir.join("e.json");
    let o = run(&["export", "cauchy", "--format", "tsv", "--out", tsv.to_str().unwrap(), "--min-n", "5", "--max-n", "4"]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&tsv).unwrap(), "n\ti\tvalue\n");
    run(&["export", "cauchy", "--format", "json", "--out", json.to_str().unwrap(), "--min-n", "5", "--max-n", "4"]);
    assert_eq!(fs::read_to_string(&json).unwrap(), "[]\n");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn export_to_missing_directory_fails() {
    let o = run(&["export", "cauchy", "--format", "tsv", "--out", "/nonexistent-dir/x.tsv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent-dir/x.tsv"));
}

#[test]
fn series_rows() {
    let o = run(&["series", "cauchy1", "--order", "2"]);
    assert_eq!(stdout(&o), "n\tcoefficient\n0\t1\n1\t1/2 + -1*x\n2\t-1/12 + 1/2*x^2\n");
}

#[test]
fn cache_directory_is_written_and_reused() {
    let dir = scratch("cache");
    let run_cached = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_polycauchy")).args(args).env("POLYCAUCHY_CACHE_DIR", &dir).output().unwrap()
    };
    let first = run_cached(&["table", "stirling2", "--max-n", "6"]);
    assert!(first.status.success());
    let cached = fs::read_to_string(dir.join("stirling2.tsv")).unwrap();
    assert!(cached.starts_with("polycauchy-triangle\tv1\tstirling2\n"));
    let second = run_cached(&["table", "stirling2", "--max-n", "6"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(second.stderr.is_empty());
    fs::remove_dir_all(dir).unwrap();
}

use serde_json::Value;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisenstein")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn dedekind_values_and_errors() {
    let out = run(&["dedekind", "1", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), "1/18");
    assert_eq!(json(&run(&["dedekind", "0", "1"])), "0");
    assert_eq!(run(&["dedekind", "2", "4"]).status.code(), Some(2));
    assert_eq!(run(&["dedekind", "1", "0"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["element", "16", "2"][..],
        &["winding", "9"],
        &["verify", "2"],
        &["element", "15", "7"],
        &["divisor", "15", "1"],
        &["frobnicate"],
        &["p1"],
        &["element", "15", "15", "--tol", "-1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn element_with_verification() {
    let out = run(&["element", "15", "15", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["values"].as_array().unwrap().len(), 24);
    assert_eq!(v["scale"], 6);
    assert_eq!(v["values"][0]["F"], "-7");
}

#[test]
fn element_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&["element", "15", "15", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    // thread count does not change the bytes
    let one = run(&["element", "105", "105"]).stdout;
    let three = run(&["element", "105", "105", "--jobs", "3"]).stdout;
    assert_eq!(one, three);
}

#[test]
fn cache_hits_reproduce_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    for args in [&["winding", "21"][..], &["element", "35", "5"], &["divisor", "105", "15"]] {
        let cold = run(args).stdout;
        let mut with_cache = args.to_vec();
        with_cache.extend(["--cache", cache]);
        let first = run(&with_cache);
        let second = run(&with_cache);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(second.status.code(), Some(0));
        assert_eq!(cold, first.stdout);
        assert_eq!(cold, second.stdout);
    }
    assert_eq!(std::fs::read_dir(cache).unwrap().count(), 3);
}

#[test]
fn winding_fifteen() {
    let out = run(&["winding", "15", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["terms"].as_array().unwrap().len(), 8);
    assert_eq!(v["boundary"], "0");
    assert_eq!(v["multiplier"], 7);
    assert!(v["coordinates"].is_array());
}

#[test]
fn small_commands() {
    let v = json(&run(&["p1", "15", "--verify"]));
    assert_eq!(v["size"], 24);
    let v = json(&run(&["cusps", "105"]));
    assert_eq!(v["count"], 8);
    let v = json(&run(&["divisor", "15", "15"]));
    assert_eq!(v["divisor"], serde_json::json!({"1": "-14", "15": "14", "3": "-2", "5": "2"}));
    let out = run(&["period", "15", "15", "1", "0", "15", "1", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["period"], "14");
    let out = run(&["period", "15", "3", "-1", "0", "-30", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    // not in Gamma0(15)
    assert_eq!(run(&["period", "15", "3", "1", "0", "7", "1"]).status.code(), Some(2));
}

#[test]
fn numeric_failure_exits_three() {
    // two terms cannot meet the tail bound
    let out = run(&["period", "15", "15", "2", "1", "15", "8", "--verify", "--terms", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_levels() {
    let out = run(&["verify", "15"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["m"].is_null());
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let start = Instant::now();
    let out = run(&["verify", "105"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(start.elapsed() < Duration::from_secs(60));
}

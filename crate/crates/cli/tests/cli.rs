use std::fs;
use std::process::{Command, Output};

use clustertilt::DynkinSpec;
use clustertilt_cli::cache::{cache_path, load_or_build, CacheStatus};
use serde_json::Value;

fn clustertilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clustertilt"))
        .args(args)
        .env_remove("CLUSTERTILT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn counts_for_a1() {
    let o = clustertilt(&["verify", "--suite", "counts", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["reports"][0]["totals"]["objects"], 2);
    assert_eq!(v["reports"][0]["totals"]["tilting_count"], 2);
}

#[test]
fn e6_negative_report() {
    let o = clustertilt(&["verify", "--suite", "e-negative", "--type", "E6"]);
    assert_eq!(o.status.code(), Some(0));
    let totals = &stdout_json(&o)["reports"][0]["totals"];
    assert_eq!(totals["tilting_count"], 833);
    assert_eq!(totals["sb_count"], 0);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--suite", "nonsense"],
        vec!["verify", "--suite", "d-main", "--type", "E7"],
        vec!["build", "--type", "B", "--rank", "3"],
        vec!["build", "--type", "A"],
        vec!["build", "--type", "D", "--rank", "4", "--orientation", "1>2"],
        vec!["diagram", "--type", "A3", "--mode", "ext-support"],
        vec!["frobnicate"],
    ] {
        assert_eq!(clustertilt(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_byte_identical() {
    let a = clustertilt(&["verify", "--suite", "d-main", "--type", "D", "--rank", "5"]);
    let b = clustertilt(&["verify", "--suite", "d-main", "--type", "D", "--rank", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mutate_a_quiver_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    fs::write(&path, r#"{"vertices": 3, "arrows": [[1, 2], [2, 3]]}"#).unwrap();
    let o = clustertilt(&["mutate", "--quiver", path.to_str().unwrap(), "--vertex", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["arrows"], serde_json::json!([[1, 3], [2, 1], [3, 2]]));
    let bad = clustertilt(&["mutate", "--quiver", path.to_str().unwrap(), "--vertex", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn enumerate_and_build_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tilting.json");
    let o = clustertilt(&["enumerate", "--type", "A", "--rank", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["tilting"].as_array().unwrap().len(), 5);

    let o = clustertilt(&["build", "--type", "E6"]);
    let v = stdout_json(&o);
    assert_eq!(v["objects"].as_array().unwrap().len(), 42);
    assert_eq!(v["objects"][0]["name"], "row:3,col:0");
}

#[test]
fn classify_d4() {
    let o = clustertilt(&["classify", "--type", "D", "--rank", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["tilting_count"], 50);
    assert_eq!(v["sb_count"], 18);
    let first = &v["algebras"][0];
    for key in ["quiver", "relations", "total_dim", "sb", "gentle", "alpha", "beta", "row_classes", "shape"] {
        assert!(first.get(key).is_some(), "{key}");
    }
}

#[test]
fn diagram_formats() {
    let grid = clustertilt(&["diagram", "--type", "E6", "--mode", "ext-support", "--object", "P1[1]"]);
    let text = String::from_utf8(grid.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert_eq!(text.matches('M').count(), 1);
    let dot = clustertilt(&["diagram", "--type", "A3", "--format", "graph"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph \"A3\""));
    let list = clustertilt(&["diagram", "--type", "A3", "--format", "text"]);
    assert_eq!(String::from_utf8(list.stdout).unwrap().lines().count(), 9);
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let spec = DynkinSpec::d(5).unwrap();
    let (c1, t1, s1) = load_or_build(&spec, Some(dir.path())).unwrap();
    assert_eq!(s1, CacheStatus::Miss);
    let (c2, t2, s2) = load_or_build(&spec, Some(dir.path())).unwrap();
    assert_eq!(s2, CacheStatus::Hit);
    assert_eq!(t1, t2);
    assert_eq!(c1.hom_table(), c2.hom_table());

    let path = cache_path(dir.path(), &spec);
    fs::write(&path, "{ not json").unwrap();
    let (_, t3, s3) = load_or_build(&spec, Some(dir.path())).unwrap();
    assert!(matches!(s3, CacheStatus::Rebuilt(_)));
    assert_eq!(t1, t3);
    assert_eq!(load_or_build(&spec, Some(dir.path())).unwrap().2, CacheStatus::Hit);

    // a truncated Hom table is caught as well
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    v["hom"].as_array_mut().unwrap().pop();
    fs::write(&path, v.to_string()).unwrap();
    assert!(matches!(load_or_build(&spec, Some(dir.path())).unwrap().2, CacheStatus::Rebuilt(_)));
}

#[test]
fn corrupt_cache_warns_but_passes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = clustertilt(&["--cache-dir", d, "verify", "--suite", "counts", "--type", "D4"]);
    let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    fs::write(&entry, "garbage").unwrap();
    let warm = clustertilt(&["--cache-dir", d, "verify", "--suite", "counts", "--type", "D4"]);
    assert_eq!(warm.status.code(), Some(0));
    assert!(String::from_utf8(warm.stderr).unwrap().contains("warning: cache entry for D4"));
    assert_eq!(cold.stdout, warm.stdout);
}

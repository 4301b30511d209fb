//! End-to-end runs of the binary: golden outputs, exit codes, determinism,
//! and the cache round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clusterforge"))
}

fn write_a3(dir: &std::path::Path) -> PathBuf {
    let path = dir.join("a3.quiver");
    std::fs::write(&path, "3\n1 2\n2 3\n").unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

#[test]
fn mutate_at_a_sink_reverses_the_arrow() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let out = run(&["mutate", "-q", q.to_str().unwrap(), "-k", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3\n1 2\n3 2\n");
}

#[test]
fn mutate_accepts_a_vertex_list() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let twice = run(&["mutate", "-q", q.to_str().unwrap(), "-k", "3,3"]);
    assert!(twice.status.success());
    assert_eq!(String::from_utf8_lossy(&twice.stdout), "3\n1 2\n2 3\n");
}

#[test]
fn seeds_json_has_fourteen_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let out = run(&["seeds", "-q", q.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 14);
    assert_eq!(v["complete"], serde_json::Value::Bool(true));
}

#[test]
fn verify_reports_every_check_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let out = run(&["verify", "-q", q.to_str().unwrap(), "--checks", "all"]);
    assert!(out.status.success());
    let report = String::from_utf8_lossy(&out.stdout);
    for check in [
        "laurent",
        "positivity",
        "unique-exchange",
        "cluster-determines-seed",
        "denominators",
        "2cy-symmetry",
        "complements",
        "connectivity",
    ] {
        assert!(
            report.contains(&format!("{check}: PASS")),
            "missing {check} in {report}"
        );
    }
}

#[test]
fn verify_skips_category_checks_off_the_dynkin_case() {
    // the oriented triangle is finite type but not acyclic
    let out = run(&["verify", "--inline", "3;1 3;3 2;2 1", "--checks", "all"]);
    assert!(out.status.success());
    let report = String::from_utf8_lossy(&out.stdout);
    assert!(report.contains("laurent: PASS"));
    assert!(report.contains("unique-exchange: PASS"));
    assert!(report.contains("denominators: SKIP"));
    assert!(report.contains("connectivity: SKIP"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["seeds"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["mutate", "--inline", "2;1 2", "-k", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "--inline", "2;1 2", "--checks", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    // infinite type cannot be verified
    let out = run(&["verify", "--inline", "2;1 2 2"]);
    assert_eq!(out.status.code(), Some(2));

    // e7 input without the opt-in flag
    let out = run(&["seeds", "--inline", "7;1 2;2 3;3 4;4 5;5 6;7 3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exits_zero_on_every_small_dynkin_quiver() {
    let cases = [
        "1",
        "2;1 2",
        "3;1 2;2 3",
        "3;2 1;2 3",
        "4;1 2;2 3;3 4",
        "4;1 2;3 2;3 4",
        "4;1 4;2 4;3 4",
        "4;4 1;2 4;4 3",
    ];
    for inline in cases {
        let out = run(&["verify", "--inline", inline, "--checks", "all"]);
        assert!(out.status.success(), "verify failed for {inline:?}");
        assert!(!String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    for fmt in ["text", "json", "dot"] {
        let a = run(&["seeds", "-q", q.to_str().unwrap(), "--format", fmt]);
        let b = run(&["seeds", "-q", q.to_str().unwrap(), "--format", fmt]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "format {fmt}");
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let target = dir.path().join("out.json");
    let out = run(&[
        "classify",
        "-q",
        q.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["finite"], serde_json::Value::Bool(true));
    assert_eq!(v["diagram"], serde_json::Value::String("A3".into()));
}

#[test]
fn cache_round_trip_through_the_env_var() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let cache = dir.path().join("cache");
    let first = bin()
        .args(["class", "-q", q.to_str().unwrap()])
        .env("CLUSTERFORGE_CACHE", &cache)
        .output()
        .unwrap();
    assert!(first.status.success());
    assert!(cache.read_dir().unwrap().next().is_some());
    let second = bin()
        .args(["class", "-q", q.to_str().unwrap()])
        .env("CLUSTERFORGE_CACHE", &cache)
        .output()
        .unwrap();
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn ar_quiver_dot_marks_tau_dashed() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let out = run(&["ar-quiver", "-q", q.to_str().unwrap(), "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.contains("style=dashed"));
    assert!(dot.starts_with("digraph"));
}

#[test]
fn dropped_subgraph_keeps_six_objects() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_a3(dir.path());
    let out = run(&[
        "ar-quiver",
        "-q",
        q.to_str().unwrap(),
        "--drop",
        "P1,P2,P3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("objects: 6\n"), "got: {text}");
}

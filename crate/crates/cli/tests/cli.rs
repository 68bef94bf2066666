//! End-to-end runs of the `noncross` binary.

use noncross::configurations::DiagramKind;
use noncross_cli::output::DiagramRecord;
use std::process::{Command, Output};

fn noncross(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noncross")).args(args).output().expect("binary runs")
}

fn noncross_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noncross"))
        .env("NONCROSS_THREADS", threads)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(text: &str) -> Vec<DiagramRecord> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn sample_json_lines_are_deterministic() {
    let args = ["sample", "--model", "dissection", "--n", "4", "--count", "3", "--seed", "7", "--format", "json"];
    let first = stdout(&noncross(&args));
    assert_eq!(first, stdout(&noncross(&args)));
    let recs = records(&first);
    assert_eq!(recs.len(), 3);
    for (j, r) in recs.iter().enumerate() {
        assert_eq!(r.model, "dissection");
        assert_eq!(r.polygon, 5);
        assert_eq!(r.seed, 7);
        assert_eq!(r.stream, j as u64);
        assert!(r.blocks.is_none());
    }
}

#[test]
fn every_model_reparses_with_its_invariant() {
    let cases: [(&[&str], DiagramKind, usize); 7] = [
        (&["--model", "dissection"], DiagramKind::Dissection, 41),
        (&["--model", "triangulation"], DiagramKind::Dissection, 41),
        (&["--model", "dissection-A", "--degrees", "3,5"], DiagramKind::Dissection, 41),
        (&["--model", "nct"], DiagramKind::Nct, 40),
        (&["--model", "pair-partition"], DiagramKind::PairPartition, 80),
        (&["--model", "partition"], DiagramKind::PartitionHulls, 40),
        (&["--model", "nc-graph"], DiagramKind::NcGraph, 40),
    ];
    for (model, kind, polygon) in cases {
        let mut args = vec!["sample", "--n", "40", "--count", "20", "--seed", "3"];
        args.extend_from_slice(model);
        for r in records(&stdout(&noncross(&args))) {
            let d = r.diagram().unwrap();
            assert_eq!(d.kind(), kind);
            assert_eq!(d.polygon(), polygon);
            assert_eq!(r.blocks.is_some(), kind == DiagramKind::PartitionHulls);
        }
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let sample = ["sample", "--model", "nct", "--n", "60", "--count", "50", "--seed", "9"];
    assert_eq!(stdout(&noncross_threads("1", &sample)), stdout(&noncross_threads("2", &sample)));
    let stats =
        ["stats", "--model", "dissection", "--stat", "max-face", "--n", "300", "--samples", "200", "--seed", "4"];
    assert_eq!(stdout(&noncross_threads("1", &stats)), stdout(&noncross_threads("3", &stats)));
}

#[test]
fn triangulation_svg() {
    let svg = stdout(&noncross(&["sample", "--model", "triangulation", "--n", "4", "--format", "svg"]));
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"width="1000" height="1000""#));
    assert!(svg.contains(r#"r="480""#));
    assert_eq!(svg.matches("<line").count(), 2);
}

#[test]
fn sample_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.jsonl");
    let o = noncross(&[
        "sample",
        "--model",
        "pair-partition",
        "--n",
        "5",
        "--count",
        "4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(records(&std::fs::read_to_string(&path).unwrap()).len(), 4);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| noncross(args).status.code().unwrap();
    assert_eq!(code(&["sample", "--model", "dissection-A", "--degrees", "4", "--n", "4"]), 2);
    assert_eq!(code(&["sample", "--model", "dissection", "--n", "4", "--bogus"]), 1);
    assert_eq!(code(&["sample", "--model", "unknown", "--n", "4"]), 1);
    assert_eq!(code(&["sample", "--model", "dissection-A", "--n", "4"]), 1);
    assert_eq!(code(&["sample", "--model", "nct", "--degrees", "3", "--n", "4"]), 1);
    assert_eq!(code(&["sample", "--model", "nct", "--n", "4", "--count", "2", "--format", "svg"]), 1);
    assert_eq!(code(&["stats", "--model", "dissection", "--stat", "height", "--n", "9", "--limit", "root-face"]), 1);
    assert_eq!(code(&["test", "--only", "nothing"]), 1);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing").join("out.json");
    assert_eq!(code(&["sample", "--model", "dissection", "--n", "4", "--output", missing.to_str().unwrap()]), 3);
    assert_eq!(code(&["--help"]), 0);
    let bad_threads = noncross_threads("zero", &["count", "--model", "nct", "--n", "5"]);
    assert_eq!(bad_threads.status.code(), Some(1));
}

#[test]
fn counts() {
    assert_eq!(stdout(&noncross(&["count", "--model", "dissection", "--n", "7", "--mode", "exact"])), "903\n");
    assert_eq!(stdout(&noncross(&["count", "--model", "nct", "--n", "5", "--mode", "exact"])), "55\n");
    assert_eq!(stdout(&noncross(&["count", "--model", "triangulation", "--n", "7"])), "132\n");
    let asy = stdout(&noncross(&["count", "--model", "dissection", "--mode", "asymptotic"]));
    let field = |name: &str| -> f64 { asy.lines().find_map(|l| l.strip_prefix(name)).unwrap().trim().parse().unwrap() };
    assert!((field("growth") - 5.828427).abs() < 1e-6);
    assert!((field("constant") - 0.011920).abs() < 1e-6);
    let with_n = stdout(&noncross(&["count", "--model", "triangulation", "--mode", "asymptotic", "--n", "99"]));
    assert!(with_n.contains("ln_estimate "));
    assert!(with_n.contains("estimate "));
}

#[test]
fn stats_reports() {
    let json = stdout(&noncross(&[
        "stats",
        "--model",
        "dissection",
        "--stat",
        "root-vertex",
        "--n",
        "500",
        "--samples",
        "400",
        "--seed",
        "11",
        "--limit",
        "root-vertex",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["samples"], 400);
    let total: u64 = v["histogram"].as_array().unwrap().iter().map(|h| h[1].as_u64().unwrap()).sum();
    assert_eq!(total, 400);
    assert_eq!(v["tests"][0]["name"], "tv-root-vertex");
    assert!(v.get("values").is_none());

    let ks = stdout(&noncross(&[
        "stats",
        "--model",
        "pair-partition",
        "--stat",
        "longest-chord",
        "--n",
        "100",
        "--samples",
        "200",
        "--limit",
        "longest-chord-cdf",
    ]));
    let v: serde_json::Value = serde_json::from_str(&ks).unwrap();
    assert_eq!(v["tests"][0]["name"], "ks-longest-chord-cdf");

    let inter = stdout(&noncross(&[
        "stats",
        "--model",
        "dissection",
        "--stat",
        "intersections",
        "--n",
        "200",
        "--samples",
        "30",
        "--alpha",
        "0.1",
        "--beta",
        "0.6",
    ]));
    let v: serde_json::Value = serde_json::from_str(&inter).unwrap();
    assert_eq!(v["values"].as_array().unwrap().len(), 30);

    let csv = stdout(&noncross(&[
        "stats",
        "--model",
        "nct",
        "--stat",
        "height",
        "--n",
        "100",
        "--samples",
        "50",
        "--format",
        "csv",
    ]));
    assert!(csv.starts_with("value,count\n"));
    let counted: u64 = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(counted, 50);
}

#[test]
fn concentration_table() {
    let csv = stdout(&noncross(&[
        "concentration",
        "--kind",
        "vertex",
        "--grid",
        "100,200",
        "--samples",
        "50",
        "--seed",
        "2",
        "--format",
        "csv",
    ]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("n,samples,lower"));
    assert!(lines[1].starts_with("100,50,"));
}

#[test]
fn acceptance_subset() {
    let o = noncross(&["test", "--only", "enumeration"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.lines().any(|l| l.starts_with("PASS  1 [enumeration]")));
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
}

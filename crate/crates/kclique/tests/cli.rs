//! End-to-end tests driving the compiled binary.

mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::k6_minus_edge;
use kclique::gen;
use serde_json::Value;

fn kclique(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kclique"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graph(path: &Path, g: &kclique::graph::Graph) {
    let mut buf = Vec::new();
    g.write_edge_list(&mut buf).unwrap();
    fs::write(path, buf).unwrap();
}

fn stdout_json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().last().expect("json line");
    serde_json::from_str(line).expect("valid json")
}

#[test]
fn count_near_clique_golden() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("near_clique.txt");
    write_graph(&path, &k6_minus_edge());

    let out = kclique(&["count", path.to_str().unwrap(), "-k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["count"], 2);
    assert_eq!(json["order"], "degeneracy");
    assert_eq!(json["order_stat_name"], "s");
    assert_eq!(json["order_stat"], 4);
    assert!(json["elapsed_ms"].as_f64().unwrap() >= 0.0);

    let out = kclique(&["count", path.to_str().unwrap(), "-k", "6"]);
    assert_eq!(stdout_json(&out)["count"], 0);
}

#[test]
fn count_k2_reports_edge_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let g = gen::gnp(15, 0.4, 11);
    write_graph(&path, &g);
    for order in ["degeneracy", "approx-degeneracy", "hybrid", "commdeg", "approx-commdeg"] {
        let out = kclique(&["count", path.to_str().unwrap(), "-k", "2", "--order", order]);
        assert_eq!(out.status.code(), Some(0), "order {order}");
        assert_eq!(stdout_json(&out)["count"], g.m() as u64, "order {order}");
    }
}

#[test]
fn count_verify_against_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    write_graph(&path, &gen::gnp(20, 0.4, 3));
    let out = kclique(&[
        "count",
        path.to_str().unwrap(),
        "-k",
        "4",
        "--order",
        "commdeg",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verified"], true);
}

#[test]
fn verify_refuses_large_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    write_graph(&path, &gen::gnp(40, 0.2, 5));
    let out = kclique(&["count", path.to_str().unwrap(), "-k", "4", "--verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_mode_emits_cliques_in_raw_ids() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.txt");
    // A triangle on sparse raw ids.
    fs::write(&path, "10 40\n40 70\n70 10\n").unwrap();
    let out = kclique(&["count", path.to_str().unwrap(), "-k", "3", "--mode", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "10 40 70");
    assert_eq!(lines.len(), 2); // the clique line plus the JSON line

    let listing = dir.path().join("cliques.txt");
    let out = kclique(&[
        "count",
        path.to_str().unwrap(),
        "-k",
        "3",
        "--mode",
        "list",
        "--output",
        listing.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&listing).unwrap(), "10 40 70\n");
}

#[test]
fn stats_hypercube_and_k6() {
    let dir = tempfile::tempdir().unwrap();
    let q3 = dir.path().join("q3.txt");
    write_graph(&q3, &gen::hypercube(3));
    let json = stdout_json(&kclique(&["stats", q3.to_str().unwrap()]));
    assert_eq!(json["n"], 8);
    assert_eq!(json["m"], 12);
    assert_eq!(json["T"], 0);
    assert_eq!(json["s"], 3);
    assert_eq!(json["sigma"], 0);

    let k6 = dir.path().join("k6.txt");
    write_graph(&k6, &gen::complete(6));
    let json = stdout_json(&kclique(&["stats", k6.to_str().unwrap()]));
    assert_eq!(json["n"], 6);
    assert_eq!(json["m"], 15);
    assert_eq!(json["T"], 20);
    assert_eq!(json["s"], 5);
    assert_eq!(json["sigma"], 4);
    assert_eq!(json["max_community"], 4);

    let near = dir.path().join("near_clique.txt");
    write_graph(&near, &k6_minus_edge());
    let json = stdout_json(&kclique(&["stats", near.to_str().unwrap()]));
    assert_eq!(json["T"], 16);
    assert_eq!(json["s"], 4);
    assert_eq!(json["sigma"], 3);
}

#[test]
fn binary_cache_accepted_as_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("near.bin");
    let mut buf = Vec::new();
    k6_minus_edge().write_cache(&mut buf).unwrap();
    fs::write(&path, buf).unwrap();
    let out = kclique(&["count", path.to_str().unwrap(), "-k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["count"], 2);
}

#[test]
fn bench_rows_counts_and_pruning_probes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    write_graph(&path, &gen::gnp(18, 0.5, 21));

    let csv_path = dir.path().join("bench.csv");
    let out = kclique(&[
        "bench",
        path.to_str().unwrap(),
        "-k",
        "4,5",
        "--threads",
        "1,2",
        "--reps",
        "2",
        "--output",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(&csv_path).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(
        rows[0],
        "graph,order,k,threads,count,elapsed_ms,recursive_calls,probes"
    );
    assert_eq!(rows.len(), 5);
    let field = |row: &str, i: usize| row.split(',').nth(i).unwrap().to_string();
    // Counts agree across thread settings, per k.
    assert_eq!(field(rows[1], 4), field(rows[2], 4));
    assert_eq!(field(rows[3], 4), field(rows[4], 4));

    // With pruning disabled, probes never decrease.
    let out_on = kclique(&["bench", path.to_str().unwrap(), "-k", "5", "--reps", "1"]);
    let out_off = kclique(&[
        "bench",
        path.to_str().unwrap(),
        "-k",
        "5",
        "--reps",
        "1",
        "--no-prune",
    ]);
    let probes = |o: &Output| -> u64 {
        let text = String::from_utf8_lossy(&o.stdout);
        let row = text.lines().nth(1).unwrap().to_string();
        row.split(',').nth(7).unwrap().parse().unwrap()
    };
    assert!(probes(&out_on) <= probes(&out_off));
}

#[test]
fn error_exits_are_code_two() {
    let out = kclique(&["count", "/nonexistent/g.txt", "-k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    write_graph(&path, &gen::complete(4));
    // k = 0 is a parameter error.
    let out = kclique(&["count", path.to_str().unwrap(), "-k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown order name is a clap usage error.
    let out = kclique(&["count", path.to_str().unwrap(), "-k", "3", "--order", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    // Non-positive epsilon is rejected by the approximate orders.
    let out = kclique(&[
        "count",
        path.to_str().unwrap(),
        "-k",
        "3",
        "--order",
        "approx-degeneracy",
        "--epsilon",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Malformed input line.
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 1\npotato\n").unwrap();
    let out = kclique(&["count", bad.to_str().unwrap(), "-k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr was: {err}");
}

#[test]
fn threads_flag_changes_nothing_but_workers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    write_graph(&path, &gen::gnp(22, 0.5, 33));
    let mut counts = Vec::new();
    for t in ["1", "2", "8"] {
        let out = kclique(&[
            "count",
            path.to_str().unwrap(),
            "-k",
            "5",
            "--threads",
            t,
        ]);
        assert_eq!(out.status.code(), Some(0));
        counts.push(stdout_json(&out)["count"].as_u64().unwrap());
    }
    assert_eq!(counts[0], counts[1]);
    assert_eq!(counts[0], counts[2]);
}

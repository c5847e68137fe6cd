use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gbei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(args)
        .env_remove("GBEI_FIELD_CHAR")
        .env_remove("GBEI_MAX_VARS")
        .env_remove("GBEI_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = gbei(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn ideal_generator_counts() {
    let v = json(&["ideal", "--graph", "path:3", "--m", "3"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 6);
    let v = json(&["ideal", "--graph6", "A_", "--m", "2"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 1);
    let out = gbei(&["ideal", "--graph", "complete:1", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no edges"));
}

#[test]
fn cut_sets_and_primes() {
    let v = json(&["cutsets", "--graph", "path:4"]);
    assert_eq!(v["sets"], serde_json::json!([[], [2], [3]]));
    let v = json(&["cutsets", "--graph", "complete:3"]);
    assert_eq!(v["sets"], serde_json::json!([[]]));
    let out = gbei(&["primes", "--graph", "path:3", "--m", "3", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("decomposition verified"));
    let v = json(&["primes", "--graph", "path:3", "--m", "3", "--check"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["primes"].as_array().unwrap().len(), 2);
}

#[test]
fn cograph_outputs() {
    let v = json(&["cograph", "--graph", "path:4"]);
    assert_eq!(v["cograph"], false);
    let w: Vec<u64> = serde_json::from_value(v["witness"].clone()).unwrap();
    assert!(w == [1, 2, 3, 4] || w == [4, 3, 2, 1]);
    let v = json(&["cograph", "--graph", "complete:4"]);
    assert_eq!(v["cotree"]["kind"], "join");
    assert_eq!(v["cotree"]["children"].as_array().unwrap().len(), 4);
    let v = json(&["cograph", "--join", "empty:1+empty:1,complete:2"]);
    assert_eq!(v["cograph"], true);
}

#[test]
fn regularity_values() {
    let v = json(&["reg", "--graph", "path:4", "--m", "3", "--mode", "both"]);
    assert_eq!(v["value"], 3);
    let v = json(&["reg", "--graph", "star:3", "--m", "3", "--mode", "both"]);
    assert_eq!(v["value"], 3);
    let v = json(&["reg", "--graph", "complete:3", "--m", "3", "--mode", "formula"]);
    assert_eq!(v["value"], 2);
    assert_eq!(v["provenance"]["tag"], "complete-graphs");
    let v = json(&["reg", "--join", "empty:1+empty:1,complete:2", "--m", "3"]);
    assert_eq!(v["value"], 3);
}

#[test]
fn resource_limit_exit_code() {
    let out = gbei(&["reg", "--graph", "complete:5", "--m", "5", "--mode", "oracle", "--max-vars", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(["reg", "--graph", "complete:5", "--m", "5", "--mode", "oracle"])
        .env("GBEI_MAX_VARS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(gbei(&["reg", "--graph", "tree:3", "--m", "3"]).status.code(), Some(2));
    assert_eq!(gbei(&["reg", "--m", "3"]).status.code(), Some(2));
    assert_eq!(gbei(&["verify", "--suite", "unknown"]).status.code(), Some(2));
    assert_eq!(gbei(&["reg", "--graph", "path:3", "--m", "3", "--field-char", "4"]).status.code(), Some(2));
}

#[test]
fn summary_and_classify() {
    let v = json(&["summary", "--graph", "complete:3", "--m", "3"]);
    assert_eq!(v["summary"]["depth"], 5);
    assert_eq!(v["summary"]["gorenstein"], true);
    let v = json(&["classify", "--graph", "multipartite:1,2,2", "--m", "3"]);
    assert_eq!(v["reg2"], true);
    let v = json(&["construct", "--n", "6", "--r", "3", "--m", "3"]);
    assert_eq!(v["description"], "P4 * K2^c");
}

#[test]
fn verify_single_suite() {
    let out = gbei(&["verify", "--suite", "join-cutsets"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS join-cutsets"));
}

#[test]
fn json_is_deterministic() {
    let a = gbei(&["reg", "--graph", "path:4", "--m", "3", "--json"]);
    let b = gbei(&["reg", "--graph", "path:4", "--m", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

fn connected_four() -> Vec<String> {
    gbei::graph::isomorphism_classes(4)
        .into_iter()
        .filter(|g| g.is_connected())
        .map(|g| gbei::graph::write_graph6(&g))
        .collect()
}

fn catalog(input: &std::path::Path, output: &std::path::Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "catalog",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output.to_str().unwrap(),
        "--m",
        "3",
    ];
    args.extend_from_slice(extra);
    gbei(&args)
}

fn records(path: &std::path::Path) -> Vec<Value> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn catalog_connected_four_vertex_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    let output = dir.path().join("out.jsonl");
    let codes = connected_four();
    assert_eq!(codes.len(), 6);
    let mut f = std::fs::File::create(&input).unwrap();
    writeln!(f, ">>graph6<<{}", codes[0]).unwrap();
    for code in &codes[1..] {
        writeln!(f, "{code}").unwrap();
    }
    drop(f);
    let out = catalog(&input, &output, &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = records(&output);
    assert_eq!(recs.len(), 6);
    for (rec, code) in recs.iter().zip(&codes) {
        assert_eq!(rec["graph6"], code.as_str());
        assert!(rec["errors"].as_array().unwrap().is_empty(), "{rec}");
        let oracle = json(&["reg", "--graph6", code, "--m", "3", "--mode", "oracle"]);
        assert_eq!(rec["reg"]["value"], oracle["value"]);
    }

    // resume after a torn write: no duplicates, torn line repaired
    let text = std::fs::read_to_string(&output).unwrap();
    let keep: Vec<&str> = text.lines().take(2).collect();
    std::fs::write(&output, format!("{}\n{{\"graph6\":\"C", keep.join("\n"))).unwrap();
    let out = catalog(&input, &output, &["--resume"]);
    assert!(out.status.success());
    let recs = records(&output);
    assert_eq!(recs.len(), 6);
    let got: Vec<&str> = recs.iter().map(|r| r["graph6"].as_str().unwrap()).collect();
    assert_eq!(got, codes);
    let out = catalog(&input, &output, &["--resume"]);
    assert!(stdout(&out).contains("0 records written, 6 skipped"));
}

#[test]
fn catalog_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    let output = dir.path().join("out.jsonl");
    std::fs::write(&input, "").unwrap();
    let out = catalog(&input, &output, &[]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "");

    // a bad code is recorded, not fatal
    std::fs::write(&input, "C~\n!!bad\nA_\n").unwrap();
    let out = catalog(&input, &output, &[]);
    assert!(out.status.success());
    let recs = records(&output);
    assert_eq!(recs.len(), 3);
    assert!(recs[1]["errors"][0].as_str().unwrap().starts_with("graph6"));
    assert!(recs[0]["classification"]["reg2"].as_bool().unwrap());
    assert!(recs[2]["classification"].is_null());
}

#[test]
fn catalog_from_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("out.jsonl");
    let mut child = Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(["catalog", "--input", "-", "--m", "2,3", "--output", output.to_str().unwrap()])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"A_\nBw\n").unwrap();
    assert!(child.wait().unwrap().success());
    let recs = records(&output);
    let keys: Vec<(String, u64)> = recs
        .iter()
        .map(|r| (r["graph6"].as_str().unwrap().to_string(), r["m"].as_u64().unwrap()))
        .collect();
    assert_eq!(
        keys,
        [("A_".into(), 2), ("A_".into(), 3), ("Bw".into(), 2), ("Bw".into(), 3)]
    );
}

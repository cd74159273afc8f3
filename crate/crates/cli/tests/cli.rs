use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starcolor"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = run(dir, args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.trim()).unwrap()
}

#[test]
fn gen_color_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cases: [(&[&str], &str); 7] = [
        (&["--family", "necklace", "--h", "9"], "necklace"),
        (&["--family", "cubic-halin", "--leaves", "21", "--seed", "4"], "cubic-halin"),
        (&["--family", "complete-halin", "--spec", "[[[],[],[],[],[]],[[],[],[],[],[]],[[],[],[],[],[]]]"], "complete-halin"),
        (&["--family", "tree", "--n", "40", "--seed", "1"], "tree"),
        (&["--family", "path-square", "--n", "12"], "path-square"),
        (&["--family", "cycle-square", "--n", "13"], "cycle-square"),
        (&["--family", "petersen3n", "--n", "4"], "petersen3n"),
    ];
    for (family, algorithm) in cases {
        let mut args = vec!["gen"];
        args.extend_from_slice(family);
        args.extend(["--out", "g.json"]);
        ok(d, &args);
        for alg in [algorithm, "auto"] {
            ok(d, &["color", "--algorithm", alg, "--in", "g.json", "--out", "c.json"]);
            let v = json(&ok(d, &["verify", "--graph", "g.json", "--coloring", "c.json"]));
            assert_eq!(v["ok"], true, "{algorithm}");
        }
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "path", "--n", "6", "--out", "p.json"]);
    std::fs::write(d.join("bad.json"), r#"{"colors": [1, 2, 1, 2, 3]}"#).unwrap();
    let out = run(d, &["verify", "--graph", "p.json", "--coloring", "bad.json"]);
    assert_eq!(out.status.code(), Some(1));
    let w = json(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(w["kind"], "BicoloredPath4");
    assert_eq!(w["vertices"], serde_json::json!([0, 1, 2, 3, 4]));

    let out = run(d, &["verify", "--graph", "p.json", "--coloring", "bad.json", "--mode", "proper"]);
    assert_eq!(out.status.code(), Some(0));

    std::fs::write(d.join("short.json"), r#"{"colors": [1, 2]}"#).unwrap();
    let out = run(d, &["verify", "--graph", "p.json", "--coloring", "short.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(d, &["verify", "--graph", "missing.json", "--coloring", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn strong_mode_uses_sub_edges() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "path", "--n", "6", "--out", "p.json"]);
    // edges 0 and 2 of the path are joined by edge 1
    std::fs::write(d.join("sub.json"), "[0, 2, 4]").unwrap();
    std::fs::write(d.join("near.json"), r#"{"colors": [1, 1, 2]}"#).unwrap();
    std::fs::write(d.join("far.json"), r#"{"colors": [1, 2, 1]}"#).unwrap();
    let args = |c: &'static str| ["verify", "--graph", "p.json", "--coloring", c, "--mode", "strong", "--sub", "sub.json"];
    assert_eq!(run(d, &args("near.json")).status.code(), Some(1));
    assert_eq!(run(d, &args("far.json")).status.code(), Some(0));
}

#[test]
fn exact_reports_index_and_infeasibility() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "named", "--name", "k4", "--out", "k4.json"]);
    let v = json(&ok(d, &["exact", "--graph", "k4.json"]));
    assert_eq!(v["k"], 5);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 6);
    assert!(v["nodes"].as_u64().unwrap() > 0);
    let v = json(&ok(d, &["exact", "--graph", "k4.json", "--parallel"]));
    assert_eq!(v["k"], 5);

    let out = run(d, &["exact", "--graph", "k4.json", "--max-k", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(d, &["exact", "--graph", "k4.json", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn family_mismatch_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "path-square", "--n", "8", "--out", "g.json"]);
    let out = run(d, &["color", "--algorithm", "cycle-square", "--in", "g.json", "--out", "c.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not match"));
}

#[test]
fn even_necklaces_go_to_the_cubic_colorer() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "necklace", "--h", "4", "--out", "g.json"]);
    let out = run(d, &["color", "--algorithm", "necklace", "--in", "g.json", "--out", "c.json"]);
    assert_eq!(out.status.code(), Some(2));
    ok(d, &["color", "--in", "g.json", "--out", "c.json"]);
    let v = json(&ok(d, &["verify", "--graph", "g.json", "--coloring", "c.json"]));
    assert!(v["colors"].as_u64().unwrap() <= 6);
}

#[test]
fn export_dot_from_figure() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "--family", "figure", "--name", "necklace-1", "--out", "g.json", "--coloring-out", "c.json"]);
    let dot = ok(d, &["export", "--format", "dot", "--graph", "g.json", "--coloring", "c.json"]);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches(", label=\"1\"]").count(), 2);
    ok(d, &["export", "--format", "dot", "--graph", "g.json", "--out", "g.dot"]);
    assert_eq!(std::fs::read_to_string(d.join("g.dot")).unwrap().matches(" -- ").count(), 6);
}

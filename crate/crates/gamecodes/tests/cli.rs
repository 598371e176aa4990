//! End-to-end tests of the installed binary: output shapes, exit codes,
//! and byte-level determinism.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gamecodes"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(stdout_of(out).trim()).expect("stdout is one JSON document")
}

fn write_file(dir: &TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

/// The fixed five-vertex graph, captured through the family subcommand
/// so the file format itself is exercised.
fn example2_file(dir: &TempDir) -> String {
    let out = run(&["family", "example2"]);
    assert_eq!(out.status.code(), Some(0));
    write_file(dir, "example2.graph", &stdout_of(&out))
}

#[test]
fn family_graphs_parse_back() {
    for args in [
        vec!["family", "gamma-t", "--t", "3"],
        vec!["family", "nim-heap", "--size", "5"],
        vec!["family", "star", "--k", "4"],
        vec!["family", "example2"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout_of(&out);
        let graph = gamecodes::groundgraph::GroundGraph::parse(&text).unwrap();
        assert_eq!(graph.serialize(), text, "{args:?} must print canonical form");
    }
}

#[test]
fn solve_position_json_shape() {
    let dir = TempDir::new().unwrap();
    let graph = example2_file(&dir);
    let out = run(&[
        "solve", "--graph", &graph, "--position", "1111", "--json", "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["counter", "decimal", "gamma", "outcome", "position"]);
    assert_eq!(v["position"], "1111");
    assert_eq!(v["decimal"], 15);
    assert_eq!(v["outcome"], "N");
    assert_eq!(v["gamma"]["finite"], 1);
    assert!(v["counter"].is_u64());

    // Same position by decimal; a draw position gets the infinite form.
    let by_decimal = run(&[
        "solve", "--graph", &graph, "--position", "15", "--decimal", "--json", "--quiet",
    ]);
    assert_eq!(json_of(&by_decimal), v);

    let draw = run(&[
        "solve", "--graph", &graph, "--position", "0001", "--json", "--quiet",
    ]);
    let v = json_of(&draw);
    assert_eq!(v["outcome"], "D");
    assert!(v["gamma"]["infinite"].as_array().is_some());
    assert_eq!(v["counter"], Value::Null);
}

#[test]
fn solve_whole_graph_counts() {
    let dir = TempDir::new().unwrap();
    let graph = example2_file(&dir);
    let out = run(&["solve", "--graph", &graph, "--gamma", "--json", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["positions"], 16);
    assert_eq!(v["p"], 4);
    assert_eq!(v["n"], 4);
    assert_eq!(v["d"], 8);
    assert_eq!(v["gamma"]["finite"], 8);
    assert_eq!(v["gamma"]["kernel_dim"], 2);
}

#[test]
fn anncode_reproduces_published_star_code() {
    let dir = TempDir::new().unwrap();
    let star = run(&["family", "star", "--k", "4"]);
    let graph = write_file(&dir, "star.graph", &stdout_of(&star));
    let out = run(&["anncode", "gen", "--graph", &graph, "--json", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["code"]["n"], 4);
    assert_eq!(v["code"]["size"], 8);
    assert_eq!(v["code"]["dim"], 3);
    assert_eq!(v["code"]["d"], 2);
    assert_eq!(v["code"]["linear"], true);
    let sha = v["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(sha.len(), 64);
}

#[test]
fn lexicode_gen_matches_published_table() {
    let dir = TempDir::new().unwrap();
    let matrix = write_file(&dir, "w.matrix", "1000\n1100\n0110\n0011\n");
    let out = run(&["lexicode", "gen", "--matrix", &matrix, "--d", "2", "--json", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let decimals: Vec<u64> = v["selected_decimals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(decimals, [0, 3, 6, 5, 12, 15, 10, 9]);
    assert_eq!(v["code"]["linear"], true);

    let value_order = run(&[
        "lexicode", "gen", "--matrix", &matrix, "--d", "2", "--order", "value", "--json",
        "--quiet",
    ]);
    let v = json_of(&value_order);
    let decimals: Vec<u64> = v["selected_decimals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(decimals, [0, 3, 5, 6, 9, 10, 12, 15]);
}

#[test]
fn analyze_report_shape() {
    let dir = TempDir::new().unwrap();
    let code = write_file(&dir, "c.code", "000\n011\n101\n110\n");
    let out = run(&["analyze", "--code", &code, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["basis", "d", "dim", "linear", "n", "size"]);
    assert_eq!(v["n"], 3);
    assert_eq!(v["size"], 4);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["d"], 2);
    assert_eq!(v["linear"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
}

#[test]
fn lexi_anncode_over_span() {
    let dir = TempDir::new().unwrap();
    let basis = write_file(&dir, "b.code", "1100\n0011\n");
    let out = run(&["lexi-anncode", "--basis", &basis, "--d", "2", "--json", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["code"]["size"], 4);
    assert_eq!(v["code"]["d"], 2);
}

#[test]
fn paper_examples_all_pass() {
    let out = run(&["paper", "examples", "--json", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    for c in checks {
        assert_eq!(c["pass"], true, "check {} failed: {}", c["name"], c["detail"]);
    }
}

#[test]
fn exit_code_2_on_parse_errors() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.graph");
    let out = run(&["solve", "--graph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).starts_with("error: "));
    assert!(stdout_of(&out).is_empty());

    let ragged = write_file(&dir, "ragged.matrix", "10\n1\n");
    let out = run(&["lexicode", "gen", "--matrix", &ragged, "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let bad_graph = write_file(&dir, "bad.graph", "vertices 2\n0 -> 9\n");
    let out = run(&["anncode", "gen", "--graph", &bad_graph]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown flags are usage errors, which are also parse failures.
    let out = run(&["solve", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_3_on_precondition_errors() {
    let dir = TempDir::new().unwrap();
    let out = run(&["family", "gamma-t", "--t", "12"]);
    assert_eq!(out.status.code(), Some(3));

    let dep = write_file(&dir, "dep.code", "11\n11\n");
    let out = run(&["lexi-anncode", "--basis", &dep, "--d", "2"]);
    assert_eq!(out.status.code(), Some(3));

    let graph = example2_file(&dir);
    let out = run(&["solve", "--graph", &graph, "--position", "11111"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_4_on_scale_caps() {
    let dir = TempDir::new().unwrap();
    let big = run(&["family", "gamma-t", "--t", "5"]);
    let graph = write_file(&dir, "big.graph", &stdout_of(&big));
    let out = run(&["solve", "--graph", &graph, "--max-coords", "10"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_of(&out).contains("cap"));

    let matrix = write_file(&dir, "w5.matrix", "10000\n11000\n11100\n11110\n11111\n");
    let out = run(&["lexicode", "gen", "--matrix", &matrix, "--d", "2", "--max-m", "3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn stdout_is_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let graph = example2_file(&dir);
    for args in [
        vec!["anncode", "gen", "--graph", graph.as_str(), "--gamma", "--json"],
        vec!["anncode", "gen", "--graph", graph.as_str(), "--gamma"],
        vec!["solve", "--graph", graph.as_str(), "--gamma", "--json"],
        vec!["paper", "examples"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?} stdout must be byte-identical");
    }
}

#[test]
fn quiet_silences_listings_and_timing() {
    let dir = TempDir::new().unwrap();
    let graph = example2_file(&dir);
    let loud = run(&["anncode", "gen", "--graph", &graph]);
    let quiet = run(&["anncode", "gen", "--graph", &graph, "--quiet"]);
    assert!(stderr_of(&loud).contains("wall"));
    assert!(stderr_of(&quiet).is_empty());
    assert!(stdout_of(&loud).lines().count() > stdout_of(&quiet).lines().count());
    // The summary lines survive quiet mode.
    assert!(stdout_of(&quiet).contains("code: n = 4"));
}

#[test]
fn graph_files_accept_comments_and_labels() {
    let dir = TempDir::new().unwrap();
    let text = "# two-cycle with a tail\nvertices 3\nlabel 0 a\n0 -> 1\n1 -> 0\n2 -> 0\n";
    let graph = write_file(&dir, "cyc.graph", text);
    let out = run(&["solve", "--graph", &graph, "--json", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["positions"], 8);
}

#[test]
fn help_names_every_subcommand() {
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for name in [
        "lexicode",
        "lexi-anncode",
        "anncode",
        "solve",
        "analyze",
        "family",
        "paper",
    ] {
        assert!(text.contains(name), "help must mention {name}");
    }
}

#[test]
fn code_files_roundtrip_through_analyze() {
    let dir = TempDir::new().unwrap();
    // Comments and blank lines are part of the format.
    let code = write_file(&dir, "c.code", "# sample\n\n0110\n0000\n1001\n1111\n");
    let out = run(&["analyze", "--code", &code, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["size"], 4);
    assert_eq!(v["linear"], true);
    assert!(Path::new(&code).exists());
}

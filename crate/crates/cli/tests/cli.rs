//! End-to-end runs of the binary: output shapes, exit codes, batch
//! mode and the determinism-across-jobs guarantee.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use scgraph_core::{graph6, is_antimorphism, parse_cycles, Graph};

fn scgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scgraph"))
        .args(args)
        .env_remove("SCGRAPH_MAX_N")
        .output()
        .expect("binary runs")
}

fn scgraph_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_scgraph"))
        .args(args)
        .env_remove("SCGRAPH_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().unwrap()
}

const BULL: &str = "DBk";
const C5: &str = "DUW";

#[test]
fn enum_n5_prints_two_sorted_lines() {
    let out = scgraph(&["enum", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 2);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    for line in lines {
        let g = graph6::parse(line).unwrap();
        assert!(scgraph_core::find_antimorphism(&g).is_some());
    }
}

#[test]
fn enum_empty_residue_is_quiet_success() {
    let out = scgraph(&["enum", "--n", "6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
}

#[test]
fn enum_guard_is_an_input_error() {
    let out = scgraph(&["enum", "--n", "20"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn guard_override_via_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_scgraph"))
        .args(["enum", "--n", "14"])
        .env("SCGRAPH_MAX_N", "14")
        .output()
        .unwrap();
    // 14 = 4k+2 admits no sc-graphs, but the guard no longer trips.
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
}

#[test]
fn antimorphism_output_parses_and_verifies() {
    let out = scgraph(&["antimorphism", C5]);
    assert_eq!(code(&out), 0);
    let g = graph6::parse(C5).unwrap();
    let tau = parse_cycles(stdout(&out).trim(), 5).unwrap();
    assert_eq!(is_antimorphism(&g, &tau), Ok(true));
}

#[test]
fn antimorphism_pow2_has_dyadic_cycles() {
    let out = scgraph(&["antimorphism", "--pow2", C5]);
    assert_eq!(code(&out), 0);
    let tau = parse_cycles(stdout(&out).trim(), 5).unwrap();
    assert!(tau.cycle_decomposition().lengths().iter().all(|l| l.is_power_of_two()));
}

#[test]
fn antimorphism_absent_is_exit_one() {
    // K3 and its complement have different edge counts.
    let out = scgraph(&["antimorphism", "Bw"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn p4_partition_of_c5_reports_leftover_and_json() {
    let out = scgraph(&["p4-partition", C5]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.iter().any(|l| l.starts_with("leftover: ")));
    let json: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    let quads = json.as_array().unwrap();
    assert_eq!(quads.len(), 1);
    // The printed quad is an induced path in order.
    let g = graph6::parse(C5).unwrap();
    let quad: Vec<usize> =
        quads[0].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect();
    assert!(g.is_induced_p4([quad[0], quad[1], quad[2], quad[3]]).unwrap());
}

#[test]
fn p4_partition_rejects_non_sc_with_exit_one() {
    let out = scgraph(&["p4-partition", "C~"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn detect_c5_on_bull_is_none() {
    let out = scgraph(&["detect", "--c5", BULL]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn detect_skew_witness_reverifies() {
    let out = scgraph(&["detect", "--skew", BULL]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let part = |name: &str| -> scgraph_core::VertexSet {
        json[name].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect()
    };
    let w = scgraph_core::SkewPartition {
        a: part("A"),
        b: part("B"),
        c: part("C"),
        d: part("D"),
    };
    let g = graph6::parse(BULL).unwrap();
    assert!(scgraph_core::verify_skew_partition(&g, &w));
}

#[test]
fn detect_symmetric_on_p4() {
    let p4 = graph6::write(&Graph::path(4));
    let out = scgraph(&["detect", "--symmetric", &p4]);
    assert_eq!(code(&out), 0);
}

#[test]
fn detect_requires_exactly_one_flag() {
    let out = scgraph(&["detect", BULL]);
    assert_eq!(code(&out), 2);
    let both = scgraph(&["detect", "--c5", "--skew", BULL]);
    assert_eq!(code(&both), 2);
}

#[test]
fn theorem_m_on_bull_is_a_skew_case() {
    let out = scgraph(&["theorem-m", BULL]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["case"], 0);
    assert_eq!(json["kind"], "skew");
}

#[test]
fn theorem_m_accepts_explicit_tau() {
    let out = scgraph(&["theorem-m", "--tau", "(0)(1 3 4 2)", C5]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["kind"], "c5");
}

#[test]
fn theorem_m_rejects_bad_tau() {
    let out = scgraph(&["theorem-m", "--tau", "(0 1 2 3 4)", C5]);
    assert_eq!(code(&out), 2);
}

#[test]
fn theorem_m_without_eligible_type_is_none() {
    let p4 = graph6::write(&Graph::path(4));
    let out = scgraph(&["theorem-m", &p4]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn construct_p4_of_k1_is_p4() {
    let out = scgraph(&["construct", "--p4", "@"]);
    assert_eq!(code(&out), 0);
    let g = graph6::parse(stdout(&out).trim()).unwrap();
    assert_eq!(g, Graph::path(4));
    let joined = scgraph(&["construct", "--join", "@", "@"]);
    assert_eq!(stdout(&joined), stdout(&out));
}

#[test]
fn conjecture_reports_follow_the_schema() {
    let out = scgraph(&["conjecture", "--n", "8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11, "10 reports plus a summary");
    for line in &lines[..10] {
        let json: serde_json::Value = serde_json::from_str(line).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["graph", "n", "c5", "skew", "symmetric", "conjecture_holds", "theorem_m"]
        );
        assert_eq!(json["n"], 8);
        assert_eq!(json["conjecture_holds"], true);
    }
    assert!(lines[10].starts_with("n=8: 10 graphs, witnesses for 10/10"));
}

#[test]
fn conjecture_is_deterministic_across_jobs() {
    let one = scgraph(&["conjecture", "--n", "8", "--jobs", "1"]);
    let four = scgraph(&["conjecture", "--n", "8", "--jobs", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn conjecture_out_file_holds_the_reports() {
    let dir = std::env::temp_dir().join("scgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.jsonl");
    let out = scgraph(&["conjecture", "--n", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("n=5: 2 graphs"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 2);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn batch_mode_takes_the_worst_exit_code() {
    let out = scgraph_stdin(&["detect", "--c5", "-"], &format!("{C5}\n{BULL}\n"));
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_ne!(lines[0], "none");
    assert_eq!(lines[1], "none");
}

#[test]
fn malformed_graph6_is_exit_two() {
    let out = scgraph(&["detect", "--c5", "!!"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("graph6"));
}

#[test]
fn outputs_are_newline_terminated() {
    for args in [
        vec!["enum", "--n", "4"],
        vec!["antimorphism", C5],
        vec!["detect", "--skew", BULL],
        vec!["theorem-m", BULL],
    ] {
        let out = scgraph(&args);
        assert!(stdout(&out).ends_with('\n'), "{args:?}");
    }
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn edgeideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgeideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_json_for_barbell_complement() {
    let o = edgeideal(&["invariants", "--family", "barbell:4", "--complement", "--json", "--verify"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pdim"]["value"], 6);
    assert_eq!(v["max_degree"], 4);
    assert_eq!(v["pdim_verified"], true);
}

#[test]
fn edge_list_on_stdin() {
    let o = with_stdin(&["invariants", "-"], "# path on four vertices\n4\n1 2\n2 3\n3 4\n");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("pdim          2"), "{text}");
}

#[test]
fn recognize_accepts_a_generated_tree() {
    let o = edgeideal(&["recognize", "--family", "dq-tree:3,3,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "accepted");
}

#[test]
fn recognize_rejects_a_four_cycle() {
    let o = edgeideal(&["recognize", "--g6", "Cl"]);
    assert!(stdout(&o).starts_with("rejected: not chordal"));
}

#[test]
fn maxprocess_forced_tie_break() {
    let o = edgeideal(&["maxprocess", "--family", "barbell:3", "--tie-break", "forced:x1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("maximal independent: true"));
    let bad = edgeideal(&["maxprocess", "--family", "barbell:3", "--tie-break", "forced:x3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn generate_round_trips_through_graph6() {
    let g6 = stdout(&edgeideal(&["generate", "wheel:5"]));
    let o = edgeideal(&["invariants", "--g6", g6.trim(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["pdim"]["method"], "full-vertex");
}

#[test]
fn counterexample_table_gap() {
    let o = edgeideal(&["counterexample", "--rmin", "3", "--rmax", "4", "--json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let gaps: Vec<i64> = rows.iter().map(|r| r["gap"].as_i64().unwrap()).collect();
    assert_eq!(gaps, vec![1, 2]);
}

#[test]
fn scan_exit_codes() {
    let ok = edgeideal(&["scan", "--n", "5", "--suite", "thm-full-vertex", "--jobs", "1"]);
    assert!(ok.status.success(), "{}", stdout(&ok));
    let bad = edgeideal(&["scan", "--n", "4", "--suite", "prop-screens"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).lines().any(|l| l.starts_with("@\t")));
}

#[test]
fn scan_reads_graph6_file() {
    let dir = std::env::temp_dir().join(format!("edgeideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    std::fs::write(&path, "Cl\nD~{\n").unwrap();
    let o = edgeideal(&["scan", "--graph6-file", path.to_str().unwrap(), "--suite", "thm-pdim-max"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("2 graphs"));
}

#[test]
fn complex_from_facet_list() {
    let o = with_stdin(&["complex", "-"], "1 2\n2 3\n1 3\n");
    let text = stdout(&o);
    assert!(text.contains("homology      [0, 0, 1]"), "{text}");
    assert!(text.contains("vertex decomposable  true"));
}

#[test]
fn bad_graph6_reports_position() {
    let o = edgeideal(&["invariants", "--g6", "C\x01"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn tuza(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tuza"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("valid JSON")
}

#[test]
fn oracle_on_k4() {
    let o = tuza(&["oracle", "C~"], None);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("nu=1 tau=2 tuza=true"));
    let v = json(&tuza(&["oracle", "--json", "C~"], None));
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["nu"]["value"], 1);
    assert_eq!(v["tau"]["value"], 2);
    assert_eq!(v["holds"], true);
}

#[test]
fn mad_as_fraction() {
    let o = tuza(&["mad", "C~"], None);
    assert_eq!(stdout(&o).lines().next(), Some("3/1"));
    let o = tuza(&["mad", "--brute-force", "Dhc"], None);
    assert_eq!(stdout(&o).lines().next(), Some("2/1"));
}

#[test]
fn solve_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = tuza(&["solve", "--json", "-"], Some("E~~w\n"));
    assert!(o.status.success());
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["certified"], true);
    assert!(!v["trace"].as_array().unwrap().is_empty());
    let path = dir.path().join("w.json");
    std::fs::write(&path, &text).unwrap();
    let o = tuza(&["verify", "E~~w", path.to_str().unwrap()], None);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("ok: certified"));

    // an extra edge in Y no longer matches the trace
    let mut bad = v.clone();
    let y = bad["deleted"].as_array_mut().unwrap();
    let extra = (0..6)
        .flat_map(|a| (a + 1..6).map(move |b| serde_json::json!([a, b])))
        .find(|e| !y.contains(e))
        .unwrap();
    y.push(extra);
    std::fs::write(&path, bad.to_string()).unwrap();
    let o = tuza(&["verify", "E~~w", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("rejected"));
}

#[test]
fn text_solve_output_and_edge_lists() {
    let o = tuza(&["solve", "-"], Some("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "C~\t|T|=1\t|Y|=2\tcertified\tsteps=1");
}

#[test]
fn wke_and_reduce() {
    assert_eq!(stdout(&tuza(&["wke", "--brute-force", "D~{"], None)).trim(), "none");
    let o = tuza(&["wke", "Dhc"], None);
    assert!(stdout(&o).starts_with("method: "));
    let v = json(&tuza(&["reduce", "C~"], None));
    assert_eq!(v["kind"], "vertex");
    assert_eq!(v["provenance"], "neighborhood-wke");
    assert_eq!(v["residual_graph6"], "CB");
}

#[test]
fn audit_k6() {
    let v = json(&tuza(&["audit", "E~~w"], None));
    assert_eq!(v["rule"], "subsumption");
    assert!(v["final"].as_array().unwrap().iter().all(|c| c == "5/1"));
    assert_eq!(v["total_final"], "30/1");
    let v = json(&tuza(&["audit", "--rule", "low-degree", "E~~w"], None));
    assert_eq!(v["total_final"], "30/1");
    assert!(v["redlem"]["violations"].as_array().unwrap().iter().any(|x| x["clause"] == "b"));
}

#[test]
fn generate_and_scan() {
    let o = tuza(&["generate", "5", "--up-to"], None);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 2 + 4 + 11 + 34);
    assert_eq!(stdout(&tuza(&["generate", "5", "--connected"], None)).lines().count(), 21);
    let o = tuza(&["scan", "-", "--prune", "a,b", "--verify-pruned"], Some(&text));
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["total"], 52);
    assert_eq!(v["unproven_prunes"].as_array().unwrap().len(), 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let pruned = v["pruned"].as_u64().unwrap();
    assert_eq!(pruned + v["survivors"].as_array().unwrap().len() as u64, 52);
}

#[test]
fn exit_codes() {
    let o = tuza(&["oracle", "-"], Some("C~\nB\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = tuza(&["oracle", "-"], Some("3 2\n0 1\n0 5\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    // K12 has 220 triangles
    let k12 = format!("K{}", "~".repeat(11));
    assert_eq!(tuza(&["oracle", &k12], None).status.code(), Some(3));
    assert_eq!(tuza(&["scan", "-"], Some("Bw\n?x\n")).status.code(), Some(2));
}

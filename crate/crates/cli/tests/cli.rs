use std::path::PathBuf;
use std::process::{Command, Output};

fn adjdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjdim")).args(args).output().expect("spawn adjdim")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn dim2_of_small_graphs() {
    let o = adjdim(&["dim2", "Ch"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim2 = 2\n"));

    let o = adjdim(&["dim2", "--family", "path:10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim2 = 4\n"));

    let o = adjdim(&["dim2", "C~", "--show-basis", "--mode", "naive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dim2 = 3\n"));
    assert!(out.contains("basis = {0, 1, 2}\n"));
}

#[test]
fn dim2_json_is_a_census_record() {
    let o = adjdim(&["dim2", "--family", "cycle:5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["dim2"], 2);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["diameter"], 2);
}

#[test]
fn dim2_exit_codes() {
    assert_eq!(adjdim(&["dim2", "not graph6"]).status.code(), Some(2));
    assert_eq!(adjdim(&["dim2", "Ci~"]).status.code(), Some(2));
    assert_eq!(adjdim(&["dim2", "--family", "path:x"]).status.code(), Some(2));
    assert_eq!(adjdim(&["dim2", "--mode", "fast", "Ch"]).status.code(), Some(2));
    assert_eq!(adjdim(&["dim2"]).status.code(), Some(2));
    // order 0 parses but has no dimension
    assert_eq!(adjdim(&["dim2", "?"]).status.code(), Some(3));
}

#[test]
fn dim_needs_a_connected_graph() {
    let o = adjdim(&["dim", "--family", "kst:2,3", "--show-basis"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim = 3\n"));
    assert_eq!(adjdim(&["dim", "A?"]).status.code(), Some(3));
}

#[test]
fn family_output_formats() {
    let o = adjdim(&["family", "path:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Ch\n");

    let o = adjdim(&["family", "path:4", "--format", "edges"]);
    assert_eq!(stdout(&o), "4 3\n0 1\n1 2\n2 3\n");

    let o = adjdim(&["family", "omega:2,1,63", "--format", "json", "--with-dim"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["dim2"], 2);

    let o = adjdim(&["family", "extremal:8,5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["n"], 8);
    assert_eq!(v["diameter"], 5);

    for bad in ["bogus:3", "path", "kst:2", "extremal:4,5", "omega:3,0,0,1"] {
        assert_eq!(adjdim(&["family", bad]).status.code(), Some(2), "{bad}");
    }
    assert_eq!(adjdim(&["family", "path:4", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn census_writes_sorted_records_and_summary() {
    let dir = scratch("census");
    let path = dir.join("n4.jsonl");
    let o = adjdim(&["census", "--max-n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 18);
    let summary = stdout(&o);
    assert!(summary.contains("18 records written"));
    let keys: Vec<(u64, String)> = text
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            (v["n"].as_u64().unwrap(), v["graph6"].as_str().unwrap().to_string())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);

    let o = adjdim(&["census", "--max-n", "3", "--connected-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn census_is_identical_across_worker_counts() {
    let dir = scratch("census-workers");
    let mut files = Vec::new();
    for w in ["1", "8"] {
        let path = dir.join(format!("w{w}.jsonl"));
        let o = adjdim(&["census", "--max-n", "6", "--workers", w, "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        files.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
}

#[test]
fn census_scope_errors() {
    assert_eq!(adjdim(&["census", "--max-n", "8"]).status.code(), Some(2));
    assert_eq!(adjdim(&["census", "--max-n", "0"]).status.code(), Some(2));
}

#[test]
fn verify_writes_text_and_json_reports() {
    let dir = scratch("verify");
    let path = dir.join("report.txt");
    let o = adjdim(&["verify", "all", "--max-n", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.trim_end().ends_with("9 checks, 0 failed"));
    let json = std::fs::read_to_string(dir.join("report.txt.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
}

#[test]
fn verify_nminus2_at_seven() {
    let o = adjdim(&["verify", "nminus2", "--max-n", "7", "--workers", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("total"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(adjdim(&["verify", "bogus-id"]).status.code(), Some(2));
    assert_eq!(adjdim(&["verify"]).status.code(), Some(2));
    assert_eq!(adjdim(&["verify", "twins", "--max-n", "9"]).status.code(), Some(2));
}

#[test]
fn explore_lists_findings() {
    let o = adjdim(&["explore", "--diameters", "3", "--n-max", "6", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("D=3 n=4"));
    assert_eq!(adjdim(&["explore", "--diameters", "9"]).status.code(), Some(2));
}

use std::path::Path;
use std::process::{Command, Output};

use diffbase::{min_difference_basis, GroupSpec, SearchConfig};

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffbase"))
        .args(args)
        .env("DIFFBASE_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(&dir.path().join("c.jsonl"), args);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .trim()
}

#[test]
fn delta_of_small_groups() {
    for (kind, n, want) in [("cyclic", "57", "8"), ("dihedral", "35", "12"), ("interval", "6", "4")] {
        let (code, out) = run(&["delta", kind, n]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(field(&out, "delta:"), want, "{kind} {n}");
        assert_eq!(field(&out, "certified:"), "true");
    }
}

#[test]
fn delta_json_matches_library() {
    let (code, out) = run(&["delta", "dihedral", "9", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let lib = min_difference_basis(GroupSpec::dihedral(9), &SearchConfig::default()).unwrap();
    assert_eq!(v["delta"], lib.delta);
    assert_eq!(v["certified"], true);
    assert_eq!(v["witness"].as_array().unwrap().len() as u32, lib.delta);
}

#[test]
fn verify_exit_codes() {
    let (code, out) = run(&["verify", "cyclic", "7", "0,1,3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("pass"));
    let (code, out) = run(&["verify", "cyclic", "7", "0,1,2"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "fail: uncovered {3,4}");
    let (code, _) = run(&["verify", "cyclic", "7", "0,9"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify", "cyclic", "7", "0,x"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["delta", "cyclic", "0"]).0, 2);
    assert_eq!(run(&["delta", "torus", "5"]).0, 2);
    assert_eq!(run(&["table", "interval", "--max", "5"]).0, 2);
    assert_eq!(run(&["construct", "bose", "6"]).0, 2);
    assert_eq!(run(&["gapcheck", "--lo", "5"]).0, 2);
}

#[test]
fn caps_and_budgets_exit_three() {
    assert_eq!(run(&["table", "dihedral", "--max", "300"]).0, 3);
    assert_eq!(run(&["construct", "singer", "257"]).0, 3);
    let (code, out) = run(&["delta", "cyclic", "60", "--budget", "10"]);
    assert_eq!(code, 3, "{out}");
    assert_eq!(field(&out, "certified:"), "false");
}

#[test]
fn cyclic_table_formats() {
    let (code, out) = run(&["table", "cyclic", "--max", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,delta,characteristic,certified,witness\n1,1,1,true,0\n");
    let (_, out) = run(&["table", "cyclic", "--max", "6", "--format", "json"]);
    let rows: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[3]["delta"], 3);
    assert_eq!(rows[3]["characteristic"], "1.5");
    let (_, text) = run(&["table", "cyclic", "--max", "4", "--format", "text"]);
    assert!(text.contains("1.5"));
}

#[test]
fn dihedral_table_sandwich() {
    let (code, out) = run(&["table", "dihedral", "--max", "24"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "order,lb,delta,two_delta_cyclic,characteristic,certified,witness"
    );
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let order: u32 = f[0].parse().unwrap();
        let lb: u32 = f[1].parse().unwrap();
        let delta: u32 = f[2].parse().unwrap();
        let two: u32 = f[3].parse().unwrap();
        assert!(lb <= delta && delta <= two, "{line}");
        assert_eq!(f[5], "true");
        let lib = min_difference_basis(GroupSpec::dihedral(order / 2), &SearchConfig::default())
            .unwrap();
        assert_eq!(lib.delta, delta);
        rows += 1;
    }
    assert_eq!(rows, 12);
}

#[test]
fn bounds_only_table_is_fast_and_ordered() {
    let (code, out) = run(&["table", "dihedral", "--max", "400", "--bounds-only"]);
    assert_eq!(code, 0);
    for line in out.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let lb: u32 = f[1].parse().unwrap();
        let upper: u32 = f.last().unwrap().parse().unwrap();
        assert!(lb <= upper, "{line}");
    }
}

#[test]
fn scan_examples() {
    let (code, out) = run(&["scan", "--max", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("argmax 2n=6 delta=4 char=1.6329"), "{out}");
    let (code, out) = run(&["scan", "--max", "200", "--bounds-only"]);
    assert_eq!(code, 0);
    assert!(out.contains("unresolved"), "{out}");
}

#[test]
fn bounds_command() {
    let (code, out) = run(&["bounds", "dihedral", "28"]);
    assert_eq!(code, 0);
    assert!(out.contains("lower 11  upper 12"), "{out}");
    let (_, out) = run(&["bounds", "cyclic", "13", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["best_lower"], 4);
    assert_eq!(v["best_upper"], 4);
}

#[test]
fn construct_commands() {
    let (code, out) = run(&["construct", "singer", "5"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "elements:"), "{0,1,4,10,12,17}");
    let (code, out) = run(&["construct", "bose", "5"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "modulus:"), "24");
    assert_eq!(field(&out, "size:"), "5");
}

#[test]
fn gapcheck_reports_no_violators() {
    let (code, out) = run(&["gapcheck", "--lo", "331", "--hi", "3275"]);
    assert_eq!(code, 0);
    assert!(out.contains("violators: 0"), "{out}");
    let (code, out) = run(&["gapcheck", "--lo", "2", "--hi", "30"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn cache_is_written_reused_and_checked() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    let out = run_in(&path, &["delta", "cyclic", "21"]);
    assert_eq!(out.status.code(), Some(0));
    let stored = std::fs::read_to_string(&path).unwrap();
    assert!(stored.contains("\"delta\":5"));
    let out = run_in(&path, &["delta", "cyclic", "21"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("source: cache"));

    std::fs::write(&path, stored.replace("\"delta\":5", "\"delta\":4")).unwrap();
    let out = run_in(&path, &["delta", "cyclic", "21"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

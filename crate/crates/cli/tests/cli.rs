use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use colouring_core::group::build_from_spec;
use colouring_core::perm::is_colouring_bijection;
use colouring_core::perm_file::read_perm_file;
use colouring_core::tables::exported_maps;
use serde_json::Value;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run_in(dir: Option<&Path>, env: &[(&str, &Path)], args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_colouring"));
    cmd.args(args).env_remove("COLOURING_DATA_DIR");
    if let Some(d) = dir {
        cmd.current_dir(d);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn run(args: &[&str]) -> Output {
    run_in(None, &[], args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn h3_file() -> String {
    data_dir().join("h3_sigma.perm").display().to_string()
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--group", "H3", "--perm", &h3_file(), "--cb"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("colouring bijection: yes"));

    let neg = run(&["verify", "--group", "C3", "--perm", "identity", "--cb"]);
    assert_eq!(neg.status.code(), Some(1));
    assert!(stdout(&neg).contains("colouring bijection: no"));

    let cm = run(&["verify", "--group", "C3", "--perm", "identity", "--cm"]);
    assert_eq!(cm.status.code(), Some(0));

    assert_eq!(run(&["verify", "--group", "C3", "--perm", &h3_file()]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--group", "Q8", "--perm", "identity"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--group", "H3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn data_dir_from_environment() {
    let elsewhere = tempfile::tempdir().unwrap();
    let dir = data_dir();
    let o = run_in(
        Some(elsewhere.path()),
        &[("COLOURING_DATA_DIR", &dir)],
        &["verify", "--group", "H3", "--perm", "data/h3_sigma.perm", "--cb"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let missing = run_in(Some(elsewhere.path()), &[], &["verify", "--group", "H3", "--perm", "data/h3_sigma.perm"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn machine_mode_is_json() {
    let o = run(&["--machine", "aut", "--group", "H3", "--orbit", &h3_file()]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["automorphisms"], 432);
    assert_eq!(v["orbit size"], 432);
    assert_eq!(v["stabiliser order"], 1);

    let err = run(&["--machine", "verify", "--group", "Q8", "--perm", "identity"]);
    let v: Value = serde_json::from_slice(&err.stdout).unwrap();
    assert_eq!(v["exit code"], 2);
}

#[test]
fn search_writes_readable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c33.perm");
    let o = run(&["search", "--group", "C3xC3", "--target", "cb", "--enumerate", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g = build_from_spec("C3xC3").unwrap();
    for i in 1..=3 {
        let (h, sigma) = read_perm_file(&dir.path().join(format!("c33_{i}.perm"))).unwrap();
        assert_eq!(h.name(), "C3xC3");
        assert!(is_colouring_bijection(&g, &sigma));
        // round trip through other commands
        let p = dir.path().join(format!("c33_{i}.perm"));
        let v = run(&["verify", "--group", "C3xC3", "--perm", p.to_str().unwrap(), "--cb", "--scm"]);
        assert_eq!(v.status.code(), Some(0));
        let gc = run(&["graph", "check", "--group", "C3xC3", "--perm", p.to_str().unwrap()]);
        assert!(stdout(&gc).contains("chromatic number: 9"));
    }
    assert_eq!(run(&["search", "--group", "C3xC3", "--target", "cb", "--first", "--count"]).status.code(), Some(2));
}

#[test]
fn search_negative_and_budget() {
    let none = run(&["search", "--group", "C9", "--target", "scm"]);
    assert_eq!(none.status.code(), Some(1));
    let count = run(&["search", "--group", "C5", "--target", "cm", "--count"]);
    assert!(stdout(&count).contains("count: 15"));
    let budget = run(&["search", "--group", "H3", "--target", "cb", "--budget", "100"]);
    assert_eq!(budget.status.code(), Some(1));
    assert!(stdout(&budget).contains("exhausted: no"));
}

#[test]
fn jobs_do_not_change_output() {
    let a = run(&["search", "--group", "C3xC3", "--target", "scm", "--enumerate", "5", "--jobs", "1"]);
    let b = run(&["search", "--group", "C3xC3", "--target", "scm", "--enumerate", "5", "--jobs", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    let c = run(&["graph", "check", "--group", "H3", "--perm", "identity", "--jobs", "1"]);
    let d = run(&["graph", "check", "--group", "H3", "--perm", "identity", "--jobs", "4"]);
    assert_eq!(c.status.code(), Some(1));
    assert_eq!(stdout(&c), stdout(&d));
}

#[test]
fn lift_then_graph_check() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.perm");
    let out = dir.path().join("lifted.perm");
    run(&["search", "--group", "C3xC3", "--target", "cb", "--fix-identity", "--out", q.to_str().unwrap()]);
    let o = run(&[
        "lift",
        "--group",
        "H3xC3",
        "--subgroup",
        "(0,0,1,0),(1,0,0,1)",
        "--quotient-perm",
        q.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("case: C3C3\n"));
    assert!(text.contains("layers: [yes, yes, yes]"));
    let gc = run(&["graph", "check", "--group", "H3xC3", "--perm", out.to_str().unwrap()]);
    assert!(stdout(&gc).contains("chromatic number: 81"));

    let auto = run(&["lift", "--group", "H3xC3", "--quotient-perm", q.to_str().unwrap()]);
    assert!(stdout(&auto).contains("kind: C3xC3-central"));
    let bad = run(&["lift", "--group", "H3xC3", "--subgroup", "(1,0,0,0)", "--quotient-perm", q.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn colour_writes_and_traces() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l3c3.perm");
    let o = run(&["--machine", "colour", "--group", "L3xC3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let trace = v["trace"].as_array().unwrap();
    assert!(trace[0]["method"].as_str().unwrap().starts_with("lift over"));
    assert!(trace.iter().all(|s| s["verified"] == true));
    let (g, sigma) = read_perm_file(&out).unwrap();
    assert!(is_colouring_bijection(&g, &sigma));
    assert_eq!(run(&["colour", "--group", "M16"]).status.code(), Some(2));
}

#[test]
fn group_show() {
    let o = run(&["group", "show", "L4"]);
    let text = stdout(&o);
    assert!(text.contains("order: 81\n"));
    assert!(text.contains("center order: 9\n"));
    assert!(text.contains("classification: L4\n"));
    assert!(stdout(&run(&["group", "show", "M16"])).contains("lifting subgroups: not a 3-group"));
}

#[test]
fn dimacs_export() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c3.dimacs");
    let o = run(&["graph", "check", "--group", "C3", "--perm", "identity", "--export-dimacs", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = std::fs::read_to_string(&f).unwrap();
    assert_eq!(text.lines().nth(1), Some("p edge 27 162"));
    let big = run(&["graph", "check", "--group", "H3", "--perm", &h3_file(), "--export-dimacs", f.to_str().unwrap()]);
    assert_eq!(big.status.code(), Some(2));
}

#[test]
fn data_files_match_embedded_tables() {
    let maps = exported_maps();
    for m in &maps {
        let path = data_dir().join(format!("{}.perm", m.file_stem));
        let (g, sigma) = read_perm_file(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(g.name(), m.group_spec, "{}", m.file_stem);
        assert_eq!(sigma.images(), &m.images[..], "{}", m.file_stem);
    }
    let on_disk = std::fs::read_dir(data_dir()).unwrap().count();
    assert_eq!(on_disk, maps.len());
}

#[test]
fn tables_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["tables", "export", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for m in exported_maps() {
        let name = format!("{}.perm", m.file_stem);
        let fresh = std::fs::read_to_string(dir.path().join(&name)).unwrap();
        let stored = std::fs::read_to_string(data_dir().join(&name)).unwrap();
        assert_eq!(fresh, stored, "{name}");
    }
}

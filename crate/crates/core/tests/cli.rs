use std::process::{Command, Output};

use fano_verify::cases;
use fano_verify::{Status, SuiteReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status.code(), Some(0));
    assert_eq!(run(&["all"]).status.code(), Some(0));
    assert_eq!(run(&["--strict-flags"]).status.code(), Some(2));
    assert_eq!(run(&["--strict-flags", "fe.claims.chi36"]).status.code(), Some(2));
    assert_eq!(run(&["--strict-flags", "fe.claims.chi37"]).status.code(), Some(0));
    assert_eq!(run(&["--strict-flags", "quadric"]).status.code(), Some(0));
    assert_eq!(run(&["--format", "yaml"]).status.code(), Some(64));
    assert_eq!(run(&["a", "b"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn unknown_selector_lists_valid_ids() {
    let o = run(&["sublemma5"]);
    assert_eq!(o.status.code(), Some(64));
    let err = String::from_utf8_lossy(&o.stderr);
    for id in cases::ids() {
        assert!(err.contains(id), "{id} missing from:\n{err}");
    }
}

#[test]
fn list_prints_ids_and_anchors() {
    let o = run(&["--list"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), cases::REGISTRY.len());
    for (line, spec) in lines.iter().zip(cases::REGISTRY) {
        assert_eq!(line, &format!("{}\t{}", spec.id, spec.anchor));
    }
}

#[test]
fn json_round_trips_and_matches_library() {
    let o = run(&["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report = SuiteReport::from_json(&text).expect("valid report json");
    assert_eq!(report.to_json().trim_end(), text.trim_end());
    assert_eq!(SuiteReport::from_json(&report.to_json()).unwrap(), report);
    let lib = cases::run("all").unwrap();
    assert_eq!(report.cases, lib.cases);
    let flagged: Vec<&str> = report
        .cases
        .iter()
        .filter(|c| c.status == Status::Flag)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(
        flagged,
        ["conic.p1bundle.f2.l", "fe.claims.chi36", "sublemma54.nef_coefficient"]
    );
    assert!(report.cases.iter().all(|c| c.status != Status::Fail));
}

#[test]
fn runs_are_deterministic_apart_from_runtime() {
    let a = SuiteReport::from_json(&stdout(&run(&["--format", "json"]))).unwrap();
    let b = SuiteReport::from_json(&stdout(&run(&["--format", "json"]))).unwrap();
    assert_eq!(a.cases, b.cases);
    assert_eq!(a.summary, b.summary);
    assert_eq!(a.version, b.version);
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["--format", "json", "--out", path.to_str().unwrap(), "p2bundle.enum"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report = SuiteReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.cases.len(), 1);
    assert_eq!(report.cases[0].id, "p2bundle.enum");

    let text_path = dir.path().join("report.txt");
    let o = run(&["--out", text_path.to_str().unwrap(), "sublemma54"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&text_path).unwrap();
    assert!(text.contains("sublemma54.p2"));
    assert!(text.contains("summary: 4 cases"));
}

#[test]
fn unwritable_out_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let o = run(&["--out", path.to_str().unwrap(), "genus.identities"]);
    assert_eq!(o.status.code(), Some(74));
}

#[test]
fn readme_lists_every_case() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    for id in cases::ids() {
        assert!(readme.contains(&format!("`{id}`")), "README is missing {id}");
    }
}

use std::path::Path;
use std::process::{Command, Output};

use zetaforge_cli::{ReportDocument, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn zetaforge(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zetaforge"));
    for var in ["IDS", "TOL", "JOBS", "REPORT", "OUT", "MAX_TERMS"] {
        cmd.env_remove(format!("ZETAFORGE_{var}"));
    }
    cmd.args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn read_report(path: &Path) -> ReportDocument {
    ReportDocument::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_flagship_sums_to_json() {
    let o = zetaforge(&["verify", "--ids", "P1,P2,P3", "--report", "json"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS), "{}", stderr(&o));
    let doc = ReportDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.schema, 1);
    assert_eq!(doc.rows.len(), 3);
    assert!(doc.rows.iter().all(|r| r.pass));
    assert_eq!(doc.summary.passed, 3);
    assert_eq!(doc.config.ids.as_deref(), Some("P1,P2,P3"));
}

#[test]
fn unknown_id_is_a_usage_error() {
    let o = zetaforge(&["verify", "--ids", "NOPE"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    let err = stderr(&o);
    assert!(
        err.contains("valid ids:") && err.contains("E1.1") && err.contains("P3"),
        "{err}"
    );
    let o = zetaforge(&["verify", "--ids", "E1.1,NOPE"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&o).contains("unknown identity `NOPE`"));
}

#[test]
fn unattainable_tolerance_fails_with_a_well_formed_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = zetaforge(&[
        "verify",
        "--ids",
        "L2",
        "--tol",
        "1e-30",
        "--report",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_FAIL));
    assert!(stdout(&o).contains("failed"));
    let doc = read_report(&path);
    assert!(doc.summary.failed > 0);
    assert_eq!(doc.summary.passed + doc.summary.failed, doc.rows.len());
    assert!(doc.rows.iter().all(|r| r.tol == 1e-30));
}

#[test]
fn reports_are_deterministic_apart_from_wall_time() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for (i, jobs) in ["1", "3"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let o = zetaforge(&[
            "verify",
            "--ids",
            "E1.2,E2.8,L1",
            "--report",
            "json",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(EXIT_PASS), "{}", stderr(&o));
        let mut doc = read_report(&path);
        doc.summary.wall_time_s = 0.0;
        doc.config.jobs = None;
        docs.push(doc);
    }
    assert_eq!(docs[0], docs[1]);

    let path = dir.path().join("again.json");
    let args = [
        "verify", "--ids", "E1.2", "--report", "json", "--jobs", "2", "--out",
    ];
    let first = dir.path().join("first.json");
    zetaforge(&[&args[..], &[first.to_str().unwrap()]].concat());
    zetaforge(&[&args[..], &[path.to_str().unwrap()]].concat());
    let strip = |p: &Path| -> String {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| !l.contains("wall_time_s"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&first), strip(&path));
}

#[test]
fn environment_overrides_arguments_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.md");
    let o = Command::new(env!("CARGO_BIN_EXE_zetaforge"))
        .arg("verify")
        .env("ZETAFORGE_IDS", "E1.12")
        .env("ZETAFORGE_REPORT", "markdown")
        .env("ZETAFORGE_JOBS", "2")
        .env("ZETAFORGE_OUT", &path)
        .env_remove("ZETAFORGE_TOL")
        .env_remove("ZETAFORGE_MAX_TERMS")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_PASS), "{}", stderr(&o));
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.starts_with("# zetaforge verification"));
    assert_eq!(md.matches("| E1.12 |").count(), 3);
}

#[test]
fn invalid_settings_are_usage_errors() {
    for args in [
        &["verify", "--jobs", "0"][..],
        &["verify", "--tol", "-1"],
        &["verify", "--tol", "abc"],
        &["verify", "--report", "xml"],
        &["verify", "--ids", "E1.2", "--max-terms", "3"],
        &["bogus"],
    ] {
        let o = zetaforge(args);
        assert_eq!(
            o.status.code(),
            Some(EXIT_USAGE),
            "{args:?}: {}",
            stderr(&o)
        );
    }
}

#[test]
fn max_terms_is_echoed() {
    let o = zetaforge(&[
        "verify",
        "--ids",
        "E1.4",
        "--max-terms",
        "4096",
        "--report",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_PASS), "{}", stderr(&o));
    let doc = ReportDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.config.max_terms, 4096);
}

#[test]
fn eval_prints_value_and_bound() {
    let o = zetaforge(&["eval", "zeta", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS));
    let out = stdout(&o);
    assert!(out.starts_with("1.644934066848226436472415166646"), "{out}");
    assert!(out.contains("± "));
    let o = zetaforge(&["eval", "xi", "0"]);
    assert!(stdout(&o).starts_with("1.64493406684822643647241516664"));
    let o = zetaforge(&["eval", "polygamma", "0", "1"]);
    assert!(stdout(&o).starts_with("-5.77215664901532860606512090082"));
    let o = zetaforge(&["eval", "polylog", "2", "-1"]);
    assert!(stdout(&o).starts_with("-8.2246703342411321823620758332"));
}

#[test]
fn eval_errors_exit_2() {
    for args in [
        &["eval", "zeta", "1"][..],
        &["eval", "zeta"],
        &["eval", "nope", "1"],
    ] {
        let o = zetaforge(args);
        assert_eq!(o.status.code(), Some(EXIT_USAGE), "{args:?}");
        assert!(!stderr(&o).contains("valid ids"));
    }
    assert!(stderr(&zetaforge(&["eval", "zeta", "1"])).contains("domain error"));
}

#[test]
fn list_and_constants() {
    let o = zetaforge(&["list"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS));
    assert!(stdout(&o).lines().count() >= 40);
    let o = zetaforge(&["list", "L2"]);
    assert_eq!(stdout(&o).lines().count(), 7);
    let o = zetaforge(&["list", "Q"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    let o = zetaforge(&["list", "--json"]);
    let catalog: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(catalog.as_array().unwrap().len() >= 40);
    let o = zetaforge(&["constants"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS));
    assert_eq!(stdout(&o).matches("validated").count(), 6);
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let o = zetaforge(&["verify", "--ids", "E1.2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    let err = stderr(&o);
    assert!(err.contains("cannot write output"), "{err}");
    assert!(!err.contains("valid ids"));
}

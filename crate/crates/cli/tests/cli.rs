//! End-to-end tests of the qdp binary: output determinism, exit codes, cap
//! handling and the spec-file surface.

use std::io::Write;
use std::process::{Command, Output};

fn qdp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_spec(name: &str, content: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("qdp-test-{name}-{}.spec", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

#[test]
fn construct_and_rank() {
    let spec = write_spec("qd3", "family qd 3\n");
    let out = qdp(&["construct", "--spec", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("order=216"), "{stdout}");

    let out = qdp(&["rank", "--spec", spec.to_str().unwrap(), "--p", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("rank=2"));
}

#[test]
fn involvement_subcommands() {
    let spec = write_spec("s5", "generators\n(1 2)\n(1 2 3 4 5)\n");
    let out = qdp(&["involves", "--spec", spec.to_str().unwrap(), "--p", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("involves=true"), "{stdout}");
    assert!(stdout.contains("h_order=24"), "{stdout}");

    let spec = write_spec("a5", "generators\n(1 2 3)\n(1 2 3 4 5)\n");
    let out = qdp(&["pprime-involves", "--spec", spec.to_str().unwrap(), "--p", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("involves=false"));
}

#[test]
fn parse_errors_exit_2() {
    let spec = write_spec("bad", "family qd 3\nnonsense\n");
    let out = qdp(&["construct", "--spec", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = qdp(&["rank", "--spec", "/nonexistent/file.spec", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qdp(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fusion_and_stability_smoke() {
    let spec = write_spec("a5f", "generators\n(1 2 3)\n(1 2 3 4 5)\n");
    let out = qdp(&["fusion-control", "--spec", spec.to_str().unwrap(), "--p", "2"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("controls=true"));

    let spec = write_spec("qd3s", "family qd 3\n");
    let out = qdp(&["p-stable", "--spec", spec.to_str().unwrap(), "--p", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("stable=false"));
}

/// Two consecutive full verify runs must produce byte-identical output.
#[test]
fn verify_paper_is_deterministic() {
    let a = qdp(&["verify-paper", "--format", "json-lines"]);
    let b = qdp(&["verify-paper", "--format", "json-lines"]);
    assert!(a.status.success());
    assert!(b.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout, "verify-paper output must be byte-identical");
    // no FAIL lines
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.lines().all(|l| !l.contains("\"verdict\":\"FAIL\"")));
}

/// Tiny caps must produce SKIPPED entries, not failures, and exit 0.
#[test]
fn verify_paper_tiny_caps_skips() {
    let out = qdp(&[
        "verify-paper",
        "--scope",
        "example-2.2",
        "--cap-enum",
        "10",
        "--cap-subgroups",
        "5",
        "--cap-aut",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "no FAIL expected under tiny caps");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("SKIPPED"), "{text}");
    assert!(text.contains("fail=0"), "{text}");
}

#[test]
fn verify_scope_filters_sections() {
    let out = qdp(&["verify-paper", "--scope", "example-2.3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("example-2.3/cover-order"));
    assert!(!text.contains("theorem-1.1"));
}

#[test]
fn report_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("qdp-report-{}.txt", std::process::id()));
    let out = qdp(&[
        "verify-paper",
        "--scope",
        "constructors",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file = std::fs::read(&path).unwrap();
    assert_eq!(file, out.stdout);
}

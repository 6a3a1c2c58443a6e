use std::path::{Path, PathBuf};
use std::process::Command;

use merotopy::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("merotopy").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

struct Files {
    _dir: tempfile::TempDir,
    chain: String,
    indiscrete: String,
    discrete2: String,
    left: String,
    right: String,
    squash: String,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str, text: &str| write(dir.path(), name, text).to_str().unwrap().to_owned();
    Files {
        chain: p("chain.txt", "# overlapping pair\nn=3\ncover: 0,1;1,2\n"),
        indiscrete: p("indiscrete.txt", "n=3\ncover: 0,1,2\n"),
        discrete2: p("discrete2.txt", "n=2\ncover: 0;1\n"),
        left: p("left.txt", "n=3\ncover: 0,1;2\n"),
        right: p("right.txt", "n=3\ncover: 0;1,2\n"),
        squash: p("squash.txt", "n=3\nm=2\nmap: 0->0,1->1,2->1\n"),
        _dir: dir,
    }
}

#[test]
fn check_reports_the_verdict() {
    let f = files();
    assert_eq!(
        run(&["check", &f.indiscrete]),
        (0, "nearness\n".into(), String::new())
    );
    assert_eq!(run(&["check", &f.chain]).1, "merotopic\n");
}

#[test]
fn reflect_with_each_algorithm() {
    let f = files();
    for algorithm in ["iterative", "maximal", "both"] {
        let (code, out, _) = run(&["reflect", &f.chain, "--algorithm", algorithm]);
        assert_eq!(code, 0);
        assert_eq!(out, "n=3\ncover: 0,1,2\n");
    }
    assert_eq!(run(&["reflect", &f.chain, "--algorithm", "zorn"]).0, 2);
}

#[test]
fn interior_prints_indices() {
    let f = files();
    assert_eq!(run(&["interior", &f.chain, "--set", "0,1"]).1, "0\n");
    assert_eq!(run(&["interior", &f.chain, "--set", ""]).1, "\n");
    assert_eq!(run(&["interior", &f.chain, "--set", "0,1,2"]).1, "0,1,2\n");
    assert_eq!(run(&["interior", &f.chain, "--set", "7"]).0, 2);
}

#[test]
fn join_initial_and_uc() {
    let f = files();
    assert_eq!(run(&["join", &f.left, &f.right]).1, "n=3\ncover: 0;1;2\n");
    assert_eq!(run(&["join", &f.left, &f.discrete2]).0, 2);
    assert_eq!(
        run(&["initial", "--map", &f.squash, "--codomain", &f.discrete2]).1,
        "n=3\ncover: 0;1,2\n"
    );
    assert_eq!(
        run(&[
            "uc",
            "--map",
            &f.squash,
            "--domain",
            &f.right,
            "--codomain",
            &f.discrete2
        ]),
        (0, "true\n".into(), String::new())
    );
    assert_eq!(
        run(&[
            "uc",
            "--map",
            &f.squash,
            "--domain",
            &f.chain,
            "--codomain",
            &f.discrete2
        ])
        .1,
        "false\n"
    );
}

#[test]
fn enumerate_verify_counterexample() {
    let (code, out, _) = run(&["enumerate", "--n", "2", "--covers"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2\n0,1\n0;1\n");
    assert_eq!(
        run(&["enumerate", "--n", "2", "--structures"]).1,
        "2\n[0,1]\n[0;1]\n"
    );

    let (code, out, _) = run(&["verify", "--n", "2", "--bound", "2"]);
    assert_eq!(code, 0);
    assert!(
        out.ends_with("2 structures on n=2, codomains up to 2: 0 failed\n"),
        "{out}"
    );
    assert_eq!(run(&["verify", "--n", "3", "--bound", "4"]).0, 2);

    assert_eq!(run(&["counterexample", "--n", "2"]).1, "none\n");
    assert_eq!(
        run(&["counterexample", "--n", "3"]).1,
        "n=3\nm=3\nmap: 0->0,1->1,2->2\nnu: 0,1;0,2\nmu_f: 0,1;0,2\n"
    );
}

#[test]
fn errors_exit_with_two() {
    let f = files();
    let (code, _, err) = run(&["check", "/nonexistent/structure.txt"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, err) = run(&["initial", "--map", &f.squash, "--codomain", &f.chain]);
    assert_eq!(code, 2);
    assert!(err.contains("mismatch"), "{err}");
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn binary_output_is_byte_identical_across_runs() {
    let f = files();
    let bin = env!("CARGO_BIN_EXE_merotopy");
    let once = || {
        Command::new(bin)
            .args(["reflect", &f.chain])
            .output()
            .unwrap()
    };
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, b"n=3\ncover: 0,1,2\n");

    let bad = Command::new(bin)
        .args(["enumerate", "--n", "9", "--covers"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

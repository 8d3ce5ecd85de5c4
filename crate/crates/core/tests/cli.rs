use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn lextri(args: &[&str], files: &[&Path]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lextri"))
        .args(args)
        .args(files)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn run(cmd: &str, files: &[&str]) -> Run {
    let paths: Vec<PathBuf> = files.iter().map(|f| data(f)).collect();
    let refs: Vec<&Path> = paths.iter().map(|p| p.as_path()).collect();
    lextri(&[cmd], &refs)
}

#[test]
fn hull_of_square() {
    let r = run("hull", &["sq.pts"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "1 2 : 0 -1 | 0\n1 3 : -1 0 | 0\n2 4 : 1 0 | 1\n3 4 : 0 1 | 1\n"
    );
}

#[test]
fn hull_of_cube_has_six_facets() {
    let r = run("hull", &["cube.pts"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().count(), 6);
    assert!(r
        .stdout
        .lines()
        .all(|l| l.split(" : ").next().unwrap().split(' ').count() == 4));
}

#[test]
fn duplicate_points_are_named() {
    let r = run("hull", &["dup.pts"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("points 1 and 3 are equal"),
        "{}",
        r.stderr
    );
}

#[test]
fn missing_file_is_an_input_error() {
    let r = run("hull", &["no_such_file.pts"]);
    assert_eq!(r.code, 1);
    assert!(!r.stderr.is_empty());
}

#[test]
fn triangulate_square() {
    let r = run("triangulate", &["sq.pts", "sq_pull.script"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n1 2 4\n1 3 4\n"));
}

#[test]
fn pushing_the_center_first_drops_it() {
    let r = run("triangulate", &["sqc.pts", "sqc_push5.script"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n1 2 3\n1 3 4\n"));
}

#[test]
fn gkz_of_the_fan() {
    let r = run("gkz", &["sqc.pts", "sqc_fan.tri"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n2\n2\n2\n4\n"));
}

#[test]
fn partial_scripts_need_the_flag() {
    let r = run("triangulate", &["sq.pts", "sq_partial.script"]);
    assert_eq!(r.code, 1);
    let r = lextri(
        &["triangulate", "--subdivision"],
        &[&data("sq.pts"), &data("sq_partial.script")],
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n1 2 4\n1 3 4\n"));
}

#[test]
fn gkz_of_the_diagonal() {
    let r = run("gkz", &["sq.pts", "sq_diag.tri"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1\n1/2\n1/2\n1\n"));
}

#[test]
fn gkz_rejects_invalid_triangulations() {
    for tri in ["sq_overlap.tri", "sq_degenerate.tri"] {
        let r = run("gkz", &["sq.pts", tri]);
        assert_eq!(r.code, 3, "{tri}");
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn recover_round_trip() {
    let r = run("recover", &["sq.pts", "sq_diag.gkz"]);
    assert_eq!(r.code, 0);
    let (script, tri) = r.stdout.split_once("\n\n").unwrap();
    assert!(script.starts_with("pull 1\n"));
    assert_eq!(tri, "2\n1 2 4\n1 3 4\n");
}

#[test]
fn recover_reports_failure() {
    let r = run("recover", &["sq.pts", "sq_ones.gkz"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("VerificationFailed"), "{}", r.stderr);
    let r = run("recover", &["sq.pts", "sq_short.gkz"]);
    assert_eq!(r.code, 1);
}

#[test]
fn recover_twisted_gkz_fails() {
    let tmp = tempfile::tempdir().unwrap();
    let z = tmp.path().join("twisted.gkz");
    let r = run("gkz", &["moae.pts", "moae_twisted.tri"]);
    assert_eq!(r.code, 0);
    std::fs::write(&z, r.stdout).unwrap();
    let r = lextri(&["recover"], &[&data("moae.pts"), &z]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("NoCandidate"), "{}", r.stderr);
}

/// triangulate | gkz | recover reproduces the triangulation file byte for byte.
#[test]
fn file_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    for (pts, script) in [
        ("sq.pts", "sq_pull.script"),
        ("sqc.pts", "sqc_push5.script"),
    ] {
        let tri = tmp.path().join("t.tri");
        let gkz = tmp.path().join("t.gkz");
        let t = run("triangulate", &[pts, script]);
        std::fs::write(&tri, &t.stdout).unwrap();
        let z = lextri(&["gkz"], &[&data(pts), &tri]);
        assert_eq!(z.code, 0);
        std::fs::write(&gkz, &z.stdout).unwrap();
        let r = lextri(&["recover"], &[&data(pts), &gkz]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout.split_once("\n\n").unwrap().1, t.stdout);
    }
}

#[test]
fn enumerate_counts() {
    let r = run("enumerate", &["sq.pts"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("distinct: 2\ncoverage: exhaustive, 384 scripts\n"));
    assert!(r
        .stdout
        .ends_with("gkz-injective: yes\nroundtrip: 2/2 ok\n"));
    let r = run("enumerate", &["pent.pts"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("distinct: 5\n"));
}

#[test]
fn sampling_is_deterministic() {
    let cube = data("cube.pts");
    let a = lextri(&["enumerate", "--limit", "30", "--seed", "9"], &[&cube]);
    let b = lextri(&["enumerate", "--limit", "30", "--seed", "9"], &[&cube]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.lines().nth(1).unwrap() == "coverage: sampled, 30 scripts, seed 9");
}

#[test]
fn output_is_deterministic() {
    for (cmd, files) in [
        ("hull", &["hex.pts"][..]),
        ("enumerate", &["hex.pts"][..]),
        ("recover", &["sq.pts", "sq_diag.gkz"][..]),
    ] {
        assert_eq!(run(cmd, files).stdout, run(cmd, files).stdout);
    }
}

#[test]
fn lift_square() {
    let r = run("lift", &["sq.pts", "sq_lift.h"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n1 2 3\n2 3 4\n"));
    let r = lextri(&["lift", "--upper"], &[&data("sq.pts"), &data("sq_lift.h")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n1 2 4\n1 3 4\n"));
    let r = run("lift", &["sq.pts", "sq_flat.h"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1\n1 2 3 4\n"));
    let r = run("lift", &["sqc.pts", "sqc_center.h"]);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (0, "4\n1 2 5\n1 4 5\n2 3 5\n3 4 5\n")
    );
}

#[test]
fn check_reports_violations() {
    let r = run("check", &["sq.pts", "sq_diag.tri"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid\n"));
    let r = run("check", &["sq.pts", "sq_overlap.tri"]);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (3, "invalid\ncells overlap: 1 2 4 / 2 3 4\n")
    );
    let r = run("check", &["sq.pts", "sq_degenerate.tri"]);
    assert_eq!(r.code, 3);
    assert!(r.stdout.contains("degenerate cell: 1 2"));
    let r = run("check", &["moae.pts", "moae_twisted.tri"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid\n"));
}

//! End-to-end tests of the command line interface: exit codes, the text
//! format round trip, and the CSV experiment output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_revsplit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path =
        std::env::temp_dir().join(format!("revsplit-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write temp file");
    path
}

#[test]
fn convert_round_trip_is_canonical() {
    let first = run(&["convert", "--builtin", "sec7-polytope"]);
    assert!(first.status.success());
    let text = stdout(&first);
    assert!(text.contains("H 3") && text.contains("V 3"));

    // Feed H-only output back in; the canonical text must reproduce.
    let h_only = run(&["convert", "--builtin", "sec7-polytope", "--to", "h"]);
    let path = temp_file("roundtrip.poly", &stdout(&h_only));
    let second = run(&["convert", "--input", path.to_str().unwrap()]);
    assert!(second.status.success());
    assert_eq!(stdout(&second), text);
    std::fs::remove_file(path).ok();
}

#[test]
fn file_input_supports_rays_and_lineality() {
    let path = temp_file(
        "prism.poly",
        "# a triangular prism\nV 3\nv 0 0 0\nv 2 0 0\nv 0 2 0\nl 0 0 1\n",
    );
    let out = run(&["lattice-free", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("relatively_lattice_free: true"));
    std::fs::remove_file(path).ok();
}

#[test]
fn rank_of_integral_polytope_is_zero() {
    let out = run(&[
        "rank",
        "--builtin",
        "unit-square",
        "--kind",
        "split",
        "--norm-bound",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rank: 0"));
    assert!(text.contains("reached_hull: true"));
}

#[test]
fn rank_round_limit_exits_with_budget_code() {
    // One round is not enough for the t = 4 pyramid.
    let qt = run(&["construct", "qt", "--t", "4"]);
    let path = temp_file("qt4.poly", &stdout(&qt));
    let out = run(&[
        "rank",
        "--input",
        path.to_str().unwrap(),
        "--norm-bound",
        "2",
        "--max-rounds",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("reached_hull: false"));
    std::fs::remove_file(path).ok();
}

#[test]
fn certify_prints_certificate_or_budget_failure() {
    let found = run(&[
        "certify",
        "--builtin",
        "triangle3d",
        "--entry-budget",
        "1",
        "--dir-budget",
        "2",
    ]);
    assert!(found.status.success());
    let text = stdout(&found);
    assert!(text.contains("certificate"));
    assert!(text.contains("0 0 1"));

    let none = run(&["certify", "--builtin", "zero-one-segment"]);
    assert_eq!(none.status.code(), Some(4));
    assert!(stderr(&none).contains("no certificate within budgets"));
}

#[test]
fn cg_certify_finds_the_segment_direction() {
    let out = run(&["cg-certify", "--builtin", "zero-one-segment"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("subspace: span{"));
}

#[test]
fn growth_experiment_emits_budgeted_csv() {
    let single = run(&["experiment", "growth", "--t", "1,2,4", "--norm-bound", "2"]);
    assert!(single.status.success());
    let text = stdout(&single);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,rank,reached_hull,rounds,budget"));
    let ranks: Vec<u32> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ranks, vec![2, 3, 4]);

    // Thread count must not change the output.
    let threaded = run(&[
        "experiment",
        "growth",
        "--t",
        "1,2,4",
        "--norm-bound",
        "2",
        "--threads",
        "3",
    ]);
    assert!(threaded.status.success());
    assert_eq!(stdout(&threaded), text);
}

#[test]
fn mi_check_flags_the_vertical_pyramid() {
    let qt = run(&["construct", "qt", "--t", "1"]);
    let path = temp_file("qt1.poly", &stdout(&qt));
    let out = run(&[
        "mi-check",
        "--input",
        path.to_str().unwrap(),
        "--k",
        "2",
        "--ineq",
        "0 0 1 <= 0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("infinite_split_rank: true"));
    std::fs::remove_file(path).ok();
}

#[test]
fn width_reports_direction() {
    let out = run(&["width", "--builtin", "unit-square", "--budget", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("width: 1"));
    assert!(text.contains("direction: 1 0"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let path = temp_file("bad.poly", "H 2\n1 oops <= 0\n");
    let out = run(&["convert", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
    std::fs::remove_file(path).ok();
}

#[test]
fn precondition_errors_exit_three() {
    // Integer hull of an unbounded polyhedron.
    let path = temp_file("ray.poly", "V 2\nv 0 0\nr 1 0\n");
    let out = run(&["hull", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("boundedness"));
    std::fs::remove_file(path).ok();
}

#[test]
fn usage_errors_exit_one() {
    let unknown = run(&["convert", "--builtin", "not-a-thing"]);
    assert_eq!(unknown.status.code(), Some(1));

    let missing = run(&["convert"]);
    assert_eq!(missing.status.code(), Some(1));

    let bad_flag = run(&["convert", "--builtin", "unit-square", "--nope"]);
    assert_eq!(bad_flag.status.code(), Some(1));
}

#[test]
fn inflate_reports_integer_preservation() {
    let path = temp_file("segment.poly", "V 2\nv 0 0\nv 1 0\n");
    let out = run(&[
        "construct",
        "inflate",
        "--input",
        path.to_str().unwrap(),
        "--eps",
        "1/4",
        "--xbar",
        "1/2 0",
        "--basis",
        "0 1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# integer points preserved: true"));
    std::fs::remove_file(path).ok();
}

#[test]
fn prop72_reproduces_the_classical_instance() {
    let direct = run(&["construct", "qt", "--t", "1"]);
    let built = run(&[
        "construct",
        "prop72",
        "--builtin",
        "triangle3d",
        "--entry-budget",
        "1",
        "--dir-budget",
        "2",
        "--xbar",
        "1/2 1/2 0",
    ]);
    assert!(built.status.success());
    let text = stdout(&built);
    assert!(text.contains("# integer coordinates: 2"));
    // The polyhedron block must match the direct construction.
    let block: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    let expected: String = stdout(&direct).lines().collect::<Vec<_>>().join("\n");
    assert_eq!(block, expected);
}

use std::path::Path;
use std::process::{Command, Output};

use sgraph_harness::{parse_sg, read_sg};

fn sg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sg")).args(args).current_dir(dir).output().expect("sg runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_writes_an_sg_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = sg(&["gen", "neg-clique", "i=5", "-o", "k5.sg"], dir.path());
    assert_eq!(code(&o), 0);
    let g = read_sg(dir.path().join("k5.sg")).unwrap();
    assert_eq!((g.n(), g.m(), g.negative_edge_count()), (5, 10, 10));

    let o = sg(&["gen", "signed-shift3", "n=5"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(parse_sg(&stdout(&o)).unwrap(), sgraph::gen::gen_signed_shift3(5).unwrap());

    std::fs::write(dir.path().join("c5.sg"), "p sg 5 5\ne 1 2 +\ne 2 3 +\ne 3 4 +\ne 4 5 +\ne 5 1 +\n").unwrap();
    let o = sg(&["gen", "positive-completion", "--from", "c5.sg"], dir.path());
    assert_eq!(code(&o), 0);
    let pc = parse_sg(&stdout(&o)).unwrap();
    assert_eq!((pc.m(), pc.negative_edge_count()), (10, 5));
    let o = sg(&["gen", "all-neg", "--from", "c5.sg"], dir.path());
    assert_eq!(parse_sg(&stdout(&o)).unwrap().negative_edge_count(), 5);
}

#[test]
fn gen_is_reproducible_from_the_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = stdout(&sg(&["gen", "random", "n=9", "seed=4"], dir.path()));
    let b = stdout(&sg(&["gen", "random", "n=9", "seed=4"], dir.path()));
    assert_eq!(a, b);
}

#[test]
fn check_exit_codes_and_one_based_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    sg(&["gen", "neg-clique", "i=4", "-o", "k4.sg"], dir.path());
    let o = sg(&["check", "k4.sg", "--forbid", "neg-k4,p4"], dir.path());
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "neg-k4: 1 2 3 4");
    let o = sg(&["check", "k4.sg", "--forbid", "p4,claw,linear-forest:1,1"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "member");
}

#[test]
fn color_reports_bound_failures_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    sg(&["gen", "neg-clique", "i=6", "-o", "k6.sg"], dir.path());
    let o = sg(&["color", "k6.sg", "--algo", "exact"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("colors 3\n"));
    let o = sg(&["color", "k6.sg", "--algo", "negative"], dir.path());
    assert_eq!(code(&o), 0);
    // thm20 needs a graph without a negative triangle
    assert_eq!(code(&sg(&["color", "k6.sg", "--algo", "thm20", "--k", "2"], dir.path())), 2);
    assert_eq!(code(&sg(&["color", "k6.sg", "--algo", "exact", "--start", "0"], dir.path())), 0);
    assert_eq!(code(&sg(&["color", "k6.sg", "--algo", "thm23", "--start", "7"], dir.path())), 2);

    sg(&["gen", "p4class", "n=25", "seed=3", "-o", "p.sg"], dir.path());
    let o = sg(&["color", "p.sg", "--algo", "thm30"], dir.path());
    assert_eq!(code(&o), 0);
    let colors: usize = stdout(&o).lines().next().unwrap()[7..].parse().unwrap();
    assert!(colors <= 6);
}

#[test]
fn usage_and_io_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&sg(&["frobnicate"], dir.path())), 2);
    assert_eq!(code(&sg(&["check", "missing.sg", "--forbid", "p4"], dir.path())), 2);
    assert_eq!(code(&sg(&["gen", "random", "nn=3"], dir.path())), 2);
    assert_eq!(code(&sg(&["gen", "unknown-family"], dir.path())), 2);
    std::fs::write(dir.path().join("bad.sg"), "p sg 2 1\ne 1 3 +\n").unwrap();
    let o = sg(&["check", "bad.sg", "--forbid", "p4"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    sg(&["gen", "neg-clique", "i=3", "-o", "k3.sg"], dir.path());
    assert_eq!(code(&sg(&["check", "k3.sg", "--forbid", "p0"], dir.path())), 2);
    assert_eq!(code(&sg(&["verify", "no-such-experiment"], dir.path())), 2);
}

#[test]
fn verify_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = sg(
        &["verify", "neg-clique-chi", "--param", "i_max=7", "--seed", "1", "--out", "r.json", "--csv", "r.csv"],
        dir.path(),
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["rows"].as_array().unwrap().len(), 6);
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn envelope_search() {
    let dir = tempfile::tempdir().unwrap();
    let o = sg(&["envelope", "--max-n", "5", "-o", "env.sg"], dir.path());
    assert_eq!(code(&o), 0);
    let g = read_sg(dir.path().join("env.sg")).unwrap();
    assert_eq!((g.n(), g.negative_edge_count()), (5, 5));
    assert_eq!(code(&sg(&["envelope", "--max-n", "4"], dir.path())), 1);
}

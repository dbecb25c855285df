use std::path::Path;
use std::process::{Command, Output};

use pfgr::grid::GridReport;
use pfgr::pairs::{pair_report, PairReport};
use pfgr::Diagnostic;

fn pfgr(args: &[&str]) -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_pfgr"));
    c.args(args).env_remove("PFGR_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    pfgr(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn diagnostic(o: &Output) -> Diagnostic {
    let stderr = String::from_utf8_lossy(&o.stderr);
    let line = stderr.lines().last().expect("diagnostic on stderr");
    serde_json::from_str(line).expect("last stderr line is JSON")
}

fn table_files(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .map(|rd| rd.map(|e| e.unwrap().file_name().to_string_lossy().into_owned()).collect())
        .unwrap_or_default();
    names.sort();
    names
}

const GRID: [&str; 9] = ["grid", "--n-min", "5", "--n-max", "8", "--k-min", "1", "--k-max", "6"];

#[test]
fn pair_json_matches_the_library() {
    let o = run(&["pair", "--n", "7", "--k", "7"]);
    assert_eq!(code(&o), 0);
    let report: PairReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report, pair_report(7, 7).unwrap());
}

#[test]
fn pair_formats() {
    let md = run(&["pair", "--n", "8", "--k", "4", "--format", "markdown"]);
    assert_eq!(code(&md), 0);
    assert!(String::from_utf8_lossy(&md.stdout).contains("| 8 | 24 | 0 |"));
    let csv = run(&["pair", "--n", "8", "--k", "4", "--format", "csv"]);
    assert!(String::from_utf8_lossy(&csv.stdout).starts_with("field,value\n"));
}

#[test]
fn out_of_range_pair_is_a_usage_error() {
    let o = run(&["pair", "--n", "6", "--k", "7"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    let d = diagnostic(&o);
    assert_eq!(d.kind, "OutOfSmoothRange");
    assert_eq!(d.exit_code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["pair", "--n", "5"])), 2);
    assert_eq!(code(&run(&["pair", "--n", "5", "--k", "4", "--format", "xml"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let o = run(&[&GRID[..], &["--checks", "no_such_check"]].concat());
    assert_eq!(code(&o), 2);
    assert_eq!(diagnostic(&o).kind, "InvalidParameter");
    assert_eq!(code(&run(&["grid", "--n-min", "8", "--n-max", "5", "--k-min", "1", "--k-max", "2"])), 2);
}

#[test]
fn eval_results_and_errors() {
    let t = run(&["eval", "P(6)*H(2,7) == P(5)*Gr(2,7)"]);
    assert_eq!(code(&t), 0);
    assert_eq!(String::from_utf8_lossy(&t.stdout).trim(), "true");

    let f = run(&["eval", "Gr(2,6) == P(4) * SumEven(6) + 1"]);
    assert_eq!(code(&f), 1);
    assert_eq!(String::from_utf8_lossy(&f.stdout).trim(), "false");

    let v = run(&["eval", "(1 + L) * (1 - L)"]);
    assert_eq!(code(&v), 0);
    assert!(!v.stdout.is_empty());

    let p = run(&["eval", "1 +"]);
    assert_eq!(code(&p), 2);
    assert_eq!(diagnostic(&p).kind, "ParseError");

    let e = run(&["eval", "(1 + L) div (1 + L*L)"]);
    assert_eq!(code(&e), 2);
    let d = diagnostic(&e);
    assert_eq!(d.kind, "EvalError");
    assert!(d.message.contains("(1 + L) div (1 + L*L)"));
}

#[test]
fn grid_output_is_independent_of_jobs() {
    let one = run(&[&GRID[..], &["--jobs", "1"]].concat());
    let four = run(&[&GRID[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let report: GridReport = serde_json::from_slice(&one.stdout).unwrap();
    assert!(report.rows.len() > 10);
    assert_eq!(report.summary.fail, 0);

    let md1 = run(&[&GRID[..], &["--jobs", "1", "--format", "csv"]].concat());
    let md3 = run(&[&GRID[..], &["--jobs", "3", "--format", "csv"]].concat());
    assert_eq!(md1.stdout, md3.stdout);
}

#[test]
fn warm_cache_gives_the_same_grid() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [&GRID[..], &["--checks", "all", "--cache-dir", d]].concat();
    let cold = run(&args);
    assert_eq!(code(&cold), 0);
    let files = table_files(dir.path());
    assert!(files.contains(&"mult-table-n7-pieri_giambelli.json".to_string()), "{files:?}");
    assert!(files.contains(&"mult-table-n7-littlewood_richardson.json".to_string()));
    let warm = run(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = run(&GRID);
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn cache_dir_from_env_and_flag_override() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let grid = ["grid", "--n-min", "6", "--n-max", "6", "--k-min", "2", "--k-max", "3"];

    let o = pfgr(&grid).env("PFGR_CACHE_DIR", env_dir.path()).output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(!table_files(env_dir.path()).is_empty());

    let env_only = tempfile::tempdir().unwrap();
    let args = [&grid[..], &["--cache-dir", flag_dir.path().to_str().unwrap()]].concat();
    let o = pfgr(&args).env("PFGR_CACHE_DIR", env_only.path()).output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(!table_files(flag_dir.path()).is_empty());
    assert!(table_files(env_only.path()).is_empty());
}

#[test]
fn corrupt_cache_is_an_internal_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("mult-table-n6-pieri_giambelli.json"), "{ truncated").unwrap();
    let o = run(&["pair", "--n", "6", "--k", "5", "--cache-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert_eq!(diagnostic(&o).kind, "CacheError");
}

#[test]
fn full_sweep_has_no_failures() {
    let o = run(&["grid", "--n-min", "4", "--n-max", "12", "--k-min", "1", "--k-max", "10"]);
    assert_eq!(code(&o), 0);
    let report: GridReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.rows.len(), 47);
    assert_eq!(report.summary.fail, 0);

    let odd = run(&["grid", "--n-min", "5", "--n-max", "13", "--k-min", "1", "--k-max", "10", "--checks", "l_equivalence"]);
    assert_eq!(code(&odd), 0);
    let report: GridReport = serde_json::from_slice(&odd.stdout).unwrap();
    assert!(report.rows.iter().filter(|r| r.n % 2 == 1).all(|r| r.checks[0].status == pfgr::pairs::CheckStatus::Pass));
}

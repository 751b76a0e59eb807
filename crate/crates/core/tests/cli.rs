use std::path::Path;
use std::process::{Command, Output};

fn kirkman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kirkman")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn chromatic_number_of_kts9() {
    let o = kirkman(&["chromatic", "--design", "kts9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("delta 2: UNSAT"));
    assert!(text.lines().any(|l| l == "chromatic_number: 3"));
}

#[test]
fn verify_tv_certificate() {
    let o = kirkman(&["verify", "--design", "tv33-1", "--colouring", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("colour_type: 8^3 9^1"));
    assert!(text.lines().any(|l| l == "result: PASS"));
}

#[test]
fn verify_reports_failure_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("zero.col");
    std::fs::write(&col, "0 0 0 0 0 0 0 0 0\n").unwrap();
    let o = kirkman(&["verify", "--design", "kts9", "--colouring", path(&col)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l == "result: FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kirkman(&["bogus"]).status.code(), Some(2));
    assert_eq!(kirkman(&["verify", "--design", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(kirkman(&["construct", "tripling"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let o = kirkman(&["chromatic", "--design", "tv33-1", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("TIMEOUT"));
}

#[test]
fn tripling_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k27.txt");
    let o = kirkman(&[
        "construct",
        "tripling",
        "--input",
        "kts=kts9",
        "--input",
        "colouring=kts9-3x3",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let col = dir.path().join("k27.txt.col");
    let o = kirkman(&["verify", "--design", path(&out), "--colouring", path(&col), "--rainbow"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "result: PASS"));
    let o = kirkman(&["chromatic", "--design", path(&out), "--max", "4"]);
    assert!(stdout(&o).lines().any(|l| l == "chromatic_number: 3"));
}

#[test]
fn catalog_emit_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tv7.txt");
    let o = kirkman(&["catalog", "emit", "--name", "tv33-7", "--with-colouring", "paper", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let back = kirkman::format::parse_design(&text).unwrap();
    let tv = kirkman::catalog::tv_kts33(7).unwrap().kts;
    assert_eq!(back.design, tv.design);
    assert_eq!(back.resolution, Some(tv.resolution));
    let col = format!("{}.col", path(&out));
    let o = kirkman(&["verify", "--design", path(&out), "--colouring", &col]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn catalog_list_names_every_entry() {
    let text = stdout(&kirkman(&["catalog", "list"]));
    for id in kirkman::catalog::ids() {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(id.as_str())), "{id} missing");
    }
}

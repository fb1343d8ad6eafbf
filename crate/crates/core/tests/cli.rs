use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tentfield"))
        .args(args)
        .env_remove("TENTFIELD_MAX_PN")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_both_totals() {
    let o = run(&["count", "--p", "2", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "J=6 I=2\n");
    let o = run(&["count", "--p", "3", "--m", "40", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["m"], 40);
    assert!(v["J"].to_string().len() > 18);
}

#[test]
fn verify_reports_frobenius_rows() {
    let o = run(&["verify", "--p", "3", "--n", "3", "--I", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("27/27 Frobenius checks passed"));
    let o = run(&["verify", "--p", "2", "--n", "4", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let sweep: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.ends_with("] Frobenius checks passed"))
        .map(String::from)
        .collect();
    assert_eq!(sweep.len(), 13);
    assert!(sweep.iter().all(|l| l.starts_with("16/16 [I=")));
    assert!(sweep.iter().any(|l| l.contains("[I=empty]")));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["table", "--p", "4", "--n", "2"][..],
        &["table", "--p", "2", "--n", "2", "--modulus", "1,0,1"],
        &["perm", "--p", "3", "--n", "2", "--I", "3"],
        &["plot", "--p", "2", "--n", "3", "--format", "csv"],
        &["nonsense"],
        &["perm", "--p", "2", "--n", "30"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn size_cap_is_configurable() {
    let o = Command::new(env!("CARGO_BIN_EXE_tentfield"))
        .args(["perm", "--p", "2", "--n", "5"])
        .env("TENTFIELD_MAX_PN", "16")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_tentfield"))
        .args(["perm", "--p", "2", "--n", "4"])
        .env("TENTFIELD_MAX_PN", "16")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn fixpoints_csv_columns() {
    let o = run(&["fixpoints", "--p", "2", "--n", "2"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("k,numerator,denominator,decimal,period_digits")
    );
    assert_eq!(lines.next(), Some("0,0,1,0.0,00"));
    assert_eq!(lines.next(), Some("1,2,5,0.4,0110"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn orbits_are_json_cycles() {
    let o = run(&["orbits", "--p", "2", "--n", "4"]);
    let cycles: Vec<Vec<u64>> = serde_json::from_slice(&o.stdout).unwrap();
    let mut all: Vec<u64> = cycles.iter().flatten().copied().collect();
    all.sort();
    assert_eq!(all, (0..16).collect::<Vec<_>>());
    assert!(cycles.iter().all(|c| 4 % c.len() == 0));
}

#[test]
fn table_json_has_sorted_keys() {
    let o = run(&[
        "table",
        "--p",
        "2",
        "--n",
        "4",
        "--modulus",
        "1,1,0,0,1",
        "--format",
        "json",
    ]);
    let text = stdout(&o);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[2]["image_string"], "a^3");
    let first = text.find("\"g_of_x_k_decimal\"").unwrap();
    assert!(first < text.find("\"image_string\"").unwrap());
    assert!(text.find("\"image_string\"").unwrap() < text.find("\"k\"").unwrap());
}

#[test]
fn cheb_outputs() {
    let o = run(&["cheb", "--p", "2", "--n", "3"]);
    let text = stdout(&o);
    assert!(text.starts_with("k,x_exact,y,residual,factorization_error"));
    assert_eq!(text.lines().count(), 9);
    let o = run(&["cheb", "--p", "2", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, 0, -8, 0, 8]));
    let o = run(&["cheb", "--p", "3", "--n", "2", "--format", "svg"]);
    assert!(stdout(&o).starts_with("<svg"));
}

#[test]
fn plot_marks_every_fixed_point() {
    let o = run(&["plot", "--p", "3", "--n", "3", "--I", "2"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches("<circle").count(), 27);
    assert_eq!(svg.matches("fp inc").count(), 13);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perm.txt");
    let o = run(&[
        "perm",
        "--p",
        "2",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "0 1 3 2 6 7 5 4\n");
}

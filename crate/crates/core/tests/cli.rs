use std::process::{Command, Output};

fn altperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altperm")).args(args).output().expect("binary runs")
}

fn column(out: &Output, i: usize) -> Vec<String> {
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    reader.records().map(|r| r.unwrap()[i].to_string()).collect()
}

#[test]
fn fm_rows() {
    let out = altperm(&["fm", "--m", "2", "--order", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(column(&out, 2), (0..=8).map(|i| i.to_string()).collect::<Vec<_>>());
    assert_eq!(column(&out, 3), ["1", "1", "1", "2", "5", "17", "72", "367", "2179"]);
}

#[test]
fn euler_rows() {
    let out = altperm(&["euler", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(column(&out, 3), ["1", "1", "1", "2", "5"]);
}

#[test]
fn oracle_suite_passes() {
    let out = altperm(&["verify", "--suite", "oracle", "--max-n", "7", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(column(&out, 3).iter().all(|v| v == "pass"));
}

#[test]
fn all_suites_pass() {
    let out = altperm(&["verify", "--max-n", "6", "--seed", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let suites: std::collections::BTreeSet<String> = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["parameters"]["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(suites.len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["cycle", "--rho", "1,2"][..],
        &["cycle", "--rho", "0"],
        &["multiset", "--alpha", "2,0"],
        &["fixed"],
        &["asy", "--kind", "d", "--terms", "2"],
        &["verify", "--suite", "bogus"],
        &["verify", "--suite", "oracle", "--max-n", "12"],
    ] {
        let out = altperm(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn byte_identical_runs() {
    let args = ["verify", "--suite", "identities", "--max-n", "5", "--seed", "11", "--format", "json"];
    assert_eq!(altperm(&args).stdout, altperm(&args).stdout);
}

#[test]
fn rational_output() {
    let out = altperm(&["asy", "--kind", "a", "--terms", "3"]);
    assert_eq!(column(&out, 3), ["1", "1/3", "-13/90", "467/5670"]);
}

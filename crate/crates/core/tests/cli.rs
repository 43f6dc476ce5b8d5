use std::io::Write;
use std::process::{Command, Output, Stdio};

use gapsort::cli::{self, BenchRecord, Format};

fn gapsort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapsort")).args(args).output().unwrap()
}

const HEADER: &str = "algorithm,n,epsilon,c,seed,distribution,comparisons,shift_moves,rebalance_moves,max_shift,emergency_rebalances,wall_time_ns,generator";

fn strip_time(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| {
            let mut f: Vec<&str> = l.split(',').collect();
            f[11] = "-";
            f.join(",")
        })
        .collect()
}

#[test]
fn bench_emits_deterministic_csv() {
    let args = ["bench", "--algo", "library", "--n", "4096", "--trials", "3", "--seed", "1"];
    let a = gapsort(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(!text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], HEADER);
    assert_eq!(lines.len(), 4);
    assert_eq!(text.matches("algorithm,").count(), 1);
    for l in &lines[1..] {
        assert!(l.starts_with("library,4096,1.0,4.0,"));
        assert!(l.ends_with(",chacha8-rand0.9"));
    }
    let b = gapsort(&args);
    assert_eq!(strip_time(&text), strip_time(&String::from_utf8(b.stdout).unwrap()));
}

#[test]
fn bench_reversed_insertion_closed_form() {
    let out = gapsort(&["bench", "--algo", "insertion", "--n", "1024", "--dist", "reversed"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[7], "523776");
    assert_eq!(row[5], "reversed");
}

#[test]
fn bench_output_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        let path = dir.path().join(format!("out{jobs}.csv"));
        let out = gapsort(&[
            "bench",
            "--algo",
            "library,binary-insertion",
            "--n",
            "500,2000",
            "--trials",
            "4",
            "--seed",
            "3",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        strip_time(&std::fs::read_to_string(path).unwrap())
    };
    let one = run("1");
    assert_eq!(one.len(), 1 + 2 * 2 * 4);
    assert_eq!(one, run("3"));
}

#[test]
fn bench_json_format() {
    let out = gapsort(&["bench", "--n", "64", "--trials", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["algorithm"], "library");
    assert_eq!(v[0]["generator"], "chacha8-rand0.9");
}

#[test]
fn write_records_round_trips_through_csv_reader() {
    let records: Vec<BenchRecord> =
        cli::run_bench(&cli::BenchConfig { sizes: vec![10, 20], ..Default::default() }).unwrap();
    let mut buf = Vec::new();
    cli::write_records(&records, Format::Csv, &mut buf).unwrap();
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>().join(","), HEADER);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[1][1], "20");
    assert_eq!(rows[1][6].parse::<u64>().unwrap(), records[1].comparisons);
}

#[test]
fn census_reports_per_round_rates() {
    let out = gapsort(&["census", "--n", "4096", "--trials", "5", "--seed", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 4096);
    assert_eq!(v["generator"], "chacha8-rand0.9");
    let rounds = v["rounds"].as_array().unwrap();
    assert!(!rounds.is_empty());
    for r in rounds {
        assert!(r["violation_rate"].as_f64().unwrap() <= 1.0);
        assert!(r["model_violation_probability"].is_number());
    }
}

#[test]
fn urn_report() {
    let out = gapsort(&["urn", "--m", "256", "--c", "2", "--trials", "2000", "--seed", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["initial_a"], 16);
    assert_eq!(v["expected_final_a"], 32.0);
    assert!(v["z_score"].as_f64().unwrap().abs() < 5.0);
}

#[test]
fn fit_reports_exponents() {
    let out = gapsort(&["fit", "--algo", "library,insertion", "--n", "256,512,1024,2048", "--trials", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["algorithm"], "insertion");
    let ins = reports[1]["moves"]["exponent"].as_f64().unwrap();
    assert!((1.8..2.2).contains(&ins), "{ins}");
}

#[test]
fn sort_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gapsort"))
        .args(["sort", "--seed", "3", "--metrics"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"5 -3 9\n0 5\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "-3\n0\n5\n5\n9\n");
    let report: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(report["seed"], 3);
    assert!(report["metrics"]["comparisons"].as_u64().unwrap() > 0);
}

#[test]
fn sort_rejects_non_integers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.txt");
    std::fs::write(&path, "1 two 3").unwrap();
    let out = gapsort(&["sort", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(cli::EXIT_USAGE));
}

#[test]
fn invalid_flags_exit_64_with_usage() {
    for args in [
        &["bench"][..],
        &["bench", "--n", "10", "--algo", "quick"],
        &["bench", "--n", "0"],
        &["bench", "--n", "10", "--trials", "0"],
        &["bench", "--n", "10", "--epsilon", "-1"],
        &["bench", "--n", "10", "--dist", "gaussian"],
        &["frobnicate"],
        &["urn", "--m", "4", "--c", "10"],
    ] {
        let out = gapsort(args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.to_lowercase().contains("usage"), "{args:?}: {err}");
    }
}

#[test]
fn unwritable_output_exits_2() {
    let out = gapsort(&["bench", "--n", "10", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gapsort(&["urn", "--m", "64", "--trials", "10", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(gapsort(&["--help"]).status.code(), Some(0));
    assert_eq!(gapsort(&["bench", "--help"]).status.code(), Some(0));
}

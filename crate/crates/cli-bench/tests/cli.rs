//! End-to-end checks of the binary: exit codes, artifacts, and determinism.

use std::path::Path;
use std::process::{Command, Output};

use data_io::{read_history_csv, read_labels, read_result};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vls-bench"))
}

fn write_demo(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("demo4.csv");
    std::fs::write(&path, "0,0\n0,2\n10,0\n10,2\n").unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

#[test]
fn cluster_reports_the_demo_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_demo(dir.path());
    let out = dir.path().join("demo.json");
    let output = run(&[
        "cluster",
        "--data",
        data.to_str().unwrap(),
        "--clusters",
        "2",
        "--algo",
        "bigmeans",
        "--sample-size",
        "4",
        "--iters",
        "20",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("objective=4"), "summary line: {stdout}");

    let document = read_result(&out).unwrap();
    assert_eq!(document.full_objective, 4.0);
    assert_eq!(document.history.len(), 20);
    let labels = read_labels(dir.path().join("demo.labels")).unwrap();
    assert_eq!(labels.len(), 4);
    assert_eq!(labels[0], labels[1]);
    assert_eq!(labels[2], labels[3]);
    assert_ne!(labels[0], labels[2]);
    let history = read_history_csv(dir.path().join("demo.history.csv")).unwrap();
    assert_eq!(history.len(), 20);
    assert!(history.iter().enumerate().all(|(i, r)| r.t == i as u64));
}

#[test]
fn zero_sample_size_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_demo(dir.path());
    let output = run(&[
        "cluster",
        "--data",
        data.to_str().unwrap(),
        "--clusters",
        "2",
        "--algo",
        "bigmeans",
        "--sample-size",
        "0",
        "--iters",
        "5",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("sample size"), "stderr: {stderr}");
}

#[test]
fn sample_range_with_the_fixed_size_algorithm_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_demo(dir.path());
    let output = run(&[
        "cluster",
        "--data",
        data.to_str().unwrap(),
        "--clusters",
        "2",
        "--algo",
        "bigmeans",
        "--sample-range",
        "2:4",
        "--iters",
        "5",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let output = run(&["cluster", "--clusters", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

fn normalized_document(path: &Path) -> data_io::ResultDocument {
    let mut document = read_result(path).unwrap();
    document.total_wall_ms = 0.0;
    for row in &mut document.history {
        row.elapsed_ms = 0.0;
    }
    document
}

#[test]
fn fixed_seed_reruns_are_identical_apart_from_wall_times() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_demo(dir.path());
    let mut documents = Vec::new();
    let mut labels = Vec::new();
    for run_index in 0..2 {
        let out = dir.path().join(format!("run{run_index}.json"));
        let output = run(&[
            "cluster",
            "--data",
            data.to_str().unwrap(),
            "--clusters",
            "2",
            "--algo",
            "bigvns",
            "--sample-size",
            "3",
            "--shake-range",
            "0:2",
            "--iters",
            "25",
            "--seed",
            "99",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(output.status.code(), Some(0));
        let mut document = normalized_document(&out);
        // the labels path embeds the run directory; normalize it too
        document.labels_path = String::new();
        documents.push(document);
        labels.push(std::fs::read(dir.path().join(format!("run{run_index}.labels"))).unwrap());
    }
    assert_eq!(documents[0], documents[1]);
    assert_eq!(labels[0], labels[1]);
}

#[test]
fn out_dir_environment_variable_sets_the_default_destination() {
    let dir = tempfile::tempdir().unwrap();
    let data = write_demo(dir.path());
    let output = binary()
        .args([
            "cluster",
            "--data",
            data.to_str().unwrap(),
            "--clusters",
            "2",
            "--algo",
            "bigmeans",
            "--sample-size",
            "4",
            "--iters",
            "5",
        ])
        .env("VLS_OUT_DIR", dir.path())
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(dir.path().join("result.json").exists());
    assert!(dir.path().join("result.labels").exists());
    assert!(dir.path().join("result.history.csv").exists());
}

#[test]
fn verify_passes_clean_and_fails_corrupted() {
    let clean = run(&["verify"]);
    assert_eq!(clean.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&clean.stdout);
    assert!(stdout.contains("verify: 20/20 ok"), "stdout: {stdout}");

    let corrupted = run(&["verify", "--self-test-corrupt"]);
    assert_eq!(corrupted.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&corrupted.stdout);
    assert!(stdout.contains("FAIL"), "stdout: {stdout}");
    let stderr = String::from_utf8_lossy(&corrupted.stderr);
    assert!(
        stderr.contains("blob-00"),
        "failure must name the instance: {stderr}"
    );
}

#[test]
fn bench_emits_a_table_and_per_run_histories() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&[
        "bench",
        "--points-per-center",
        "200",
        "--seeds",
        "3",
        "--sample-size",
        "100",
        "--iters",
        "20",
        "--baseline-restarts",
        "3",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("median objective"), "table: {stdout}");
    assert!(stdout.contains("relative gap"), "table: {stdout}");
    for run_index in 0..3 {
        let history =
            read_history_csv(dir.path().join(format!("run_{run_index:02}.history.csv"))).unwrap();
        assert_eq!(history.len(), 20);
    }
    let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 4);
    let header = summary.lines().next().unwrap();
    assert!(header.ends_with("relative_gap"));
    // the gap column restates the two objective columns exactly
    for line in summary.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let alg: f64 = fields[2].parse().unwrap();
        let base: f64 = fields[4].parse().unwrap();
        let gap: f64 = fields[6].parse().unwrap();
        assert_eq!(gap, (alg - base) / base);
    }
}

//! End-to-end tests of the `teneig` binary: exit codes, output formats,
//! file round trips, and determinism, all through the public command line.

use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_teneig");

fn teneig(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("failed to spawn teneig")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is not utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is not utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process was killed by a signal")
}

/// Drop the two trailing time columns from every csv record so outputs of
/// separate runs can be compared exactly.
fn strip_time_columns(csv: &str) -> String {
    csv.lines()
        .map(|line| {
            if line.starts_with('#') || line.is_empty() {
                line.to_string()
            } else {
                let fields: Vec<&str> = line.split(',').collect();
                assert!(fields.len() > 2, "csv line too short: {line}");
                fields[..fields.len() - 2].join(",")
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse `(occurrences, lambda)` pairs from csv data rows.
fn csv_rows(csv: &str) -> Vec<(u64, f64)> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(|line| {
            let mut fields = line.split(',');
            let occ = fields.next().unwrap().parse().unwrap();
            let lambda = fields.next().unwrap().parse().unwrap();
            (occ, lambda)
        })
        .collect()
}

fn trailer_failures(csv: &str) -> u64 {
    let line = csv
        .lines()
        .find(|l| l.starts_with("# failed_to_converge:"))
        .expect("missing failure trailer");
    line.split_whitespace()
        .nth(2)
        .unwrap()
        .parse()
        .expect("unparsable failure count")
}

#[test]
fn run_dataset_prints_table() {
    let out = teneig(&["run", "--dataset", "kore02", "--starts", "25", "--seed", "3"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("occurrences"), "missing header: {text}");
    assert!(text.contains("0.8893"), "expected top eigenvalue: {text}");
    assert!(text.contains("Maximum"), "missing classification: {text}");
    assert!(text.contains("failed to converge: 0 of 25 starts"), "{text}");
}

#[test]
fn run_csv_accounts_for_every_start() {
    let out = teneig(&[
        "run", "--dataset", "kore02", "--starts", "30", "--seed", "11", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let csv = stdout_of(&out);
    assert!(csv.starts_with("occurrences,lambda,x1,x2,x3,median_its"), "{csv}");

    let rows = csv_rows(&csv);
    assert!(!rows.is_empty());
    let total: u64 = rows.iter().map(|(occ, _)| occ).sum();
    assert_eq!(total + trailer_failures(&csv), 30);

    // Maxima runs sort rows by descending eigenvalue.
    for pair in rows.windows(2) {
        assert!(pair[0].1 >= pair[1].1, "rows out of order: {rows:?}");
    }
}

#[test]
fn run_minima_orders_most_negative_first() {
    let out = teneig(&[
        "run", "--dataset", "kore02", "--beta", "-1", "--starts", "30", "--seed", "11",
        "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let rows = csv_rows(&stdout_of(&out));
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|&(_, l)| l < 0.0), "minima run found {rows:?}");
    for pair in rows.windows(2) {
        assert!(pair[0].1 <= pair[1].1, "rows out of order: {rows:?}");
    }
}

#[test]
fn run_json_is_structured() {
    let out = teneig(&[
        "run", "--dataset", "kore02", "--starts", "20", "--seed", "4", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("invalid json");
    assert_eq!(v["starts"], 20);
    let rows = v["rows"].as_array().expect("rows missing");
    assert!(!rows.is_empty());
    for row in rows {
        assert!(row["lambda"].is_number());
        assert_eq!(row["x"].as_array().unwrap().len(), 3);
        assert!(row["classification"].is_string());
        assert!(row["occurrences"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn usage_errors_exit_one() {
    let cases: &[&[&str]] = &[
        // unknown subcommand
        &["bogus"],
        // unknown flag
        &["run", "--dataset", "kore02", "--no-such-flag"],
        // neither --dataset nor --tensor-a
        &["run"],
        // both sources at once
        &["run", "--dataset", "kore02", "--tensor-a", "/tmp/whatever.tns"],
        // bad orientation
        &["run", "--dataset", "kore02", "--beta", "2"],
        // unknown dataset
        &["run", "--dataset", "nope"],
        // unparsable shift
        &["run", "--dataset", "kore02", "--shift", "sometimes"],
        // unknown output format
        &["run", "--dataset", "kore02", "--format", "xml"],
        // --x0 with the wrong dimension
        &["run", "--dataset", "kore02", "--x0", "1.0,0.0"],
        // --x0 that is not numeric
        &["run", "--dataset", "kore02", "--x0", "1.0,zero,0.0"],
        // --tensor-a without --b-kind
        &["run", "--tensor-a", "/tmp/whatever.tns"],
        // missing input file
        &["run", "--tensor-a", "/definitely/not/here.tns", "--b-kind", "z"],
        // --b-kind d without --d-matrix
        &["run", "--tensor-a", "/tmp/whatever.tns", "--b-kind", "d"],
        // classify with a malformed vector
        &["classify", "--dataset", "kore02", "--lambda", "1.0", "--x", "1.0"],
        // export of an unknown dataset
        &["export", "--dataset", "nope", "--out", "/tmp/out.tns"],
    ];
    for args in cases {
        let out = teneig(args);
        assert_eq!(
            exit_code(&out),
            1,
            "args {:?} gave exit {} (stderr: {})",
            args,
            exit_code(&out),
            stderr_of(&out)
        );
    }
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"][..], &["run", "--help"][..]] {
        let out = teneig(args);
        assert_eq!(exit_code(&out), 0, "args {args:?}");
    }
}

#[test]
fn all_starts_failing_exits_two() {
    let out = teneig(&[
        "run", "--dataset", "kore02", "--starts", "3", "--max-iters", "1", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 2);
    let csv = stdout_of(&out);
    assert_eq!(trailer_failures(&csv), 3);
    assert!(csv_rows(&csv).is_empty());
    assert!(
        stderr_of(&out).contains("numerical failure"),
        "stderr: {}",
        stderr_of(&out)
    );
}

#[test]
fn export_then_run_reproduces_dataset_run() {
    let dir = tempfile::tempdir().unwrap();
    let tensor_path = dir.path().join("kore02.tns");
    let out = teneig(&[
        "export", "--dataset", "kore02", "--out", tensor_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(tensor_path.exists());

    let common = ["--starts", "20", "--seed", "5", "--format", "csv"];
    let direct = teneig(&[&["run", "--dataset", "kore02"], &common[..]].concat());
    let via_file = teneig(
        &[
            &["run", "--tensor-a", tensor_path.to_str().unwrap(), "--b-kind", "z"],
            &common[..],
        ]
        .concat(),
    );
    assert_eq!(exit_code(&direct), 0);
    assert_eq!(exit_code(&via_file), 0);
    assert_eq!(
        strip_time_columns(&stdout_of(&direct)),
        strip_time_columns(&stdout_of(&via_file)),
        "file round trip changed the results"
    );
}

#[test]
fn explicit_weighting_matches_matrix_weighted_dataset() {
    // The deig dataset weights with a closed-form matrix kind; feeding the
    // materialized weighting tensor back through --b-kind explicit must find
    // the same eigenvalues (summation order differs, so compare numerically).
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.tns");
    let b_path = dir.path().join("b.tns");
    for (which, path) in [("a", &a_path), ("b", &b_path)] {
        let out = teneig(&[
            "export", "--dataset", "deig", "--which", which, "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    }

    let common = ["--starts", "15", "--seed", "9", "--format", "csv"];
    let direct = teneig(&[&["run", "--dataset", "deig"], &common[..]].concat());
    let explicit = teneig(
        &[
            &[
                "run",
                "--tensor-a",
                a_path.to_str().unwrap(),
                "--tensor-b",
                b_path.to_str().unwrap(),
                "--b-kind",
                "explicit",
            ],
            &common[..],
        ]
        .concat(),
    );
    assert_eq!(exit_code(&direct), 0, "stderr: {}", stderr_of(&direct));
    assert_eq!(exit_code(&explicit), 0, "stderr: {}", stderr_of(&explicit));

    let direct_rows = csv_rows(&stdout_of(&direct));
    let explicit_rows = csv_rows(&stdout_of(&explicit));
    assert_eq!(direct_rows.len(), explicit_rows.len());
    for (d, e) in direct_rows.iter().zip(&explicit_rows) {
        assert_eq!(d.0, e.0, "occurrence counts diverged");
        assert!(
            (d.1 - e.1).abs() <= 1e-9,
            "lambda diverged: {} vs {}",
            d.1,
            e.1
        );
    }
}

#[test]
fn matrix_weighted_kind_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.tns");
    let out = teneig(&[
        "export", "--dataset", "deig", "--out", a_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    // A hand-written symmetric positive definite matrix in the text format.
    let d_path = dir.path().join("d.tns");
    std::fs::write(
        &d_path,
        "symtensor 2 3\nunique\n\
         1 1 2.0\n1 2 0.3\n1 3 0.1\n2 2 1.5\n2 3 0.05\n3 3 3.0\n",
    )
    .unwrap();

    let out = teneig(&[
        "run",
        "--tensor-a",
        a_path.to_str().unwrap(),
        "--b-kind",
        "d",
        "--d-matrix",
        d_path.to_str().unwrap(),
        "--starts",
        "10",
        "--seed",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(!csv_rows(&stdout_of(&out)).is_empty());
}

#[test]
fn x0_runs_a_single_prescribed_start() {
    let out = teneig(&[
        "run", "--dataset", "kore02", "--x0", "0.0417,-0.5618,0.6848", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["starts"], 1);
    assert_eq!(v["failures"], 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["occurrences"], 1);
    let lambda = rows[0]["lambda"].as_f64().unwrap();
    assert!((lambda - 0.8893).abs() < 1e-3, "lambda = {lambda}");
}

#[test]
fn trace_records_the_iteration_history() {
    let dir = tempfile::tempdir().unwrap();
    let trace_path = dir.path().join("trace.csv");
    let out = teneig(&[
        "run",
        "--dataset",
        "kore02",
        "--x0",
        "0.0417,-0.5618,0.6848",
        "--trace",
        trace_path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));

    let trace = std::fs::read_to_string(&trace_path).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next(), Some("k,lambda_k,alpha_k"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 2, "trace too short:\n{trace}");
    for (k, row) in rows.iter().enumerate() {
        let mut fields = row.split(',');
        assert_eq!(fields.next().unwrap().parse::<usize>().unwrap(), k);
        fields.next().unwrap().parse::<f64>().unwrap();
        fields.next().unwrap().parse::<f64>().unwrap();
    }
    let last_lambda: f64 = rows
        .last()
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!(
        (last_lambda - 0.8893220106794).abs() < 1e-9,
        "trace ends at {last_lambda}"
    );
}

#[test]
fn repeated_runs_are_identical_apart_from_timings() {
    let args = [
        "run", "--dataset", "deig", "--starts", "25", "--seed", "42", "--format", "csv",
    ];
    let first = strip_time_columns(&stdout_of(&teneig(&args)));
    let second = strip_time_columns(&stdout_of(&teneig(&args)));
    assert_eq!(first, second);
}

#[test]
fn fixed_shift_runs_to_completion() {
    let out = teneig(&[
        "run", "--dataset", "kore02", "--shift", "10", "--starts", "10", "--seed", "6",
        "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(!csv_rows(&stdout_of(&out)).is_empty());
}

#[test]
fn classify_labels_a_known_pair() {
    let out = teneig(&[
        "classify", "--dataset", "kore02", "--lambda", "0.8893", "--x",
        "0.6672,0.2471,-0.7027",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("classification: Maximum"), "{text}");
    assert!(text.contains("projected hessian eigenvalues:"), "{text}");
    // Two eigenvalues for a three-dimensional problem, both negative.
    let eigs_line = text
        .lines()
        .find(|l| l.starts_with("projected hessian eigenvalues:"))
        .unwrap();
    let eigs: Vec<f64> = eigs_line
        .trim_start_matches("projected hessian eigenvalues:")
        .split(',')
        .map(|s| s.trim().parse().unwrap())
        .collect();
    assert_eq!(eigs.len(), 2);
    assert!(eigs.iter().all(|&e| e < 0.0), "{eigs:?}");
}

#[test]
fn export_rejects_paths_that_cannot_be_written() {
    let dir = tempfile::tempdir().unwrap();
    let missing_parent = dir.path().join("no-such-dir").join("out.tns");
    let out = teneig(&[
        "export", "--dataset", "kore02", "--out", missing_parent.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(!Path::new(&missing_parent).exists());
}

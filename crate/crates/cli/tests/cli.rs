//! End-to-end tests that drive the built binary the way a user would and
//! check the reports it writes.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const FRAC_PI_6: f64 = std::f64::consts::FRAC_PI_6;
const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

fn entswap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entswap"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs the binary expecting success and returns stdout.
fn run_ok(args: &[&str]) -> String {
    let out = entswap(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output is utf-8")
}

fn run_json(args: &[&str]) -> Value {
    serde_json::from_str(&run_ok(args)).expect("output parses as JSON")
}

/// Runs the binary expecting a failure with the given exit code and
/// returns stderr.
fn run_err(args: &[&str], code: i32) -> String {
    let out = entswap(args);
    assert_eq!(out.status.code(), Some(code), "command {args:?}");
    String::from_utf8(out.stderr).expect("stderr is utf-8")
}

fn assert_close(actual: f64, expected: f64, tol: f64) {
    assert!(
        (actual - expected).abs() <= tol,
        "expected {expected}, got {actual} (tol {tol})"
    );
}

fn f(value: &Value) -> f64 {
    value.as_f64().expect("numeric field")
}

#[test]
fn swap_report_carries_the_known_splitting() {
    let theta = format!("{FRAC_PI_6}");
    let report = run_json(&["swap", "--theta1", &theta]);

    assert_eq!(report["command"], "swap");
    assert_eq!(report["parameters"]["bsm"], "full");
    assert_eq!(report["parameters"]["gamma_l"], Value::Null);
    assert!(report["version"].is_string());
    let basis: Vec<&str> = report["results"]["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_str().unwrap())
        .collect();
    assert_eq!(basis, ["HH", "HV", "VH", "VV"]);

    let outcomes = report["results"]["outcomes"].as_array().unwrap();
    let classes: Vec<&str> = outcomes
        .iter()
        .map(|o| o["class"].as_str().unwrap())
        .collect();
    assert_eq!(classes, ["phi_plus", "phi_minus", "psi_plus", "psi_minus"]);
    for (outcome, (p, es)) in outcomes
        .iter()
        .zip([(0.3125, 0.2), (0.3125, 0.2), (0.1875, 1.0), (0.1875, 1.0)])
    {
        assert_close(f(&outcome["probability"]), p, 1e-12);
        assert_close(f(&outcome["es_after"]), es, 1e-12);
        assert_eq!(outcome["amplitudes"].as_array().unwrap().len(), 8);
    }
    assert_close(f(&report["results"]["mean_es"]), 0.5, 1e-12);
}

#[test]
fn swap_then_measure_round_trips_es() {
    let report = run_json(&["swap", "--theta1", "0.6", "--theta2", "0.9"]);
    for outcome in report["results"]["outcomes"].as_array().unwrap() {
        let amps: Vec<String> = outcome["amplitudes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| format!("{}", f(a)))
            .collect();
        let measured = run_json(&["measure", "--amps", &amps.join(",")]);
        assert_close(
            f(&measured["results"]["es"]),
            f(&outcome["es_after"]),
            1e-12,
        );
    }
}

#[test]
fn json_and_csv_carry_identical_values() {
    let args = ["swap", "--theta1", "0.7", "--theta2", "0.4"];
    let report = run_json(&args);
    let csv = run_ok(&[&args[..], &["--format", "csv"]].concat());

    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header[0], "class");
    assert_eq!(header[11], "mean_es");

    let outcomes = report["results"]["outcomes"].as_array().unwrap();
    let mean_es = f(&report["results"]["mean_es"]);
    let mut row_count = 0;
    for (line, outcome) in lines.zip(outcomes) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), header.len());
        assert_eq!(cells[0], outcome["class"].as_str().unwrap());
        assert_eq!(cells[1].parse::<f64>().unwrap(), f(&outcome["probability"]));
        assert_eq!(cells[2].parse::<f64>().unwrap(), f(&outcome["es_after"]));
        for (cell, amp) in cells[3..11]
            .iter()
            .zip(outcome["amplitudes"].as_array().unwrap())
        {
            assert_eq!(cell.parse::<f64>().unwrap(), f(amp));
        }
        assert_eq!(cells[11].parse::<f64>().unwrap(), mean_es);
        row_count += 1;
    }
    assert_eq!(row_count, 4);
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "ensemble", "--theta1", "0.6", "--pairs", "2000", "--seed", "5", "--workers", "3",
    ];
    assert_eq!(run_ok(&args), run_ok(&args));

    let csv_args = [&args[..], &["--format", "csv"]].concat();
    assert_eq!(run_ok(&csv_args), run_ok(&csv_args));
}

#[test]
fn gamma_l_matches_the_direct_angle() {
    // ln(3)/2 prepares tan(theta) = sqrt(3).
    let by_absorption = run_json(&["swap", "--gamma-l", "0.5493061443340549"]);
    let theta = f(&by_absorption["parameters"]["theta1"]);
    assert_close(theta, std::f64::consts::FRAC_PI_3, 1e-12);
    assert_close(f(&by_absorption["parameters"]["gamma_l"]), 0.5493061443340549, 0.0);

    let direct = run_json(&["swap", "--theta1", &format!("{theta}")]);
    assert_eq!(by_absorption["results"], direct["results"]);
}

#[test]
fn negative_absorption_is_rejected() {
    let stderr = run_err(&["swap", "--gamma-l", "-0.1"], 2);
    assert!(stderr.contains("absorption"), "stderr: {stderr}");
}

#[test]
fn both_angle_specs_conflict() {
    run_err(&["swap", "--theta1", "0.5", "--gamma-l", "0.5"], 2);
}

#[test]
fn missing_angle_spec_is_rejected() {
    let stderr = run_err(&["swap"], 2);
    assert!(stderr.contains("--theta1"), "stderr: {stderr}");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# defaults for a small sampled run").unwrap();
    writeln!(file, "theta1 = 0.6").unwrap();
    writeln!(file, "pairs = 500").unwrap();
    writeln!(file, "seed = 11").unwrap();
    let path = file.path().to_str().unwrap();

    let from_file = run_json(&["ensemble", "--config", path]);
    assert_eq!(from_file["parameters"]["theta1"], 0.6);
    assert_eq!(from_file["parameters"]["pairs"], 500);
    assert_eq!(from_file["parameters"]["seed"], 11);

    let overridden = run_json(&["ensemble", "--config", path, "--theta1", "0.9"]);
    assert_eq!(overridden["parameters"]["theta1"], 0.9);
    assert_eq!(overridden["parameters"]["pairs"], 500);
}

#[test]
fn unknown_config_key_is_rejected() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "thetaX = 1").unwrap();
    let stderr = run_err(
        &["swap", "--config", file.path().to_str().unwrap(), "--theta1", "0.5"],
        2,
    );
    assert!(stderr.contains("thetaX"), "stderr: {stderr}");
}

#[test]
fn missing_config_file_is_an_io_failure() {
    run_err(&["swap", "--config", "/no/such/file.conf", "--theta1", "0.5"], 1);
}

#[test]
fn short_decimal_bell_state_measures_maximal() {
    let report = run_json(&["measure", "--amps", "0.70710678,0,0,0,0,0,0.70710678,0"]);
    assert_close(f(&report["results"]["es"]), 1.0, 1e-12);
    assert_close(f(&report["results"]["entropy"]), 1.0, 1e-12);
}

#[test]
fn unnormalized_amps_name_the_norm() {
    let stderr = run_err(&["measure", "--amps", "0.5,0,0,0,0,0,0.5,0"], 2);
    assert!(stderr.contains("0.7071"), "stderr: {stderr}");
}

#[test]
fn amps_count_must_be_eight() {
    let stderr = run_err(&["measure", "--amps", "1,0,0,0"], 2);
    assert!(stderr.contains("8"), "stderr: {stderr}");
}

#[test]
fn balanced_cascade_converges_immediately() {
    let report = run_json(&["cascade", "--theta1", &format!("{FRAC_PI_4}")]);
    assert_eq!(report["parameters"]["mode"], "exact");
    assert_eq!(report["results"]["converged_at"], 0);
    let levels = report["results"]["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 1);
    assert_close(f(&levels[0]["cumulative_bell_fraction"]), 1.0, 1e-12);
    assert_close(f(&report["results"]["limit_target"]), 1.0, 1e-12);
}

#[test]
fn sampled_cascade_is_deterministic_and_echoes_mode() {
    let args = ["cascade", "--theta1", "0.5", "--pairs", "300", "--seed", "9"];
    let first = run_ok(&args);
    assert_eq!(first, run_ok(&args));
    let report: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(report["parameters"]["mode"], "sampled");
    assert_eq!(report["parameters"]["pairs"], 300);
    assert_eq!(report["parameters"]["seed"], 9);
}

#[test]
fn partial_ensemble_reports_no_mean() {
    let report = run_json(&[
        "ensemble", "--theta1", "0.6", "--pairs", "1000", "--bsm", "partial",
    ]);
    assert_eq!(report["results"]["empirical_mean_es"], Value::Null);
    let classes = report["results"]["classes"].as_array().unwrap();
    let names: Vec<&str> = classes
        .iter()
        .map(|c| c["class"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["psi_plus", "psi_minus", "unresolved_phi"]);
    let total: u64 = classes.iter().map(|c| c["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 1000);
}

#[test]
fn sweep_grid_is_clipped_inclusive() {
    let report = run_json(&[
        "sweep", "--theta-min", "0", "--theta-max", "10", "--steps", "5",
    ]);
    let rows = report["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(f(&rows[0]["theta"]), 1e-6);
    assert_eq!(
        f(&rows[4]["theta"]),
        std::f64::consts::FRAC_PI_2 - 1e-6
    );
    for row in rows {
        assert!(f(&row["conservation_residual"]) < 1e-9);
    }
}

#[test]
fn sweep_needs_two_steps() {
    run_err(&["sweep", "--steps", "1"], 2);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["swap", "--theta1", "0.6"];
    let stdout = run_ok(&args);
    run_ok(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

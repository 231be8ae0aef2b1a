//! End to end tests against the compiled binary: output pinning, exit codes,
//! and the export round trip.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_xhermite"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

/// Data rows of a simple csv (no quoting in any field we emit here).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn potential_pretty_prints_the_exact_layout() {
    let out = run(&["potential", "--m1", "2", "--m2", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "x^2 + 32x^2/(4x^4 + 3) - 384x^2/(4x^4 + 3)^2 + 2\n"
    );
}

#[test]
fn potential_one_seed_layout_is_exact_too() {
    let out = run(&["potential", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "x^2 + 8/(2x^2 + 1) - 16/(2x^2 + 1)^2 - 2\n");
}

#[test]
fn spectrum_csv_recovers_exact_levels() {
    let out = run(&[
        "spectrum", "--m1", "2", "--m2", "5", "--levels", "6", "--format", "csv",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout_of(&out));
    let nus: Vec<i64> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
    let energies: Vec<i64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(nus, vec![-6, -3, 0, 1, 2, 3]);
    assert_eq!(energies, vec![-3, 3, 9, 11, 13, 15]);
    for r in &rows {
        let dev: f64 = r[3].parse().unwrap();
        assert!(dev < 1e-3, "fd deviation {dev} too large in row {r:?}");
    }
}

#[test]
fn spectrum_one_seed_matches_finite_differences() {
    let out = run(&["spectrum", "--m", "2", "--levels", "4", "--format", "csv"]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout_of(&out));
    let energies: Vec<i64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(energies, vec![-5, 1, 3, 5]);
    for r in &rows {
        let dev: f64 = r[3].parse().unwrap();
        assert!(dev < 1e-3);
    }
}

#[test]
fn ladder_table_matches_the_known_actions() {
    let out = run(&[
        "ladder", "--m1", "2", "--m2", "3", "--op", "c", "--max-nu", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout_of(&out));
    // nu, energy, outcome, target_nu, coeff_sq, coeff
    assert_eq!(rows[0][0], "-4");
    assert_eq!(rows[0][2], "annihilated");
    assert_eq!(rows[1][..5], ["-3", "1", "mapped to nu = -4", "-4", "24"]);
    assert!(rows[1][5].starts_with("-4.8989794855"));
    assert_eq!(rows[2][2], "annihilated");
    assert_eq!(rows[3][..5], ["1", "9", "mapped to nu = 0", "0", "120"]);
}

#[test]
fn ladder_json_names_the_chain_and_closure_roots() {
    let out = run(&["ladder", "--m1", "2", "--m2", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["operator"], "c");
    assert_eq!(v["chain"], "c = Abar2 Ahat_1 A2_dag");
    assert_eq!(v["order"], 3);
    assert_eq!(v["closure_roots_p"], serde_json::json!([7, 1, -1, 3, 1]));
    assert_eq!(v["closure_roots_q"], serde_json::json!([3, 7, -1]));
}

#[test]
fn family_json_bundle_is_well_formed() {
    let out = run(&["family", "--m1", "4", "--m2", "7", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["m1"], 4);
    assert_eq!(v["m2"], 7);
    assert_eq!(v["mu"], 10);
    assert!(v["potential"].is_object());
    assert!(v["spectrum_h2"].is_array());
}

#[test]
fn one_seed_polys_respect_the_degree_gap() {
    let out = run(&["polys", "--m", "2", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("n =  0: 1"));
    assert!(text.contains("n =  1: (gap)"));
    assert!(text.contains("n =  2: (gap)"));
    assert!(text.contains("n =  3: -8x^3 - 12x"));
}

#[test]
fn verify_exact_suite_exits_zero() {
    let out = run(&[
        "verify", "--m1", "2", "--m2", "3", "--skip-numerics", "--max-n", "8", "--max-nu", "4",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("0 failed"), "unexpected report:\n{text}");
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn verify_numeric_overrides_are_honored() {
    let out = run(&[
        "verify", "--m1", "2", "--m2", "3", "--max-n", "6", "--max-nu", "3",
        "--fd-points", "900", "--fd-tol", "5e-3", "--quad-nodes", "512",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("0 failed"));
}

#[test]
fn verify_rejects_bad_numeric_overrides() {
    let out = run(&["verify", "--m1", "2", "--m2", "3", "--quad-nodes", "32"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("at least 64 nodes"));

    let out = run(&["verify", "--m1", "2", "--m2", "3", "--fd-points", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("grid too coarse"));
}

#[test]
fn verify_fault_injection_exits_one() {
    let out = run(&[
        "verify", "--m1", "2", "--m2", "3", "--skip-numerics", "--inject-fault",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("[FAIL]"));
}

#[test]
fn invalid_parameters_exit_two_and_state_the_constraint() {
    let out = run(&["family", "--m1", "3", "--m2", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("need m1 even and positive, m2 odd, m2 > m1"));
}

#[test]
fn half_given_seed_pair_exits_two() {
    let out = run(&["spectrum", "--m1", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--m1 and --m2 must be given together"));
}

#[test]
fn unknown_flags_exit_two() {
    let out = run(&["family", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

fn assert_export_files(dir: &Path, m1: u32, m2: u32) {
    for suffix in ["", "_potential", "_spectrum"] {
        let ext = if suffix.is_empty() { "json" } else { "csv" };
        let path = dir.join(format!("family_{m1}_{m2}{suffix}.{ext}"));
        assert!(path.is_file(), "missing {}", path.display());
    }
}

#[test]
fn export_round_trips_deterministically() {
    let tmp = tempfile::tempdir().unwrap();
    let dir_a = tmp.path().join("a");
    let dir_b = tmp.path().join("b");

    for dir in [&dir_a, &dir_b] {
        let out = run(&[
            "export", "--m1", "2", "--m2", "3", "--out-dir", dir.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "stderr: {}", stderr_of(&out));
        assert_export_files(dir, 2, 3);
    }

    let a = std::fs::read(dir_a.join("family_2_3.json")).unwrap();
    let b = std::fs::read(dir_b.join("family_2_3.json")).unwrap();
    assert_eq!(a, b, "two exports of the same family differ");

    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["m1"], 2);
    assert_eq!(v["spectrum_h2"][0]["nu"], -4);

    let spectrum = std::fs::read_to_string(dir_a.join("family_2_3_spectrum.csv")).unwrap();
    assert!(spectrum.starts_with("nu,energy\n-4,-1\n-3,1\n"));
}

#[test]
fn export_honors_the_output_directory_env_var() {
    let tmp = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["export", "--m1", "2", "--m2", "5"])
        .env("XHERMITE_OUT_DIR", tmp.path())
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_export_files(tmp.path(), 2, 5);
}

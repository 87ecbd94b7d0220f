use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer-verify"))
        .args(args)
        .env_remove("KUMMER_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn passing_suite_exits_zero() {
    let out = run(&["group"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "group");
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["status"] != "FAIL"));
}

#[test]
fn failing_claim_exits_one() {
    // no training primes: the empty rule cannot predict the held-out traces
    let out = run(&["modularity", "--p-max", "80", "--calibration-split", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let holdout = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "modularity.omega.calibration_holdout")
        .unwrap();
    assert_eq!(holdout["status"], "FAIL");
}

#[test]
fn reported_findings_do_not_fail() {
    let out = run(&["torus"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["claims"].as_array().unwrap().iter().any(|c| c["status"] == "REPORTED"));
}

#[test]
fn csv_only_for_prime_tables() {
    let out = run(&["modularity", "--p-max", "40", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("model,p,N_p,a_p,split,pi,b_p,checks"));
    assert!(text.contains("omega,7,9,-1,split,"));
    let out = run(&["group", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn markdown_lists_statements() {
    let out = run(&["curve", "--format", "markdown"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# Suite `curve`"));
    assert!(text.contains("tangent lines cut 3q0+q1, 3q1+qinf, 3qinf+q0"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["group", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["group", "--p-max", "-3"]).status.code(), Some(2));
}

#[test]
fn degree_bound_reaches_both_oracles() {
    let v = json(&run(&["quotients", "--degree-bound", "8"]));
    let claims = v["claims"].as_array().unwrap();
    for id in ["quotients.z3_generation", "quotients.z7_generation"] {
        let c = claims.iter().find(|c| c["id"] == id).unwrap();
        assert_eq!(c["payload"]["degree_bound"], 8);
    }
}

#[test]
fn qexp_file_is_compared() {
    let dir = std::env::temp_dir().join(format!("kummer-qexp-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    // leading coefficients of the omega curve's series
    std::fs::write(&good, "# a_n\n1\n0\n0\n-2\n0\n0\n-1\n0\n0\n0\n0\n0\n5\n").unwrap();
    let out = run(&["modularity", "--p-max", "30", "--qexp-file", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "modularity.qexp_comparison")
        .unwrap();
    assert_eq!(c["status"], "REPORTED");
    assert_eq!(c["payload"]["omega_h1"]["mismatches"], 0);

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "1\nnot a number\n").unwrap();
    let out = run(&["modularity", "--qexp-file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn output_independent_of_job_count() {
    let one = run(&["modularity", "--jobs", "1"]);
    let four = run(&["modularity", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_kummer-verify"))
        .arg("modularity")
        .env("KUMMER_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
}

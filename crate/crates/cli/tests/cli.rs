//! End-to-end tests of the binary: output formats, JSON schema stability,
//! exit codes, and guard handling.

use std::process::{Command, Output};

use orbitope::{h_polynomial_lattice, Int, SimpleSubset};
use serde_json::Value;

fn orbitope_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitope"))
        .args(args)
        .env_remove("ORBITOPE_GUARD_N")
        .output()
        .expect("failed to launch binary")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout not utf-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no exit code")
}

#[test]
fn eulerian_text_is_the_coefficient_list() {
    let out = orbitope_cmd(&["eulerian", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 11 11 1\n");
}

#[test]
fn hvec_json_schema() {
    let out = orbitope_cmd(&["hvec", "--n", "3", "--k", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "hvec");
    assert_eq!(v["n"], 3);
    assert_eq!(v["j"], serde_json::json!([3]));
    assert_eq!(v["k"], 1);
    assert_eq!(v["smooth"], true);
    assert_eq!(v["form"], "right-interval");
    assert_eq!(v["h"], serde_json::json!(["1", "5", "5", "1"]));
    assert!(v["version"].is_string());
}

#[test]
fn json_round_trips_through_recomputation() {
    let out = orbitope_cmd(&["hvec", "--n", "4", "--j", "2,3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();

    // recompute from the (n, j) in the report
    let n = v["n"].as_u64().unwrap() as u32;
    let members: Vec<u32> = v["j"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as u32)
        .collect();
    let j = SimpleSubset::new(n, members).unwrap();
    let h = h_polynomial_lattice::<Int>(&j);
    let coeffs: Vec<String> = (0..=h.d()).map(|i| h.coeff(i).to_string()).collect();
    assert_eq!(v["h"], serde_json::json!(coeffs));

    // identical invocations are byte-identical
    let again = orbitope_cmd(&["hvec", "--n", "4", "--j", "2,3", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn poincare_json_carries_both_series() {
    let out = orbitope_cmd(&["poincare", "--n", "2", "--j", "empty", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poincare"], serde_json::json!(["1", "0", "4", "0", "1"]));
    assert_eq!(v["betti"], v["poincare"]);
}

#[test]
fn classify_text_line() {
    let out = orbitope_cmd(&["classify", "--n", "3", "--j", "1,3"]);
    assert_eq!(
        stdout(&out),
        "n = 3  J = s1,s3  form = none  smooth = false\n"
    );
}

#[test]
fn fvec_csv_has_one_row_per_dimension() {
    let out = orbitope_cmd(&["fvec", "--n", "3", "--k", "1", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["dim,count", "0,12", "1,18", "2,8", "3,1"]);
}

#[test]
fn csv_quotes_fields_containing_commas() {
    let out = orbitope_cmd(&["classify", "--n", "3", "--j", "1,3", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().nth(1), Some(r#"3,"s1,s3",none,false"#));

    let out = orbitope_cmd(&["verify", "--suite", "oracle", "--max-n", "2", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == r#""n=2 J=s1,s2",true"#), "{text}");
}

#[test]
fn hvec_latex_emits_a_tabular() {
    let out = orbitope_cmd(&["hvec", "--n", "2", "--j", "empty", "--format", "latex"]);
    let text = stdout(&out);
    assert!(text.starts_with("\\begin{tabular}"));
    assert!(text.contains("1 & 4 \\\\"));
    assert!(text.trim_end().ends_with("\\end{tabular}"));
}

#[test]
fn verify_thm6_summary_and_exit() {
    let out = orbitope_cmd(&["verify", "--suite", "thm6", "--max-n", "8"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("thm6: 44/44 instances pass\n"));
}

#[test]
fn verify_all_suites_pass_at_defaults() {
    for suite in ["thm4", "thm5", "thm6", "cor4", "id14", "oracle", "symmetry"] {
        let out = orbitope_cmd(&["verify", "--suite", suite]);
        assert_eq!(code(&out), 0, "suite {suite}: {}", stdout(&out));
    }
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "--suite", "thm4", "--format", "json"];
    let first = orbitope_cmd(&args);
    let second = orbitope_cmd(&args);
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["suite"]["name"], "thm4");
    assert_eq!(v["suite"]["instances"].as_array().unwrap().len(), 8);
}

#[test]
fn oracle_dump_lists_every_face() {
    let out = orbitope_cmd(&["oracle", "--n", "2", "--j", "empty", "--dump"]);
    let text = stdout(&out);
    assert!(text.contains("f: 6 6 1"));
    let face_lines = text.lines().filter(|l| l.starts_with("dim ")).count();
    assert_eq!(face_lines, 13);
    assert!(text.lines().any(|l| l == "dim 2: 0 1 2 3 4 5"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&orbitope_cmd(&["bogus"])), 2);
    assert_eq!(code(&orbitope_cmd(&["hvec", "--n", "3"])), 2);
    assert_eq!(
        code(&orbitope_cmd(&["hvec", "--n", "3", "--j", "1", "--k", "1"])),
        2
    );
    assert_eq!(code(&orbitope_cmd(&["hvec", "--n", "3", "--j", "s9"])), 2);
    assert_eq!(code(&orbitope_cmd(&["hvec", "--n", "3", "--k", "4"])), 2);
    assert_eq!(
        code(&orbitope_cmd(&[
            "oracle", "--n", "2", "--j", "empty", "--dump", "--format", "json"
        ])),
        2
    );
}

#[test]
fn guard_violations_exit_3_and_overrides_work() {
    let out = orbitope_cmd(&["oracle", "--n", "9", "--k", "0"]);
    assert_eq!(code(&out), 3);

    // rank 6 exceeds the default lattice guard but not the raised one
    let blocked = orbitope_cmd(&["oracle", "--n", "6", "--k", "5"]);
    assert_eq!(code(&blocked), 3);
    let flag = orbitope_cmd(&["oracle", "--n", "6", "--k", "5", "--guard-n", "6"]);
    assert_eq!(code(&flag), 0);
    assert!(stdout(&flag).contains("f: 7"));

    let env = Command::new(env!("CARGO_BIN_EXE_orbitope"))
        .args(["oracle", "--n", "6", "--k", "5"])
        .env("ORBITOPE_GUARD_N", "6")
        .output()
        .unwrap();
    assert_eq!(env.status.code().unwrap(), 0);
}

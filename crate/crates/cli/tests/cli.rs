//! End-to-end runs of the `exactpair` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exactpair")).args(args).output().expect("binary runs")
}

/// Runs with `--json` and returns the exit code with the parsed report.
fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("no JSON ({e}); stderr: {}", String::from_utf8_lossy(&out.stderr)));
    (code, v)
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("exactpair-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const T1: &str = "x^2+y^2-z^2-w^2";
const T2: &str = "x^2+y^2+z^2+w^2";

#[test]
fn hf_of_may4() {
    let (code, r) = json(&["hf", &fixture("may4.alg")]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["hf"], serde_json::json!([1, 5, 11, 21, 29, 28, 22, 12, 3]));
    assert_eq!(r["provenance"]["paper_example"], "may4");
    assert_eq!(r["command"], "hf");
    assert!(r["version"].is_string());
}

#[test]
fn hf_of_the_cube_is_gorenstein() {
    let (code, r) = json(&["hf", &fixture("e3gor.alg")]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["hf"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(r["results"]["gorenstein"], true);
    assert_eq!(r["provenance"]["paper_example"], "e3");
}

#[test]
fn linear_generator_is_an_input_error() {
    let f = scratch("lin.alg", "vars x y\ngen x\ngen y^2\n");
    let out = run(&["hf", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree one"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let f = scratch("bad.alg", "vars x y\ngen x^2\ngen y^^2\n");
    let out = run(&["hf", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn degree_bound_exit_code() {
    let f = scratch("open.alg", "vars x y\ngen x^2\n");
    let out = run(&["--max-degree", "6", "hf", &f]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn may4_pair_and_divisibility_lines() {
    let (code, r) = json(&["pair", &fixture("may4.alg"), "--theta1", T1, "--theta2", T2, "--expect", "exact"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["pair"]["verdict"]["kind"], "exact_pair");
    let t = &r["results"]["divisibility_check"];
    assert_eq!(t["sigma"], serde_json::json!([33, 33, 33, 33]));
    assert_eq!(t["divides"], true);
    assert_eq!(t["residuals_vanish"], true);
}

#[test]
fn t_times_t_is_not_a_pair() {
    let (code, r) = json(&["pair", &fixture("may4.alg"), "--theta1", "t", "--theta2", "t"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["pair"]["verdict"]["kind"], "not_pair");
    let (code, _) = json(&["pair", &fixture("may4.alg"), "--theta1", "t", "--theta2", "t", "--expect", "exact"]);
    assert_eq!(code, 3);
    let (code, _) = json(&["pair", &fixture("may4.alg"), "--theta1", "t", "--theta2", "t", "--expect", "not-pair"]);
    assert_eq!(code, 0);
}

#[test]
fn x_pairs_with_itself_in_the_cube() {
    let (code, r) = json(&["pair", &fixture("e3gor.alg"), "--theta1", "x", "--theta2", "x", "--expect", "exact"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["divisibility_check"]["sigma"], serde_json::json!([4, 4]));
}

#[test]
fn screens() {
    let (code, r) = json(&["screen", "--hf", "1,3,3,1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["conclusion"]["remaining"], serde_json::json!([2]));
    let (code, r) = json(&["screen", "--hf", "1,6,21,16,6", "--candidates", "3", "--expect", "no-pair"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["candidates"][0]["sigma"], serde_json::json!([17, 12, 21]));
    let (code, _) = json(&["screen", "--hf", "1,4,10,20,10,4,1", "--candidates", "4", "--expect", "no-pair"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["screen", "--hf", "1,3,3,1", "--expect", "no-pair"]);
    assert_eq!(code, 3);
    assert_eq!(run(&["screen", "--hf", "1,x"]).status.code(), Some(2));
    let (code, r) = json(&["screen", &fixture("may4.alg")]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["conclusion"]["remaining"], serde_json::json!([2, 4]));
}

#[test]
fn sigma_profile_and_residuals() {
    let (code, r) = json(&["sigma", "--hf", "1,5,11,21,29,28,22,12,3", "-D", "4", "--s1", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["sigma"], serde_json::json!([33, 33, 33, 33]));
    assert_eq!(r["results"]["divides_by_division"], true);
    assert!(r["results"]["binomial_residuals"].as_array().unwrap().iter().all(|x| x["residual"] == 0));
}

#[test]
fn factorization_and_complex_of_may4() {
    let (code, r) = json(&["mf", &fixture("may4.alg"), "--theta", T1, "--theta2", T2, "--variant", "both"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["rank"], 16);
    for c in r["results"]["complexes"].as_array().unwrap() {
        assert_eq!(c["exactness"]["all_exact"], true);
        assert_eq!(c["exactness"]["alternating_sums_zero"], true);
    }
}

#[test]
fn one_variable_factorization() {
    let f = scratch("x4.alg", "vars x\ngen x^4\n");
    let (code, r) = json(&["mf", &f, "--theta", "x^2", "--theta2", "x^2", "--matrices"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["m"], "x\n");
    assert_eq!(r["results"]["mcheck"], "x\n");
    let out = run(&["mf", &f, "--theta", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("deg theta >= 2"));
    // (x, x^3) is a pair but (x^2, x) is not
    assert_eq!(run(&["mf", &f, "--theta", "x^2", "--theta2", "x"]).status.code(), Some(3));
}

#[test]
fn linear_search() {
    let (code, r) = json(&["ezd-search", &fixture("may4.alg"), "--binary", "--expect", "none"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["candidates_examined"], 31);
    let (_, r) = json(&["ezd-search", &fixture("may4.alg"), "--field", "F 2"]);
    assert_eq!(r["results"]["hits"].as_array().unwrap().len(), 4);
    let (code, _) = json(&["ezd-search", &fixture("may4.alg"), "--field", "F 3", "--expect", "none"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["ezd-search", &fixture("may4.alg")]).status.code(), Some(2));
    assert_eq!(run(&["ezd-search", &fixture("may4.alg"), "--field", "F 101"]).status.code(), Some(4));
    assert_eq!(run(&["hf", &fixture("may4.alg"), "--field", "F 4"]).status.code(), Some(2));
}

#[test]
fn catalog_commands() {
    let (_, r) = json(&["catalog", "compressed", "-c", "3", "-e", "3", "-r", "1"]);
    assert_eq!(r["results"]["hf"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(r["results"]["screen"]["conclusion"]["remaining"], serde_json::json!([2]));
    let (_, r) = json(&["catalog", "euler", "-s", "5"]);
    assert_eq!(r["results"]["eulerian_coefficients"], serde_json::json!([0, 1, 26, 66, 26, 1]));
    assert_eq!(r["results"]["euler_s"], 16);
    let (_, r) = json(&["catalog", "nab", "-a", "4", "-b", "4"]);
    assert_eq!(r["results"]["value"], 6);
    let (_, r) = json(&["catalog", "det", "-r", "3", "-c", "3"]);
    assert_eq!(r["results"]["hf"], serde_json::json!([1, 4, 1]));
    assert_eq!(r["results"]["value_at_minus_one"], -2);
    let (code, r) = json(&["--seed", "5", "catalog", "segre", "-s", "3", "--direct"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["direct"]["hf"], serde_json::json!([1, 4, 1]));
    assert!(r["provenance"]["seed"].is_u64());
    let (code, r) = json(&["catalog", "circulant", "-b", "3", "-B", "7"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["rank"], 6);
    assert_eq!(run(&["catalog", "nab", "-a", "5", "-b", "2"]).status.code(), Some(2));
}

#[test]
fn paper_suite_passes_and_lists() {
    let (code, r) = json(&["paper-suite"]);
    assert_eq!(code, 0, "{r:#}");
    assert_eq!(r["results"]["passed"], true);
    let (_, r) = json(&["paper-suite", "--list"]);
    let names: Vec<&str> = r["results"]["examples"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(names, ["may4", "may5", "may6", "e3", "rem7_5", "gl4", "segre3", "det_2x2", "circulant", "euler"]);
}

#[test]
fn corrupted_fixture_fails_the_suite() {
    let src = PathBuf::from(fixture(""));
    let dir = std::env::temp_dir().join(format!("exactpair-cli-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for e in std::fs::read_dir(&src).unwrap() {
        let e = e.unwrap();
        std::fs::copy(e.path(), dir.join(e.file_name())).unwrap();
    }
    let may5 = dir.join("may5.expect");
    let text = std::fs::read_to_string(&may5).unwrap().replace("1,6,21,16,6", "1,6,21,16,7");
    std::fs::write(&may5, text).unwrap();
    let (code, r) = json(&["paper-suite", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(code, 3);
    let failed: Vec<&str> = r["results"]["summary"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["passed"] == false)
        .map(|o| o["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["may5"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["--json", "hf", &fixture("may4.alg")],
        vec!["--json", "--seed", "3", "paper-suite", "--only", "may6"],
        vec!["--json", "catalog", "segre", "-s", "3", "--direct"],
    ]
    .iter()
    {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn human_output_ends_with_verdict() {
    let out = run(&["hf", &fixture("e3gor.alg")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("hf                       (1, 3, 3, 1)"));
    assert!(text.trim_end().ends_with("verdict                  ok"));
}

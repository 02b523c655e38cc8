//! End-to-end tests of the `mzv` binary: golden outputs, exit codes, and
//! the JSON schema.

use std::process::{Command, Output};

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .output()
        .expect("failed to run mzv")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no exit code")
}

#[test]
fn expand_depth_three_plain() {
    let out = mzv(&["expand", "-p", "0,0,0", "--format", "plain"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "-1/4 - 1/24 * (e3)/(e2+e3) - 1/24 * (e2+2*e3)/(e1+e2+e3)\n"
    );
}

#[test]
fn expand_depth_two_origin() {
    let out = mzv(&["expand", "-p", "0,0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "1/3 + 1/12 * (e2)/(e1+e2)\n");
}

#[test]
fn expand_latex_golden() {
    let out = mzv(&["expand", "-p", "1,1", "--format", "latex"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "\\frac{1}{360}+\\frac{1}{720}\\cdot\\frac{\\varepsilon_2}{\\varepsilon_1+\\varepsilon_2}\n"
    );
}

#[test]
fn expand_json_schema() {
    let out = mzv(&["expand", "-p", "0,0,0", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["d"], 3);
    assert_eq!(value["terms"][0]["coeff"], "-1/4");
    assert!(value["terms"].as_array().unwrap().len() == 3);
    assert_eq!(value["terms"][1]["factors"][0]["form"][2], "1");
}

#[test]
fn expand_signed_entry() {
    let plain = mzv(&["expand", "-p", "1,1"]);
    let signed = mzv(&["expand", "-p", "-1,-1", "--signed"]);
    assert_eq!(stdout(&plain), stdout(&signed));
    // Positive coordinates are rejected under --signed.
    let bad = mzv(&["expand", "-p", "1,1", "--signed"]);
    assert_eq!(exit_code(&bad), 3);
}

#[test]
fn expand_restricted_matches() {
    let a = mzv(&["expand", "-p", "1,0,1"]);
    let b = mzv(&["expand", "-p", "1,0,1", "--restricted"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn ordered_limit_values() {
    let out = mzv(&["limit-ordered", "-p", "0,0,0", "--order", "1,2,3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "-3/8\n");

    let out = mzv(&["limit-ordered", "-p", "0,0,0", "--order", "3,2,1"]);
    assert_eq!(stdout(&out), "-1/4\n");
}

#[test]
fn path_limit_value() {
    let out = mzv(&["limit-path", "-p", "0,0,0", "--path", "d^2,d,d"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "-1/3\n");
}

#[test]
fn directional_limit_value() {
    let out = mzv(&["limit-direction", "-p", "0,0", "--theta", "1,1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "3/8\n");
}

#[test]
fn directional_limit_precondition_exit_3() {
    let out = mzv(&["limit-direction", "-p", "0,0", "--theta", "1,-1"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn divergent_path_exit_2() {
    let out = mzv(&["limit-path", "-p", "0,1,0", "--path", "d^2,-1*d,d"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn path_condition_warnings() {
    let out = mzv(&[
        "limit-path",
        "-p",
        "0,1,0",
        "--path",
        "d^2,-1*d,d",
        "--check-path-condition",
    ]);
    assert_eq!(exit_code(&out), 2);
    let text = stdout(&out);
    assert!(text.contains("WARN:"), "expected WARN lines, got {text:?}");

    // A sanctioned path produces no warnings.
    let out = mzv(&[
        "limit-path",
        "-p",
        "0,0,0",
        "--path",
        "d^2,d,d",
        "--check-path-condition",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "-1/3\n");
}

#[test]
fn json_limit_with_warnings() {
    let out = mzv(&[
        "limit-path",
        "-p",
        "0,0",
        "--path",
        "d^3,d",
        "--check-path-condition",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["value"], "5/12");
    assert!(value["warnings"].as_array().unwrap().len() >= 1);
}

#[test]
fn singular_classification() {
    let out = mzv(&["singular", "-s", "1/2,1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "SINGULAR: s_d = 1\n");

    let out = mzv(&["singular", "-s", "2,3"]);
    assert_eq!(stdout(&out), "REGULAR\n");

    let out = mzv(&["singular", "-s", "-5,1,1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["singular"], true);
    let loci: Vec<String> = value["loci"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert!(loci.iter().any(|l| l.contains("s_1+s_2+s_3 = -3")));
}

#[test]
fn oracle_commands() {
    let out = mzv(&["oracle", "zeta", "-m", "3"]);
    assert_eq!(stdout(&out), "1/120\n");

    let out = mzv(&["oracle", "stuffle", "-m", "1,1"]);
    assert_eq!(stdout(&out), "1/144\n");

    let out = mzv(&[
        "oracle", "hurwitz", "--s", "2", "--a", "11", "--em-N", "20", "--em-J", "4",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("0.0951663356"));

    let out = mzv(&["oracle", "zeta2", "--s", "0.0001,0.0001"]);
    assert!(stdout(&out).starts_with("0.375"));

    let out = mzv(&["oracle", "direct", "--s", "2,3", "--cutoff", "400"]);
    assert!(stdout(&out).starts_with("0.2288"));
}

#[test]
fn oracle_precondition_exit_3() {
    let out = mzv(&["oracle", "direct", "--s", "0.5,0.5", "--cutoff", "100"]);
    assert_eq!(exit_code(&out), 3);

    let out = mzv(&["oracle", "zeta2", "--s", "1,1"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn parse_errors_exit_3() {
    let out = mzv(&["expand", "-p", "0,x"]);
    assert_eq!(exit_code(&out), 3);

    let out = mzv(&["limit-ordered", "-p", "0,0", "--order", "1,1"]);
    assert_eq!(exit_code(&out), 3);

    let out = mzv(&["limit-path", "-p", "0,0", "--path", "d"]);
    assert_eq!(exit_code(&out), 3);

    let out = mzv(&["nonsense"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn help_exits_zero() {
    let out = mzv(&["--help"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn output_is_deterministic() {
    let a = mzv(&["expand", "-p", "0,0,0,0", "--format", "json"]);
    let b = mzv(&["expand", "-p", "0,0,0,0", "--format", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

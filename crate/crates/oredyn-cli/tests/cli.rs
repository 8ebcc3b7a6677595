//! End-to-end tests of the `oredyn` binary: exit-code contract, output
//! determinism, schema round-trips, and the documented examples.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oredyn"))
}

fn fixture(name: &str) -> String {
    let root = env!("CARGO_MANIFEST_DIR");
    format!("{root}/../../fixtures/{name}")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

#[test]
fn report_is_deterministic_and_reparses() {
    let a = run(&["report", "--in", &fixture("lorenz.json")]);
    let b = run(&["report", "--in", &fixture("lorenz.json")]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical output required");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid JSON");
    assert_eq!(v["schema"], "oredyn-report/1");
    // The embedded ring reports re-parse under the published schema.
    let t: oredyn::report::DMJson =
        serde_json::from_value(v["skew_laurent_t"].clone()).expect("schema round-trip");
    assert!(t.dm_verdict.contains("primitive but not locally closed"));
    let u: oredyn::report::DMJson =
        serde_json::from_value(v["skew_u"].clone()).expect("schema round-trip");
    assert!(u.zero_primitive.starts_with("unknown"));
}

#[test]
fn growth_example_output() {
    let out = run(&["growth", "--in", &fixture("shear.json")]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rho"]["kind"], "rational");
    assert_eq!(v["rho"]["value"], "1");
    assert_eq!(v["j"], 1);
    assert_eq!(v["growth_type"], "finite");
}

#[test]
fn invariants_example_output() {
    let out = run(&["invariants", "--in", &fixture("swap.json")]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["power_invariant"]["function"], "u*v");
    assert_eq!(v["power_invariant"]["period"], 1);
}

#[test]
fn unknown_verdicts_exit_zero() {
    let out = run(&["analyze-u", "--in", &fixture("henon.json")]);
    assert!(out.status.success(), "unknown verdicts are completed analyses");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["zero_primitive"].as_str().unwrap().starts_with("unknown"));
}

#[test]
fn validation_failures_exit_nonzero() {
    // det = 2 rejected
    let out = run_stdin(
        &["growth", "--in", "-"],
        r#"{"family":"monomial","matrix":[[2,0],[0,1]]}"#,
    );
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("determinant"), "stderr: {err}");
    // det = -1 accepted
    let out = run_stdin(
        &["growth", "--in", "-"],
        r#"{"family":"monomial","matrix":[[2,1],[1,0]],"coeffs":["1","1"]}"#,
    );
    assert!(out.status.success());
    // malformed JSON rejected
    let out = run_stdin(&["growth", "--in", "-"], "not json");
    assert!(!out.status.success());
    // polynomial syntax error is position-annotated
    let out = run_stdin(
        &["growth", "--in", "-"],
        r#"{"family":"plane_poly","polys":["z^2 + $","z"]}"#,
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
    // non-automorphism pair rejected with a diagnostic
    let out = run_stdin(
        &["growth", "--in", "-"],
        r#"{"family":"plane_poly","polys":["z^2","w"]}"#,
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("automorphism"));
}

#[test]
fn resource_caps_are_named() {
    let out = run(&[
        "gk",
        "--in",
        &fixture("lorenz.json"),
        "--depth",
        "100",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("depth"));
}

#[test]
fn batch_inputs_preserve_order() {
    let out = run(&[
        "orbits",
        "--in",
        &fixture("lorenz.json"),
        "--in",
        &fixture("swap.json"),
    ]);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .collect();
    assert_eq!(lines.len(), 2);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    let second: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(first["status"], "dense orbit exists");
    assert_eq!(second["status"], "no dense orbit");
}

#[test]
fn gk_fixture_values() {
    let out = run(&["gk", "--in", &fixture("shear.json"), "--depth", "12"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dims"][0], "3");
    assert_eq!(v["dims"][1], "7");
    assert!(v["classification"]
        .as_str()
        .unwrap()
        .starts_with("polynomial"));
    let out = run(&["gk", "--in", &fixture("lorenz.json"), "--depth", "12"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["classification"]
        .as_str()
        .unwrap()
        .starts_with("exponential"));
}

#[test]
fn periodic_jordan_fixture() {
    let out = run(&[
        "periodic",
        "--in",
        &fixture("jordan.json"),
        "--torsion-bound",
        "6",
        "--period-cap",
        "6",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["torsion_orbits"].as_array().unwrap().len() >= 5);
    assert_eq!(v["divisors"]["directions"].as_array().unwrap().len(), 0);
    assert_eq!(v["divisors"]["infinitely_many"], false);
}

#[test]
fn plane_word_inputs_parse() {
    let out = run_stdin(
        &["report", "--in", "-"],
        r#"{"family":"plane_word","word":[
            {"elementary":{"alpha":"1","p":"w^2 + 1","beta":"1","gamma":"0"}},
            {"affine":{"linear":[["0","1"],["-1","0"]],"translation":["0","0"]}}
        ]}"#,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // (z,w) -> (w^2 + 1 - ... ) composition of a shear and a quarter turn is
    // a Henon-type map of dynamical degree 2.
    assert_eq!(v["skew_laurent_t"]["orbits"]["status"], "dense orbit exists");
}

#[test]
fn pretty_rendering_mentions_verdicts() {
    let out = run(&["report", "--in", &fixture("swap.json"), "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Dixmier-Moeglin: holds"));
    assert!(text.contains("rules applied"));
}

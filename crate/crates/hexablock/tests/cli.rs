//! End-to-end checks of the command-line binary: exit codes, output
//! streams, JSON shape and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexablock")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn classify_exit_codes_follow_the_region() {
    assert_eq!(code(&run(&["classify", "--domain", "g2", "--point", "[0.5,0.1]"])), 0);
    assert_eq!(code(&run(&["classify", "--domain", "g2", "--point", "[2,1]"])), 1);
    assert_eq!(code(&run(&["classify", "--domain", "g2", "--point", "[3,1]"])), 2);
    assert_eq!(code(&run(&["classify", "--domain", "penta", "--point", "[0.1,0.2,0.05]"])), 0);
    assert_eq!(code(&run(&["classify", "--domain", "hexa", "--point", "[0,0,0,[0.5,0]]"])), 0);
    assert_eq!(code(&run(&["classify", "--domain", "hexa", "--point", "[2,0,0,0]"])), 2);
}

#[test]
fn json_echoes_tolerance_and_uses_pairs_for_complex_numbers() {
    let o = run(&["classify", "--domain", "tetra", "--point", "[[0.1,0.2],0,0.3]", "--tol", "1e-7", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["tol"], 1e-7);
    assert_eq!(v["region"], "interior");
    let o = run(&["aut", "apply", "--aut", r#"{"xi1":[1,0],"z1":[0,0],"xi2":[1,0],"z2":[0,0],"omega":[0,1],"flip":false}"#, "--point", "[0.5,0,0,0]", "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let image = &json(&o)["image"];
    assert!(image.as_array().expect("coordinates")[0].as_array().expect("[re, im] pair").len() == 2);
}

#[test]
fn malformed_input_exits_64_with_a_message_on_stderr() {
    let o = run(&["classify", "--domain", "tetra", "--point", "[1,"]);
    assert_eq!(code(&o), 64);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = run(&["mu", "--structure", "hexa", "--matrix", "[[1,2]]", "--json"]);
    assert_eq!(code(&o), 64);
    assert_eq!(json(&o)["exit_code"], 64);
}

#[test]
fn schwarz_infeasible_and_unsupported_codes() {
    let o = run(&["schwarz", "solve", "--lambda0", "0.5", "--target", "[0,0.7,0,0]"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("tetrablock Schwarz inequality"));
    let o = run(&["schwarz", "solve", "--lambda0", "0.5", "--target", "[0.1,0.2,0.2,0.1]"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("supply tetra-inner data"));
    let o = run(&["schwarz", "solve", "--lambda0", "0.5", "--target", "[0,0.25,0.25,0.0625]"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("residual") && text.contains("tol: 1e-9"), "{text}");
}

#[test]
fn sampling_is_deterministic_and_can_write_a_file() {
    let a = run(&["sample", "real-slice", "--out", "csv", "--seed", "11", "--count", "50"]);
    let b = run(&["sample", "real-slice", "--out", "csv", "--seed", "11", "--count", "50"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 51);
    let path = std::env::temp_dir().join(format!("hexablock-cli-test-{}.csv", std::process::id()));
    let path_str = path.to_str().expect("utf-8 path");
    let o = run(&["sample", "boundary", "--out", path_str, "--seed", "2", "--count", "10"]);
    assert_eq!(code(&o), 0);
    let written = std::fs::read_to_string(&path).expect("file written");
    std::fs::remove_file(&path).ok();
    assert_eq!(written.lines().count(), 11);
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("classify"));
}

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2char"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).expect("valid json")
}

#[test]
fn commutator_trace_is_kappa() {
    assert_eq!(
        stdout(&["trace-poly", "X Y x y"]).trim(),
        "-x*y*z + x^2 + y^2 + z^2 - 2"
    );
    assert_eq!(stdout(&["trace-poly", "X X"]).trim(), "x^2 - 2");
}

#[test]
fn rank_three_reversed_triple() {
    assert_eq!(
        stdout(&["trace-poly", "--rank", "3", "X1 X3 X2"]).trim(),
        "-x1*x2*x3 + x1*x23 + x2*x13 + x3*x12 - x123"
    );
}

#[test]
fn bad_rank_and_bad_word_are_usage_errors() {
    assert_eq!(
        run(&["trace-poly", "--rank", "4", "X"]).status.code(),
        Some(2)
    );
    assert_ne!(run(&["trace-poly", "X K"]).status.code(), Some(0));
}

#[test]
fn construct_pair_reproduces_character() {
    let v = json(&["construct", "pair", "x=3,y=-1/2,z=1+2i"]);
    assert_eq!(v["character"]["x"], "3+0i");
    assert_eq!(v["matrices"].as_array().unwrap().len(), 2);
}

#[test]
fn eval_word_agrees_with_polynomial() {
    let v = json(&["eval-word", "X Y x Y X", "--at", "x=3,y=4,z=5"]);
    assert!(v["difference"].as_f64().unwrap() < 1e-9);
    let v = json(&[
        "eval-word",
        "--rank",
        "3",
        "X1 X2 x3 X2",
        "--at",
        "2.5,3,-2.2,1,0.5,4",
    ]);
    assert!(v["difference"].as_f64().unwrap() < 1e-9);
}

#[test]
fn fricke_verdicts() {
    assert_eq!(
        json(&["fricke", "test", "s03", "--coords=-3,-3,-3"])["verdict"],
        "member-slice"
    );
    assert_eq!(
        json(&["fricke", "test", "s11", "--coords=-3,-3,-3"])["verdict"],
        "nonmember"
    );
    let cusp = json(&["fricke", "test", "s11", "--coords", "3,3,3"]);
    assert_eq!(cusp["verdict"], "member-slice");
    assert_eq!(cusp["cusp"], true);
    let wrong = json(&[
        "fricke",
        "test",
        "s04",
        "--exact",
        "--coords",
        "2,2,2,2,-3,2,7",
    ]);
    assert_eq!(wrong["verdict"], "nonmember-wrong-component");
    assert_eq!(wrong["exact_residual"], "0");
    let off = json(&[
        "fricke",
        "test",
        "s04",
        "--exact",
        "--coords",
        "2,2,2,2,-3,2,8",
    ]);
    assert_eq!(off["verdict"], "nonmember-off-variety");
}

#[test]
fn exact_flag_rejected_without_relation() {
    assert_eq!(
        run(&["fricke", "test", "s11", "--exact", "--coords", "3,3,3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn pants_counts() {
    assert_eq!(
        stdout(&["fricke", "pants", "--genus", "2", "--boundary", "1"]).trim(),
        "4"
    );
    assert_eq!(
        stdout(&["fricke", "pants", "--genus", "0", "--boundary", "4"]).trim(),
        "1"
    );
}

#[test]
fn fn2trace_lands_on_the_expected_level() {
    let v = json(&["fn2trace", "--l", "1.5", "--tau", "-0.7", "--b", "2"]);
    let (k, e) = (
        v["kappa"].as_f64().unwrap(),
        v["expected_kappa"].as_f64().unwrap(),
    );
    assert!((k - e).abs() < 1e-9);
    assert_eq!(v["s11"], "member-slice");
}

#[test]
fn cover_symbolic_checks_pass() {
    for name in ["c02s04", "c11s12", "deck", "embed"] {
        let v = json(&["cover", "map", name, "--symbolic-check"]);
        assert_eq!(v["pass"], true, "{name}");
    }
}

#[test]
fn verify_identities_passes() {
    let v = json(&["verify", "identities", "--trials", "1000", "--seed", "7"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_exact_oracle_passes() {
    let v = json(&["verify", "oracle", "--mode", "exact", "--trials", "50"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["mode"], "exact");
}

#[test]
fn every_float_suite_passes() {
    for suite in ["identities", "oracle", "fricke", "covers", "coxeter"] {
        assert_eq!(
            json(&["verify", suite, "--trials", "40"])["pass"],
            true,
            "{suite}"
        );
    }
}

#[test]
fn zero_tolerance_reports_failure() {
    let out = run(&["verify", "identities", "--trials", "50", "--tolerance", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_suite_and_unsupported_mode_exit_two() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "coxeter", "--mode", "exact"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--json", "verify", "fricke", "--trials", "30", "--seed", "11",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let other = run(&[
        "--json", "verify", "fricke", "--trials", "30", "--seed", "12",
    ]);
    assert_ne!(run(&args).stdout, other.stdout);
}

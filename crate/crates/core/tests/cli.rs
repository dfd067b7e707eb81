use e8jacobi::catalog::{build, FormName};
use e8jacobi::jacobi::JacobiQExpansion;
use std::process::{Command, Output};

fn e8jac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8jac")).args(args).env_remove("E8JAC_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_text_shows_sigma_notation() {
    let o = e8jac(&["expand", "--form", "phi_-4_2", "--order", "1", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("q^0: 2Σ_2 − Σ_4 − 240"), "{}", stdout(&o));
}

#[test]
fn expand_json_round_trips_and_is_stable() {
    let args = ["expand", "--form", "B2", "--order", "2", "--format", "json"];
    let (a, b) = (e8jac(&args), e8jac(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let parsed = JacobiQExpansion::from_json(&v["form"]).unwrap();
    assert_eq!(parsed, *build(FormName::B(2), 2).unwrap());
    assert_eq!(v["metadata"]["normalization"], "value at z=0 equals E6");
}

#[test]
fn tables() {
    let o = e8jac(&["rank", "--max", "14"]);
    assert_eq!(stdout(&o).trim(), "1 3 5 10 15 27 39 63 90 135 187 270 364 505");
    let o = e8jac(&["coset-minima", "--t", "5"]);
    assert_eq!(stdout(&o).trim(), "22");
    let o = e8jac(&["solve-cascade", "--t", "3", "--w0", "-8", "--norms", "0,2,4,6,8"]);
    assert_eq!(stdout(&o).trim(), "(1, -4, 6, -4, 1)");
    let o = e8jac(&["pullback-max"]);
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["Σ_36'", "12"]));
}

#[test]
fn exit_codes() {
    assert_eq!(e8jac(&["expand", "--form", "nope"]).status.code(), Some(2));
    assert_eq!(e8jac(&["bounds", "--max", "42"]).status.code(), Some(2));
    assert_eq!(e8jac(&["expand", "--form", "B6"]).status.code(), Some(2));
    assert_eq!(e8jac(&["orbits", "--norm", "8", "--budget", "10"]).status.code(), Some(2));
    assert_eq!(e8jac(&["verify", "--suite", "systems"]).status.code(), Some(0));
    assert_eq!(e8jac(&["bogus"]).status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_e8jac")).args(["orbits", "--norm", "8"]).env("E8JAC_BUDGET", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

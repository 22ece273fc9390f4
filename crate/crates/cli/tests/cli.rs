use std::process::{Command, Output};

use serde_json::Value;

fn pgtk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgtk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn tc_prints_order() {
    let o = pgtk(&["tc", "--presentation", "<a|a^5>"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "order 5");
    let o = pgtk(&["tc", "--presentation", "<a,b | a^2, b^2, (a*b)^3>", "--subgroup", "a"]);
    assert_eq!(stdout(&o).trim(), "index 3");
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(pgtk(&["verify", "--suite", "bogus"]).status.code(), Some(3));
    assert_eq!(pgtk(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(pgtk(&["group", "info", "--group", "nonsense(4)"]).status.code(), Some(3));
    assert_eq!(pgtk(&["tc", "--presentation", "<a | b>"]).status.code(), Some(3));
    assert_eq!(pgtk(&["verify", "--suite", "series-axioms", "--prime", "4"]).status.code(), Some(3));
    assert_eq!(pgtk(&["--help"]).status.code(), Some(0));
}

#[test]
fn group_info_json() {
    let o = pgtk(&["--output", "json", "group", "info", "--group", "heisenberg3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["order"], 27);
    assert_eq!(v["class"], 2);
    assert_eq!(v["exponent"], 3);
}

#[test]
fn tensor_square_json() {
    let o = pgtk(&["--output", "json", "tensor", "--group", "heisenberg3", "--self"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["order"], 729);
    let o = pgtk(&["--output", "json", "qtensor", "--group", "C3", "--self", "--q", "3"]);
    assert_eq!(json(&o)["order"], 9);
}

#[test]
fn order_cap_is_a_resource_exit() {
    let o = pgtk(&["--max-order", "16", "group", "info", "--group", "C32"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_are_deterministic() {
    let args = ["--output", "json", "verify", "--suite", "series-axioms", "--prime", "3", "--max-order", "27"];
    let (a, b) = (pgtk(&args), pgtk(&args));
    assert_eq!(a.stdout, b.stdout);
    // minimums of 3 substantive passes are met by the 8 groups of order dividing 27
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["schema"], "pgtk.suite-report/1");
    assert_eq!(v["corpus_size"], 8);
    assert!(v.get("wall_time_ms").is_none());
}

#[test]
fn verify_powerful_theorems_small() {
    let o = pgtk(&["verify", "--suite", "powerful-theorems", "--prime", "3", "--max-order", "81"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn unmet_minimums_exit_2() {
    let o = pgtk(&["verify", "--suite", "series-axioms", "--prime", "5", "--max-order", "5", "--min-substantive", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

use std::process::{Command, Output};
use std::str::FromStr;

use overq::enumerate::Family;
use overq::identities::families::gen_family;
use overq::Rational;
use serde_json::Value;

fn overq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overq"))
        .args(args)
        .env_remove("OVERQ_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn coeff_pairs(json: &str) -> Vec<(u64, String)> {
    let v: Value = serde_json::from_str(json).unwrap();
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap(), p[1].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&overq(&["verify", "--target", "theorem:B'", "--order", "300"])), 0);
    assert_eq!(code(&overq(&["verify", "--target", "theorem:bogus"])), 2);
    assert_eq!(code(&overq(&["verify", "--target", "nonsense"])), 2);
    assert_eq!(code(&overq(&["verify"])), 2);
    assert_eq!(code(&overq(&["verify", "--target", "theorem:C'", "--order", "202"])), 1);
    assert_eq!(code(&overq(&["verify", "--target", "theorem:C'-corrected", "--order", "202"])), 0);
}

#[test]
fn verify_json_names_the_mismatch() {
    let o = overq(&["verify", "--target", "theorem:C'", "--order", "202", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["reports"][0];
    assert_eq!(r["status"], "mismatch");
    assert_eq!(r["exponent"], 2);
    assert_eq!(r["lhs"], "0");
    assert_eq!(r["rhs"], "-1");
    assert_eq!(v["exit_status"], 1);
}

#[test]
fn verify_selected_groups() {
    for target in [
        "classical:jacobi",
        "bailey:BP-D",
        "bailey:BP-B",
        "lemma:BP-D",
        "lemma:BP-B",
        "chain:b",
        "chain:d:13",
    ] {
        let o = overq(&["verify", "--target", target, "--order", "120"]);
        assert_eq!(code(&o), 0, "{target}: {}", stdout(&o));
    }
}

#[test]
fn verify_all_reports_every_target_in_order() {
    let o = overq(&["verify", "--target", "all", "--order", "120", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids[0], "theorem:FG'-a");
    assert!(ids.contains(&"lemma:BP-B a=-1"), "{ids:?}");
    let failing: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] != "equal")
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["theorem:C'", "chain:c:18"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn coeffs_examples() {
    let o = overq(&["coeffs", "--series", "gen:A", "--order", "10"]);
    assert_eq!(code(&o), 0);
    assert!(coeff_pairs(&stdout(&o)).contains(&(3, "-2".into())));

    let o = overq(&["coeffs", "--series", "rhs:A''", "--order", "12", "--dilate", "2"]);
    let pairs = coeff_pairs(&stdout(&o));
    assert_eq!(pairs, [(2, "1".into()), (6, "2".into()), (12, "3".into())]);

    let o = overq(&["coeffs", "--series", "gen:F", "--order", "0"]);
    assert!(coeff_pairs(&stdout(&o)).is_empty());
}

#[test]
fn coeffs_json_round_trips_exactly() {
    let o = overq(&["coeffs", "--series", "gen:C", "--order", "60"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["series"], "gen:C");
    assert_eq!(v["order"], 60);
    let s = gen_family(Family::C, 60);
    let mut seen = 0;
    for (e, val) in coeff_pairs(&stdout(&o)) {
        assert_eq!(Rational::from_str(&val).unwrap(), *s.coeff(e as usize).unwrap());
        seen += 1;
    }
    let nonzero = s.coeffs().iter().filter(|c| **c != Rational::from_integer(0.into())).count();
    assert_eq!(seen, nonzero);
}

#[test]
fn coeffs_keep_rationals_exact() {
    let o = overq(&["coeffs", "--series", "poch:2,1,1,inf", "--order", "6", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("exponent,value\n"));
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 2));
    assert!(!text.contains('.'));
}

#[test]
fn coeffs_usage_errors() {
    assert_eq!(code(&overq(&["coeffs", "--series", "gen:Z"])), 2);
    assert_eq!(code(&overq(&["coeffs", "--series", "poch:1,0,1,inf"])), 2);
    assert_eq!(code(&overq(&["coeffs", "--series", "classical:jacobi"])), 2);
    assert_eq!(code(&overq(&["coeffs", "--series", "gen:A", "--dilate", "0"])), 2);
}

#[test]
fn order_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_overq"))
        .args(["coeffs", "--series", "gen:A"])
        .env("OVERQ_ORDER", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 7);
}

#[test]
fn enum_examples() {
    let o = overq(&["enum", "--family", "F", "--n", "4", "--counts"]);
    assert_eq!(stdout(&o), "(2, 2, 0)\n");

    let o = overq(&["enum", "--family", "D", "--n", "4", "--list"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).contains("(2~+1~, 1~)"));

    let o = overq(&["enum", "--family", "A", "--n", "1", "--list", "--unicode"]);
    assert_eq!(stdout(&o), "(1\u{0305}, ∅)\n");

    let o = overq(&["enum", "--family", "A''", "--n", "3", "--counts", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["signed"], 2);
}

#[test]
fn enum_usage_errors() {
    assert_eq!(code(&overq(&["enum", "--family", "F", "--n", "4"])), 2);
    assert_eq!(code(&overq(&["enum", "--family", "F", "--n", "0", "--list"])), 2);
    assert_eq!(code(&overq(&["enum", "--family", "Q", "--n", "3", "--list"])), 2);
    assert_eq!(code(&overq(&["enum", "--family", "F", "--n", "3", "--list", "--counts"])), 2);
}

#[test]
fn oracle_examples() {
    assert_eq!(code(&overq(&["oracle", "--family", "all", "--max-n", "20"])), 0);
    assert_eq!(code(&overq(&["oracle", "--family", "C", "--max-n", "25"])), 0);
    assert_eq!(code(&overq(&["oracle", "--family", "F", "--max-n", "1"])), 0);
    assert_eq!(code(&overq(&["oracle", "--family", "F", "--max-n", "0"])), 2);
}

#[test]
fn out_file_receives_the_payload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.csv");
    let o = overq(&[
        "coeffs",
        "--series",
        "gen:A",
        "--order",
        "10",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let written = std::fs::read_to_string(path).unwrap();
    assert!(written.contains("3,-2\n"));
}

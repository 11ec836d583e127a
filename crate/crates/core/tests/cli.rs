//! End-to-end tests against the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use num_bigint::BigInt;
use qgolden::cli::{Output as Res, OutputRecord};

fn qgolden(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgolden"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_qfib_5() {
    let text = qgolden(&["qfib", "5"]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(stdout(&text), golden("qfib_5.txt"));

    let json = qgolden(&["qfib", "5", "--json"]);
    assert_eq!(stdout(&json), golden("qfib_5.json"));
}

#[test]
fn golden_phi_reciprocal_5() {
    let text = qgolden(&["phi", "--reciprocal", "--order", "5"]);
    assert_eq!(stdout(&text), golden("phi_reciprocal_5.txt"));

    let json = qgolden(&["phi", "--reciprocal", "--order", "5", "--json"]);
    assert_eq!(stdout(&json), golden("phi_reciprocal_5.json"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        qgolden(&["verify", "theorem", "--max-n", "0"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        qgolden(&["verify", "sw", "--max-n", "4", "--max-m", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qgolden(&["qfib", "-1"]).status.code(), Some(2));
    assert_eq!(qgolden(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(qgolden(&["phi"]).status.code(), Some(2));
}

#[test]
fn verify_proposition_to_300() {
    let o = qgolden(&["verify", "proposition", "--max-n", "300"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verify: 301 checks, 301 passed, 0 failed\n"));
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["qfib", "200", "--json"],
        vec!["catalan", "60", "--json"],
        vec!["verify", "sw", "--max-n", "8", "--json"],
        vec!["verify", "corollary", "--max-n", "30", "--json"],
    ] {
        let out = stdout(&qgolden(&args));
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        let record: OutputRecord = serde_json::from_value(value.clone()).unwrap();
        assert_eq!(serde_json::to_value(&record).unwrap(), value, "{args:?}");
    }
}

#[test]
fn json_coefficients_exceed_u64() {
    let out = stdout(&qgolden(&["qfib", "200", "--closed-form", "--json"]));
    let record: OutputRecord = serde_json::from_str(&out).unwrap();
    let Res::Coefficients(cs) = record.result else {
        panic!("expected coefficient list");
    };
    let expected = qgolden::qfib::qfib_closed(200).into_coeffs();
    assert_eq!(cs, expected);
    assert!(cs.iter().any(|c| *c > BigInt::from(u64::MAX)));
}

//! Exit-code and argument-surface tests for the command-line interface.

use acmgate::{run, Cli};
use clap::Parser;

fn exit_code(args: &[&str]) -> i32 {
    let cli = Cli::try_parse_from(std::iter::once("acmgate").chain(args.iter().copied())).unwrap();
    run(cli)
}

fn testdata(name: &str) -> String {
    format!("{}/testdata/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn gate_is_zero_on_a_pinned_family() {
    assert_eq!(exit_code(&["gate", &testdata("degree55.json")]), 0);
    assert_eq!(exit_code(&["gate", &testdata("degree14.json")]), 0);
}

#[test]
fn gate_is_two_when_inconclusive() {
    assert_eq!(exit_code(&["gate", &testdata("symbolic_degree.json")]), 2);
    // an explicit ambient below every bound is also inconclusive
    assert_eq!(
        exit_code(&["gate", &testdata("degree55.json"), "--ambient-dim", "100"]),
        2
    );
}

#[test]
fn input_errors_are_one() {
    let dir = std::env::temp_dir();
    let bad = dir.join("acmgate-bad.json");
    std::fs::write(&bad, "{").unwrap();
    assert_eq!(exit_code(&["gate", bad.to_str().unwrap()]), 1);

    let empty = dir.join("acmgate-empty.json");
    std::fs::write(
        &empty,
        r#"{"e": 1, "pairs": [], "invariants": {"d": 8, "g": 5}}"#,
    )
    .unwrap();
    assert_eq!(exit_code(&["gate", empty.to_str().unwrap()]), 1);

    // a shape that cannot carry the claimed degree and genus
    let incompatible = dir.join("acmgate-incompatible.json");
    std::fs::write(
        &incompatible,
        r#"{"e": 6, "pairs": [{"twist": 5, "mult": 10}], "invariants": {"d": 55, "g": 166}}"#,
    )
    .unwrap();
    assert_eq!(exit_code(&["gate", incompatible.to_str().unwrap()]), 1);

    // unknown symbols in an assignment position
    let missing = dir.join("acmgate-missing.txt");
    std::fs::write(&missing, "not an assignment").unwrap();
    assert_eq!(
        exit_code(&["km", &testdata("canonical_genus5.json"), "--assign", missing.to_str().unwrap()]),
        1
    );
}

#[test]
fn classify_chi_link_and_reproduce_succeed() {
    assert_eq!(exit_code(&["classify", "--degree", "6"]), 0);
    assert_eq!(exit_code(&["classify", "--degree", "8", "--format", "csv"]), 0);
    assert_eq!(exit_code(&["chi", "--degree", "6", "--c1", "0", "--c2", "0"]), 0);
    assert_eq!(
        exit_code(&["link", &testdata("degree14.json"), "--ci", "2,2,5", "--cancel", "2-3:7:2"]),
        0
    );
    assert_eq!(exit_code(&["reproduce", "--section", "3"]), 0);
    assert_eq!(exit_code(&["reproduce", "--section", "5", "--format", "csv"]), 0);
    assert_eq!(exit_code(&["reproduce", "--section", "9"]), 1);
    assert_eq!(exit_code(&["classify", "--degree", "2"]), 1);
}

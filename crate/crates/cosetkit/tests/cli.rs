//! Black-box checks of the command-line interface: exit codes, report
//! shapes, determinism, and the global truncation cap.

use std::process::Command;

use serde_json::Value;

/// Run the binary with the given arguments and environment overrides,
/// isolated from any ambient truncation cap.
fn run(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut command = Command::new(env!("CARGO_BIN_EXE_cosetkit"));
    command.args(args).env_remove("COSETKIT_MAX_ORDER");
    for (key, value) in envs {
        command.env(key, value);
    }
    let output = command.output().expect("binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).expect("utf8 stdout"),
        String::from_utf8(output.stderr).expect("utf8 stderr"),
    )
}

fn parse(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is a JSON document")
}

#[test]
fn classify_reports_are_deterministic_json() {
    let (code, first, _) = run(&["classify", "--n", "2"], &[]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["classify", "--n", "2"], &[]);
    assert_eq!(first, second, "byte-for-byte determinism");

    let document = parse(&first);
    assert_eq!(document["n"], 2);
    assert_eq!(document["count"], 8);
    let rows = document["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 8);
    let vacuum = &rows[0];
    assert_eq!(vacuum["label"]["delta"], "000");
    assert_eq!(vacuum["label"]["k"], 0);
    assert_eq!(vacuum["lowest_weight"], "0");
    // Rationals travel as strings.
    assert!(rows
        .iter()
        .any(|row| row["lowest_weight"] == "3/5" && row["lowest_space_dim"] == 2));
}

#[test]
fn classify_csv_has_one_line_per_label() {
    let (code, stdout, _) = run(&["classify", "--n", "2", "--format", "csv"], &[]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.trim_end().lines().collect();
    assert_eq!(lines.len(), 9, "header plus eight rows");
    assert!(lines[0].starts_with("n,delta,k,type,lowest_weight"));
    assert!(lines[1].starts_with("2,000,0,I,0,1,0,"));
    // Eigenvalue tables are flattened into a quoted pair:value cell.
    assert!(lines[1].contains("\"01:0;02:0;12:0\""));
}

#[test]
fn classify_guards_map_to_usage_exit() {
    let (code, stdout, stderr) = run(&["classify", "--n", "13"], &[]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("usage error"));
    let (code, _, _) = run(&["classify", "--n", "9", "--oracle"], &[]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["classify", "--n", "8", "--oracle"], &[]);
    assert_eq!(code, 0);
}

#[test]
fn fusion_table_is_frozen_at_the_first_model() {
    let (code, stdout, _) = run(&["fusion", "--m", "1", "--all"], &[]);
    assert_eq!(code, 0);
    let document = parse(&stdout);
    assert_eq!(
        document["labels"],
        serde_json::json!(["(1,1)", "(1,2)", "(1,3)"])
    );
    let table = &document["table"];
    assert_eq!(table["(1,2)*(1,2)"], serde_json::json!(["(1,1)", "(1,3)"]));
    assert_eq!(table["(1,2)*(1,3)"], serde_json::json!(["(1,2)"]));
    assert_eq!(table["(1,3)*(1,3)"], serde_json::json!(["(1,1)"]));
    assert_eq!(table["(1,1)*(1,1)"], serde_json::json!(["(1,1)"]));
}

#[test]
fn fusion_triple_reports_single_dimensions() {
    let (code, stdout, _) = run(
        &["fusion", "--m", "2", "--triple", "2,2", "2,1", "1,2"],
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["dimension"], 1);

    let (code, stdout, _) = run(
        &["fusion", "--m", "2", "--triple", "2,2", "2,2", "2,1"],
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["dimension"], 0);

    let (code, _, _) = run(&["fusion", "--m", "2", "--triple", "0,1", "1,1", "1,1"], &[]);
    assert_eq!(code, 2, "out-of-table label is a usage error");
}

#[test]
fn tn_reports_blocks_and_guards_the_ideal_suite() {
    let (code, stdout, _) = run(&["tn", "--N", "3"], &[]);
    assert_eq!(code, 0);
    let document = parse(&stdout);
    assert_eq!(document["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(document["total_dim"], 5);

    let (code, stdout, _) = run(&["tn", "--N", "4", "--check-ideal"], &[]);
    assert_eq!(code, 0);
    let document = parse(&stdout);
    assert_eq!(document["ideal_checks"]["ideal_dimension"], 10);

    let (code, _, _) = run(&["tn", "--N", "6", "--check-ideal"], &[]);
    assert_eq!(code, 2, "ideal suite is capped at five letters");
    let (code, _, _) = run(&["tn", "--N", "8"], &[]);
    assert_eq!(code, 2, "semisimple build is capped at seven letters");
}

#[test]
fn griess_reports_invariants_and_guards_size() {
    let (code, stdout, _) = run(&["griess", "--n", "2", "--check"], &[]);
    assert_eq!(code, 0);
    let document = parse(&stdout);
    assert_eq!(document["central_charge"], "6/5");
    assert_eq!(document["gram_positive_definite"], true);
    assert_eq!(document["conformal_triples_ok"], true);

    let (code, stdout, _) = run(&["griess", "--n", "3"], &[]);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["central_charge"], "2");

    let (code, _, _) = run(&["griess", "--n", "9", "--check"], &[]);
    assert_eq!(code, 2);
}

#[test]
fn verify_characters_sweeps_and_caps_order() {
    let (code, stdout, _) = run(&["verify-characters", "--copies", "2", "--order", "6"], &[]);
    assert_eq!(code, 0);
    let document = parse(&stdout);
    assert_eq!(document["passed"], true);
    assert_eq!(document["cases"].as_array().unwrap().len(), 4, "all shifts");

    let (code, stdout, _) = run(
        &["verify-characters", "--copies", "2", "--delta", "10", "--order", "6"],
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["cases"].as_array().unwrap().len(), 1);

    let (code, _, _) = run(
        &["verify-characters", "--copies", "2", "--delta", "2", "--order", "6"],
        &[],
    );
    assert_eq!(code, 2, "shift bits must be 0/1 of the right length");

    let (code, _, _) = run(&["verify-characters", "--copies", "2", "--order", "41"], &[]);
    assert_eq!(code, 2, "default cap is 40");

    let (code, _, _) = run(
        &["verify-characters", "--copies", "2", "--order", "6"],
        &[("COSETKIT_MAX_ORDER", "5")],
    );
    assert_eq!(code, 2, "environment cap lowers the bound");

    let (code, _, _) = run(
        &["verify-characters", "--copies", "2", "--order", "41"],
        &[("COSETKIT_MAX_ORDER", "44")],
    );
    assert_eq!(code, 0, "environment cap raises the bound");

    let (code, _, _) = run(
        &["verify-characters", "--copies", "2", "--order", "6"],
        &[("COSETKIT_MAX_ORDER", "not-a-number")],
    );
    assert_eq!(code, 2, "malformed cap is a usage error");
}

#[test]
fn unknown_commands_and_flags_exit_with_usage() {
    let (code, _, _) = run(&["no-such-command"], &[]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["classify"], &[]);
    assert_eq!(code, 2, "missing required flag");
}

#[test]
fn verify_all_runs_every_stage() {
    let (code, stdout, _) = run(&["verify-all"], &[]);
    assert_eq!(code, 0);
    let document = parse(&stdout);
    assert_eq!(document["passed"], true);
    let stages = document["stages"].as_array().expect("stages array");
    let names: Vec<&str> = stages
        .iter()
        .map(|s| s["stage"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["fusion", "tn", "griess", "classify", "characters"],
        "stage order"
    );
    assert!(stages.iter().all(|s| s["passed"] == true));
}

use std::path::Path;
use std::process::{Command, Output};

fn plactic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plactic"))
        .args(args)
        .env_remove("PLACTIC_STATE_LIMIT")
        .env_remove("PLACTIC_CLASS_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = plactic(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn tableau_of_the_worked_example() {
    let text = ok(&["tableau", "--rank", "6", "6345511235"]);
    assert_eq!(text, "6\n3 4 5 5\n1 1 2 3 5\n6314152535\n");
}

#[test]
fn tableau_edge_cases() {
    assert_eq!(ok(&["tableau", "--rank", "2", ""]), "");
    let out = plactic(&["tableau", "--rank", "2", "31"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside the alphabet"));
    assert_eq!(plactic(&["tableau", "--rank", "2", "1x"]).status.code(), Some(2));
    assert_eq!(plactic(&["tableau", "--rank", "0", "1"]).status.code(), Some(2));
}

#[test]
fn normalize_both_alphabets() {
    assert_eq!(ok(&["normalize", "--rank", "2", "121"]), "c_21 c_1\n211\n");
    assert_eq!(ok(&["normalize", "--rank", "2", "c:21,1"]), "c_21 c_1\n211\n");
    assert_eq!(ok(&["normalize", "--rank", "2", "c_1 c_21"]), "c_21 c_1\n211\n");
    assert_eq!(ok(&["normalize", "--rank", "1", ""]), "ε\nε\n");
    assert_eq!(plactic(&["normalize", "--rank", "2", "c:31"]).status.code(), Some(2));
}

#[test]
fn multiply_examples() {
    assert_eq!(ok(&["multiply", "--rank", "2", "--side", "right", "211", "1"]), "2111\n");
    assert_eq!(ok(&["multiply", "--rank", "2", "--side", "left", "11", "2"]), "211\n");
    assert_eq!(ok(&["multiply", "--rank", "2", "--side", "right", "", "2"]), "2\n");
    assert_eq!(ok(&["multiply", "--rank", "3", "--side", "left", "--check", "3211", "2"]), "32121\n");
    assert_eq!(ok(&["multiply", "--rank", "2", "--check", "1", "21"]), "211\n");
    assert_eq!(ok(&["multiply", "--rank", "2", "--side", "left", "--check", "1", "21"]), "211\n");
}

#[test]
fn multiply_rejects_words_outside_l() {
    let out = plactic(&["multiply", "--rank", "2", "121", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a normal form"));
}

#[test]
fn rules_and_gsb() {
    let json: serde_json::Value = serde_json::from_str(&ok(&["rules", "--rank", "2", "--format", "json"])).unwrap();
    assert_eq!(json["rules"].as_array().unwrap().len(), 3);
    assert_eq!(ok(&["rules", "--rank", "2"]).lines().count(), 3);
    let gsb = ok(&["gsb", "--rank", "1"]);
    assert_eq!(gsb.lines().count(), 1);
    assert!(gsb.starts_with("order: deglex"));
    let gsb_json: serde_json::Value = serde_json::from_str(&ok(&["gsb", "--rank", "2", "--format", "json"])).unwrap();
    assert_eq!(gsb_json["elements"].as_array().unwrap().len(), 3);
}

#[test]
fn machines_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    ok(&["machines", "--rank", "2", "--gamma", "1", "--format", "dot", "--out", out]);
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/rank2_gamma1");
    let mut names: Vec<_> = std::fs::read_dir(&golden).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    let mut produced: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    produced.sort();
    assert_eq!(names, produced);
    assert_eq!(names.iter().filter(|n| n.to_string_lossy().contains("_delta_")).count(), 4);
    for name in names {
        let want = std::fs::read_to_string(golden.join(&name)).unwrap();
        let got = std::fs::read_to_string(dir.path().join(&name)).unwrap();
        assert_eq!(got, want, "{name:?}");
    }
}

#[test]
fn machines_json_and_empty_generator() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    ok(&["machines", "--rank", "2", "--gamma", "e", "--format", "json", "--out", out]);
    let text = std::fs::read_to_string(dir.path().join("right_e_delta_l.json")).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["kind"], "pair-automaton");
    assert_eq!(json["direction"], "left");
    assert!(!dir.path().join("right_e_columns.json").exists());
}

#[test]
fn state_limit_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_plactic"))
        .args(["machines", "--rank", "2", "--gamma", "1"])
        .env("PLACTIC_STATE_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn verify_small_ranks() {
    let text = ok(&["verify", "--rank", "1", "all"]);
    assert_eq!(text.matches(": pass").count(), 4);
    let text = ok(&["verify", "--rank", "3", "rewriting"]);
    assert!(text.contains("critical pairs converge: 42 checked"));
    let text = ok(&["verify", "--rank", "2", "--max-len", "6", "all"]);
    assert!(!text.contains("FAIL"));
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "verify",
        "--rank",
        "2",
        "--max-len",
        "3",
        "--sequential",
        "core",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json[0]["suite"], "core");
}

#[test]
fn output_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rules.txt");
    ok(&["rules", "--rank", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 3);
}

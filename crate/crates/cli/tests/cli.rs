use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn symperiod() -> Command {
    Command::cargo_bin("symperiod").unwrap()
}

fn stdout_of(args: &[&str]) -> (String, i32) {
    let out = symperiod().args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against the checked-in file; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn tables_match_golden_files() {
    for id in ["1", "2", "3"] {
        for (format, ext) in [("text", "txt"), ("csv", "csv"), ("json", "json")] {
            let (out, code) = stdout_of(&["tables", id, "--format", format]);
            assert_eq!(code, 0);
            assert_golden(&format!("table{id}.{ext}"), &out);
        }
    }
}

#[test]
fn tables_are_deterministic() {
    assert_eq!(stdout_of(&["tables", "2"]), stdout_of(&["tables", "2"]));
}

#[test]
fn known_table_rows() {
    let (csv, _) = stdout_of(&["tables", "1", "--format", "csv"]);
    assert!(csv.lines().any(|l| l == "E8,3 15 23 27 35 39 47 59"));
    let (t3, _) = stdout_of(&["tables", "3", "--format", "json"]);
    let rows: Value = serde_json::from_str(&t3).unwrap();
    let g2 = rows.as_array().unwrap().iter().find(|r| r["instance"] == "G").unwrap();
    assert_eq!(g2["leading_terms"], "t^4 + t^8");
    assert_eq!(g2["obstruction"], "b_8>b_12");
    let (t2, _) = stdout_of(&["tables", "2", "--format", "json"]);
    let rows: Value = serde_json::from_str(&t2).unwrap();
    let quat = rows.as_array().unwrap().iter().find(|r| r["instance"] == "GrH(2,2)").unwrap();
    assert!(quat["leading_terms"].as_str().unwrap().starts_with("t^4 + 2t^8"));
    assert_eq!(quat["obstruction"], "b_4<b_8");
}

#[test]
fn check_exit_codes() {
    symperiod().args(["check", "group:E8 x HP^3", "--c", "15"]).assert().code(0);
    let (out, code) = stdout_of(&["check", "group:E8 x HP^3", "--c", "16"]);
    assert_eq!(code, 1);
    assert!(out.contains("obstruction: b_11<b_15"), "{out}");
    let (out, code) = stdout_of(&["check", "CaP2 # CaP2", "--c", "10"]);
    assert_eq!(code, 1);
    assert!(out.contains("obstruction: b_8>0"), "{out}");
    // The witness data leave b_10 through b_16 open here.
    symperiod().args(["check", "GrR(3,9)", "--c", "16"]).assert().code(2);
    symperiod().args(["check", "NotASpace(3)", "--c", "16"]).assert().code(64);
    symperiod().args(["check", "CP^2 # HP^2", "--c", "16"]).assert().code(64);
    symperiod().args(["check", "CP^8", "--c", "4"]).assert().code(64);
    symperiod().args(["check", "CP^8"]).assert().code(64);
}

#[test]
fn classify_summary_lists_only_expected_families() {
    let (out, code) = stdout_of(&["classify", "--c", "16", "--max-dim", "64"]);
    assert_eq!(code, 0);
    let summary = out.lines().last().unwrap();
    assert_eq!(summary, "periodic families: CP^n, GrR(2,q), GrR(3,q), HP^n, S^n");
    assert!(out.lines().any(|l| l.starts_with("GrR(3,8)") && l.ends_with("b_4<b_8")));
    assert!(out.lines().any(|l| l.starts_with("AII(4)") && l.ends_with("b_5>0")));
    symperiod().args(["classify", "--c", "12"]).assert().code(64);
}

#[test]
fn codes_commands() {
    assert_eq!(stdout_of(&["codes", "griesmer", "--r", "4", "--w", "8"]), ("15\n".into(), 0));
    let (out, code) = stdout_of(&["codes", "alg-lemma", "--n-max", "256"]);
    assert_eq!((out.lines().next().unwrap(), code), ("0 violations / 32640 cases", 0));
    let (out, code) = stdout_of(&["codes", "verify", "--r-max", "3", "--m-max", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("bound holds; equality witnesses: "));
    assert!(out.lines().next().unwrap().contains("simplex [7,3,4]"));
    symperiod().args(["codes", "verify", "--r-max", "9"]).assert().code(64);
}

#[test]
fn involution_trials_and_matrix_files() {
    let (out, code) = stdout_of(&["codes", "tau", "--r", "13", "--trials", "100", "--seed", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failures"));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, "11000000\n00111100\n00001111\n").unwrap();
    let (out, code) = stdout_of(&["codes", "sigma", "--matrix", good.to_str().unwrap(), "--n", "16"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("even weight: true"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0102\n").unwrap();
    symperiod().args(["codes", "sigma", "--matrix", bad.to_str().unwrap()]).assert().code(64);
    let missing = dir.path().join("missing.txt");
    symperiod().args(["codes", "sigma", "--matrix", missing.to_str().unwrap()]).assert().code(66);
}

#[test]
fn thresholds_report() {
    let (out, code) = stdout_of(&["thresholds", "--n", "1024", "--c", "16", "--rank", "27"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("theorem_a") && l.contains("27.000") && l.ends_with("yes")));
    let (out, _) = stdout_of(&["thresholds", "--n", "16", "--c", "16", "--rank", "8"]);
    assert!(out.lines().any(|l| l.starts_with("theorem_a") && l.contains("15.000") && l.ends_with("no")));
    assert!(out.contains("vacuous"));
    let (out, _) = stdout_of(&["thresholds", "--n", "17", "--c", "2", "--rank", "9", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reduced_rank"], 8);
    assert_eq!(v["delta"], 1);
    symperiod().args(["thresholds", "--n", "3", "--c", "4", "--rank", "1"]).assert().code(64);
}

#[test]
fn json_output_round_trips() {
    let commands: &[&[&str]] = &[
        &["tables", "1", "--format", "json"],
        &["tables", "3", "--format", "json"],
        &["check", "HP^5 x S^3", "--c", "16", "--format", "json"],
        &["check", "CaP2 # HP^4", "--c", "10", "--format", "json"],
        &["classify", "--max-dim", "32", "--format", "json"],
        &["codes", "griesmer", "--r", "5", "--w", "12", "--format", "json"],
        &["codes", "verify", "--r-max", "2", "--m-max", "5", "--format", "json"],
        &["codes", "sigma", "--trials", "5", "--format", "json"],
        &["thresholds", "--n", "6001", "--c", "16", "--rank", "1001", "--format", "json"],
    ];
    for args in commands {
        let (out, _) = stdout_of(args);
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(again, out, "{args:?}");
    }
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn totalbetti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totalbetti")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("totalbetti-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn every_suite_instance_checks_cleanly() {
    for entry in std::fs::read_dir(instance("")).unwrap() {
        let path = entry.unwrap().path();
        let out = totalbetti(&["check", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", path.display(), stdout(&out));
        assert!(!stdout(&out).contains("[fails]"));
    }
}

#[test]
fn betti_prints_the_table() {
    let out = totalbetti(&["betti", instance("plane.tb").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("total: 1 3 2"), "{text}");
    assert!(text.contains("total: 1 2 1"), "{text}");
    let machine = totalbetti(&["betti", "--format", "machine", instance("plane.tb").to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_slice(&machine.stdout).unwrap();
    assert_eq!(doc["modules"][1]["betti"]["totals"], serde_json::json!([1, 3, 2]));
    assert_eq!(doc["modules"][1]["projective_dimension"], 2);
}

#[test]
fn resolve_reports_cap_overflow_with_exit_one() {
    let path = instance("residue_field_d3.tb");
    let out = totalbetti(&["resolve", "--cap", "1", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("exceeds cap 1"));
    let ok = totalbetti(&["resolve", path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let path = scratch("bad.tb", "ring R = F(7)[x]\nmodule M = coker [[x +]]\n");
    let out = totalbetti(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2:23: syntax error"), "{err}");
}

#[test]
fn input_errors_exit_two() {
    let missing = totalbetti(&["check", "/definitely/not/here.tb"]);
    assert_eq!(missing.status.code(), Some(2));
    let path = scratch("semantic.tb", "ring R = F(9)[x]\nmodule M = coker [[x]]\n");
    let out = totalbetti(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("9 is not a prime"));
    let flag = totalbetti(&["check", "--format", "xml", instance("node.tb").to_str().unwrap()]);
    assert_eq!(flag.status.code(), Some(2));
}

#[test]
fn psi2_in_characteristic_two_is_inapplicable() {
    let out = totalbetti(&["check", "--format", "machine", instance("char_two.tb").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let psi2 = report["checks"].as_array().unwrap().iter().find(|c| c["check"] == "psi2").unwrap();
    assert_eq!(psi2["verdict"], "inapplicable");
}

#[test]
fn machine_reports_are_stable_and_honor_overrides() {
    let path = instance("frobenius_p3.tb");
    let args = ["dutta", "--format", "machine", "--emax", "1", "--oracle", path.to_str().unwrap()];
    let first = totalbetti(&args);
    let second = totalbetti(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    for rec in report["checks"].as_array().unwrap() {
        assert_eq!(rec["check"], "dutta");
        assert_eq!(rec["data"]["inputs"]["emax"], 1);
        assert_eq!(rec["data"]["identity"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn library_entry_point_matches_binary() {
    let path = instance("node.tb");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = totalbetti::harness::cli::main_with(["totalbetti", "check", path.to_str().unwrap()], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, totalbetti(&["check", path.to_str().unwrap()]).stdout);
}

//! End-to-end behaviour of the `qubench` binary: outputs and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qubench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qubench"))
        .args(args)
        .env_remove("QUBENCH_CAPS")
        .output()
        .expect("binary runs")
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn reports(o: &Output) -> Vec<Value> {
    serde_json::from_str::<Value>(&stdout(o)).unwrap().as_array().unwrap().clone()
}

const SIERPINSKI: &str = "points 2\nrelation\n1 1\n2 2\n1 2\n";
const CHAIN: &str = "points 3\nrelation\n1 2\n2 3\n1 3\n";

#[test]
fn validate_exit_codes() {
    let ok = write("ok.qu", SIERPINSKI);
    let out = qubench(&["validate", ok.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["points"], 2);

    let gap = write("gap.qu", "points 3\nrelation\n1 2\n2 3\n");
    let out = qubench(&["--format", "table", "validate", gap.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("non-transitive"));

    let strict = write("strict.qu", "points 2\nrelation\n1 2\n");
    assert_eq!(qubench(&["validate", strict.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(qubench(&["validate", "--strict", strict.to_str().unwrap()]).status.code(), Some(1));

    let bad = write("bad.qu", "points 2\nrelation\n1 2\n2 x\n");
    let out = qubench(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
}

#[test]
fn lift_and_stability_print_space_files() {
    let f = write("lift.qu", SIERPINSKI);
    let out = qubench(&["lift", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("points 3\nlabels {1} {2} {1,2}\n"), "{text}");

    let out = qubench(&["stability", "build", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("points 3\nlabels F{1} F{2} F{1,2}\n"));
}

#[test]
fn check_on_a_space_file() {
    let f = write("check.qu", CHAIN);
    let out = qubench(&["check", "finite.two_envelope", "--space", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["verdict"], "pass");
    assert_eq!(qubench(&["check", "finite.nothing"]).status.code(), Some(2));
}

#[test]
fn bei_names_the_violating_point() {
    let chain = write("bei-chain.qu", CHAIN);
    let out = qubench(&["example", "bei", chain.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = reports(&out);
    assert_eq!(r[0]["verdict"], "fail");
    assert_eq!(r[0]["witnesses"][0]["witness"]["point"], 2);

    let fork = write("bei-fork.qu", "points 4\nrelation\n1 2\n1 3\n");
    let out = qubench(&["example", "bei", fork.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn contra_refuses_small_bounds() {
    let out = qubench(&["example", "contra", "--bound-s", "2", "--bound-n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bounds too small"));
}

#[test]
fn usage_and_config_errors_exit_two() {
    assert_eq!(qubench(&["suite", "everything"]).status.code(), Some(2));
    assert_eq!(qubench(&["--caps", "lift=zero", "suite", "metric"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_qubench"))
        .args(["suite", "metric"])
        .env("QUBENCH_CAPS", "depth=3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed caps"));
    assert_eq!(qubench(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qubench(&["gen", "--points", "0"]).status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_valid() {
    let a = qubench(&["gen", "--points", "4", "--relations", "2", "--seed", "7"]);
    let b = qubench(&["gen", "--points", "4", "--relations", "2", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let f = write("gen.qu", &stdout(&a));
    assert_eq!(qubench(&["validate", "--strict", f.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn qpm_commands() {
    let a = write("a.pts", "0\n1/2\n");
    let b = write("b.pts", "1/2\n");
    let out = qubench(&["qpm", "hausdorff", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hausdorff"], "1/2");
    assert_eq!(v["hausdorff_reversed"], "1");

    let out = qubench(&["qpm", "hausdorff", a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(reports(&out).iter().all(|r| r["verdict"] == "pass"));

    let out = qubench(&["qpm", "cover-fact", "--seed", "3", "--count", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(reports(&out)[0]["bounds"]["cases"], 50);

    let bad = write("bad.pts", "1\n1/0\n");
    let out = qubench(&["qpm", "hausdorff", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn table_format_and_listing() {
    let out = qubench(&["--format", "table", "qpm", "sorgenfrey-suite"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("metric.sorgenfrey_table"));
    assert!(stdout(&out).ends_with("0 fail, 0 skipped\n"));
    let out = qubench(&["list"]);
    assert!(stdout(&out).lines().any(|l| l == "finite.lifted_axioms"));
}

#[test]
fn symbolic_suite_carries_contra_bounds() {
    let out = qubench(&["suite", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let r = reports(&out);
    let contra = r.iter().find(|r| r["check"] == "symbolic.contra.doubly_stable").unwrap();
    assert_eq!(contra["bounds"]["bound_s"], 12);
    assert_eq!(contra["bounds"]["bound_n"], 200);
}

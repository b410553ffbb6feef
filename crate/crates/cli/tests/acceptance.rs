//! The eight acceptance criteria, each printed as a PASS or FAIL line with
//! its measured time against its limit. Runs without the libtest harness so
//! the lines are never captured.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use qubench::workbench::{run_check, CheckReport, SuiteConfig, Verdict};

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Option<Duration>,
}

struct Measured {
    ok: bool,
    detail: String,
    elapsed: Duration,
}

fn run(c: &Criterion, body: impl FnOnce() -> (bool, String)) -> bool {
    let start = Instant::now();
    let (ok, detail) = body();
    let r = Measured {
        ok,
        detail,
        elapsed: start.elapsed(),
    };
    let in_time = c.limit.is_none_or(|l| r.elapsed < l);
    let limit = c.limit.map_or(String::new(), |l| format!(" < {} s", l.as_secs()));
    let verdict = if r.ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "{verdict} criterion {}: {} ({}; {:.2} s{limit})",
        c.number,
        c.name,
        r.detail,
        r.elapsed.as_secs_f64()
    );
    r.ok && in_time
}

fn all_pass(reports: &[CheckReport]) -> (bool, String) {
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| r.verdict != Verdict::Pass)
        .map(|r| r.check.as_str())
        .collect();
    let cases: u64 = reports.iter().filter_map(|r| r.bounds["cases"].as_u64()).sum();
    if failing.is_empty() {
        (true, format!("{} reports, {cases} cases", reports.len()))
    } else {
        (false, format!("not passing: {}", failing.join(", ")))
    }
}

fn checks(ids: &[&str]) -> Vec<CheckReport> {
    let cfg = SuiteConfig {
        seed: 1,
        ..Default::default()
    };
    ids.iter().flat_map(|id| run_check(id, &cfg).expect("known id")).collect()
}

fn qubench(args: &[&str]) -> (Option<i32>, Vec<Value>) {
    let out = Command::new(env!("CARGO_BIN_EXE_qubench"))
        .args(args)
        .env_remove("QUBENCH_CAPS")
        .output()
        .expect("binary runs");
    let value: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), value.as_array().cloned().unwrap_or_default())
}

fn main() {
    let mut ok = true;

    ok &= run(
        &Criterion { number: 1, name: "lifted base axioms on 200 random spaces", limit: Some(Duration::from_secs(60)) },
        || {
            let r = checks(&["finite.lifted_axioms"]);
            let spaces = r[0].bounds["spaces_checked"].as_u64().unwrap_or(0);
            let (pass, detail) = all_pass(&r);
            (pass && spaces == 200, format!("{spaces} spaces, {detail}"))
        },
    );

    ok &= run(
        &Criterion { number: 2, name: "filter and stability-space identities on the reference corpus", limit: None },
        || {
            all_pass(&checks(&[
                "finite.subspace_stability",
                "finite.two_envelope",
                "finite.envelope_identity",
                "finite.open_base",
                "finite.ud_equivalence",
                "finite.hyper_embedding",
                "finite.conjugation",
                "finite.oplus_sandwich",
            ]))
        },
    );

    ok &= run(
        &Criterion { number: 3, name: "stability space bicomplete, quotient and bicompletion", limit: None },
        || {
            all_pass(&checks(&[
                "finite.stability_bicomplete",
                "finite.quotient_completion",
                "finite.bicompletion_isomorphism",
            ]))
        },
    );

    ok &= run(
        &Criterion { number: 4, name: "counterexample on the natural numbers at bounds 12/200", limit: Some(Duration::from_secs(30)) },
        || {
            let (code, reports) = qubench(&["example", "contra", "--bound-s", "12", "--bound-n", "200"]);
            let required = [
                "symbolic.contra.doubly_stable",
                "symbolic.contra.double_cluster_set",
                "symbolic.contra.cluster_condition_fails",
                "symbolic.contra.residue_is_cofinite",
                "symbolic.contra.stable_kernels_nonempty",
                "symbolic.contra.oracle",
            ];
            let passing = |id: &str| reports.iter().any(|r| r["check"] == id && r["verdict"] == "pass");
            let missing: Vec<&str> = required.iter().copied().filter(|id| !passing(id)).collect();
            let all = reports.iter().all(|r| r["verdict"] == "pass");
            (
                code == Some(0) && all && missing.is_empty(),
                format!("exit {code:?}, {} reports, missing {missing:?}", reports.len()),
            )
        },
    );

    ok &= run(
        &Criterion { number: 5, name: "one-sided isolation catalogue and named violators", limit: None },
        || {
            let r = checks(&["symbolic.bei"]);
            let spaces: u64 = r.iter().filter_map(|r| r.bounds["spaces"].as_u64()).sum();
            let (pass, detail) = all_pass(&r);
            (pass && r.len() == 2, format!("{spaces} spaces, {detail}"))
        },
    );

    ok &= run(
        &Criterion { number: 6, name: "Sorgenfrey suite", limit: Some(Duration::from_secs(120)) },
        || {
            let r = checks(&[
                "metric.sorgenfrey_table",
                "metric.symmetrization",
                "metric.hausdorff_triangle",
                "metric.cover_fact",
                "metric.fn_sets",
            ]);
            let cases = |id: &str| r.iter().find(|x| x.check == id).and_then(|x| x.bounds["cases"].as_u64());
            let sized = cases("metric.sorgenfrey_table") == Some(50)
                && cases("metric.symmetrization") == Some(1000)
                && cases("metric.cover_fact") == Some(500);
            let (pass, detail) = all_pass(&r);
            (pass && sized, detail)
        },
    );

    ok &= run(
        &Criterion { number: 7, name: "net transfer over all subsets of an 8-point grid", limit: None },
        || {
            let r = checks(&["metric.net_transfer"]);
            let grid = r[0].bounds["grid"].as_str().unwrap_or("").matches(',').count() + 1;
            let (pass, detail) = all_pass(&r);
            (pass && grid == 8, format!("{grid}-point grid, {detail}"))
        },
    );

    ok &= run(
        &Criterion { number: 8, name: "two runs of suite all --seed 1 agree", limit: None },
        || {
            let strip = |mut rs: Vec<Value>| {
                for r in &mut rs {
                    r["runtime_ms"] = Value::from(0);
                }
                rs
            };
            let (code_a, a) = qubench(&["suite", "all", "--seed", "1"]);
            let (code_b, b) = qubench(&["suite", "all", "--seed", "1"]);
            let same = !a.is_empty() && strip(a.clone()) == strip(b);
            (
                same && code_a == Some(0) && code_b == Some(0),
                format!("{} reports, exit {code_a:?}/{code_b:?}", a.len()),
            )
        },
    );

    if !ok {
        eprintln!("an acceptance criterion failed; see the lines above");
        std::process::exit(1);
    }
}

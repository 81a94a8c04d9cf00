//! End-to-end tests of the `psi-certify` binary: printed digits, exit
//! codes, the constants table, and report determinism.

use std::path::PathBuf;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_psi-certify");

fn run(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(BIN);
    cmd.args(args);
    // the parent test runner's environment must not leak into the assertions
    cmd.env_remove("PSI_CERTIFY_THREADS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary should spawn");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

fn tmp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("psi-certify-test-{}-{name}", std::process::id()))
}

#[test]
fn eval_prints_the_pinned_reference_digits() {
    let (code, out, _) = run(&["eval", "psi", "--x", "1"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out, "-0.57721566490153286\n");

    let (code, out, _) = run(&["eval", "omega", "--n", "0"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\n");

    let (code, out, _) = run(&["eval", "loggamma", "--x", "2"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out, "0\n");
}

#[test]
fn eval_values_match_the_library() {
    let (code, out, _) = run(&["eval", "psi1", "--x", "1"], &[]);
    assert_eq!(code, 0);
    let v: f64 = out.trim().parse().unwrap();
    assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13, "{v}");

    let (code, out, _) = run(&["eval", "omega", "--n", "3"], &[]);
    assert_eq!(code, 0);
    let v: f64 = out.trim().parse().unwrap();
    assert!((v - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-13, "{v}");

    let (code, out, _) = run(&["eval", "sth_ratio", "--a", "2", "--x", "0.25"], &[]);
    assert_eq!(code, 0);
    assert!(out.trim().parse::<f64>().unwrap() > 0.0);
}

#[test]
fn eval_rejects_missing_and_extraneous_arguments() {
    for args in [
        &["eval", "psi"][..],                       // missing --x
        &["eval", "psi", "--x", "1", "--n", "3"],   // stray --n
        &["eval", "omega", "--x", "1"],             // wrong parameter
        &["eval", "sth_ratio", "--a", "2"],         // missing --x
        &["eval", "nonsense", "--x", "1"],          // unknown function
    ] {
        let (code, _, err) = run(args, &[]);
        assert_eq!(code, 2, "args {args:?} should be a usage error: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn eval_domain_error_names_the_precondition() {
    let (code, out, err) = run(&["eval", "psi", "--x", "-1"], &[]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("PoleOrNonpositive"), "stderr: {err}");
}

#[test]
fn constants_table_is_fully_in_tolerance() {
    let (code, out, _) = run(&["constants"], &[]);
    assert_eq!(code, 0);
    // digamma root to full precision somewhere in the table
    assert!(out.contains("1.4616321449683"), "{out}");
    for name in ["gamma", "c", "C", "inv_psi_cosh1", "l", "m", "a"] {
        let line = out
            .lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .unwrap_or_else(|| panic!("row {name} missing:\n{out}"));
        assert!(line.trim_end().ends_with("ok"), "row {name}: {line}");
    }
    assert!(!out.contains("ERRATUM"), "{out}");
}

#[test]
fn check_requires_exactly_one_selector() {
    let (code, _, _) = run(&["check"], &[]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["check", "--all", "--id", "thm-ball-1"], &[]);
    assert_eq!(code, 2);
}

#[test]
fn check_unknown_id_is_a_usage_error() {
    let (code, _, err) = run(&["check", "--id", "no-such-case"], &[]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown case"), "stderr: {err}");
}

#[test]
fn check_single_case_reports_positive_margin() {
    let (code, out, _) = run(&["check", "--id", "thm-ball-1", "--samples", "30"], &[]);
    assert_eq!(code, 0);
    let line = out.lines().next().unwrap();
    assert!(line.contains("thm-ball-1") && line.contains("pass"), "{line}");
    let margin: f64 = line
        .split("min_margin=")
        .nth(1)
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert!(margin > 0.0, "{line}");
    assert!(out.contains("summary: pass=1 fail=0"), "{out}");
}

#[test]
fn empirical_failures_never_gate_the_exit_code() {
    let (code, out, _) = run(
        &["check", "--id", "cor-r5-ineq2", "--samples", "2000"],
        &[],
    );
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("empirical-fail"), "{out}");
}

#[test]
fn invalid_thread_settings_are_usage_errors() {
    let (code, _, err) = run(
        &["check", "--id", "thm-ball-1"],
        &[("PSI_CERTIFY_THREADS", "abc")],
    );
    assert_eq!(code, 2);
    assert!(err.contains("PSI_CERTIFY_THREADS"), "{err}");
    let (code, _, _) = run(
        &["check", "--id", "thm-ball-1"],
        &[("PSI_CERTIFY_THREADS", "0")],
    );
    assert_eq!(code, 2);
    let (code, _, _) = run(&["check", "--id", "thm-ball-1", "--threads", "0"], &[]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_byte_identical_and_internally_consistent() {
    let paths: Vec<PathBuf> = (0..4).map(|i| tmp_path(&format!("report{i}.json"))).collect();
    let base = ["check", "--all", "--samples", "500", "--seed", "7", "--report"];
    let mk = |path: &PathBuf, extra: &[&str], envs: &[(&str, &str)]| {
        let mut args: Vec<&str> = base.to_vec();
        let p = path.to_str().unwrap().to_string();
        let leaked: &str = Box::leak(p.into_boxed_str());
        args.push(leaked);
        args.extend_from_slice(extra);
        let (code, _, err) = run(&args, envs);
        assert_eq!(code, 0, "{err}");
        std::fs::read(path).unwrap()
    };
    let a = mk(&paths[0], &[], &[]);
    let b = mk(&paths[1], &[], &[]);
    let c = mk(&paths[2], &["--threads", "3"], &[]);
    let d = mk(&paths[3], &[], &[("PSI_CERTIFY_THREADS", "8")]);
    assert_eq!(a, b, "reruns must be byte-identical");
    assert_eq!(a, c, "--threads must not change the report");
    assert_eq!(a, d, "PSI_CERTIFY_THREADS must not change the report");
    for p in &paths {
        let _ = std::fs::remove_file(p);
    }

    let doc: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["catalog_version"], psi_certify::catalog::CATALOG_VERSION);
    assert_eq!(doc["config"]["samples"], 500);
    assert_eq!(doc["config"]["seed"], 7);
    assert_eq!(doc["config"]["strategy"], "random");
    assert!(doc["config"].get("threads").is_none());

    let ids = psi_certify::catalog::list_cases();
    let cases = doc["cases"].as_array().unwrap();
    assert_eq!(cases.len(), ids.len());
    let mut recount = std::collections::BTreeMap::<String, u64>::new();
    for (case, id) in cases.iter().zip(&ids) {
        assert_eq!(case["id"], **id, "report preserves catalog order");
        let evaluated = case["n_evaluated"].as_u64().unwrap();
        let skipped = case["n_skipped"].as_u64().unwrap();
        assert!(evaluated + skipped <= 500, "{id}");
        assert!(evaluated + skipped > 0, "{id}");
        let status = case["status"].as_str().unwrap().replace('-', "_");
        *recount.entry(status).or_default() += 1;
        let recorded = case["violations"].as_array().unwrap().len() as u64;
        assert!(recorded <= case["n_violations"].as_u64().unwrap().min(100));
    }
    // round-trip invariant: the summary equals a recount of the case list
    for (status, n) in doc["summary"].as_object().unwrap() {
        assert_eq!(
            recount.get(status).copied().unwrap_or(0),
            n.as_u64().unwrap(),
            "summary[{status}]"
        );
    }
}

#[test]
fn help_and_version_exit_cleanly() {
    let (code, out, _) = run(&["--help"], &[]);
    assert_eq!(code, 0);
    assert!(out.contains("eval") && out.contains("check") && out.contains("constants"));
    let (code, out, _) = run(&["--version"], &[]);
    assert_eq!(code, 0);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}

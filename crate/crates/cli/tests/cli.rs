use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_simplex-ortho"));
    c.env("SIMPLEX_ORTHO_THREADS", "2");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn print_poly_simplex() {
    let o = run(&[
        "print-poly",
        "--family",
        "simplex",
        "--index",
        "1,0,0",
        "--params",
        "0,0,0,0,0,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4 * x^1 - 1");
}

#[test]
fn print_poly_rational_params() {
    let o = run(&[
        "print-poly",
        "--family",
        "jacobi",
        "--index",
        "1",
        "--params",
        "-1/2,1/3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "print-poly",
        "--family",
        "triangle",
        "--index",
        "1,0",
        "--params",
        "0,0,0,0",
    ]);
    assert_eq!(stdout(&o).trim(), "3 * x^1 - 1");
}

#[test]
fn gram_single_entry() {
    let o = run(&["gram", "--N", "0", "--params", "0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert_eq!(format!("{v:.10}"), "0.1666666667");
    assert_eq!(stdout(&o).trim(), "0.166666666667");
}

#[test]
fn gram_to_file() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("gram.csv");
    let o = run(&[
        "gram",
        "--N",
        "1",
        "--params",
        "0,0,0,0,0,0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(path).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1].split(',').nth(1), Some("0.100000000000"));
}

#[test]
fn connect_identity_target() {
    let o = run(&[
        "connect",
        "--index",
        "2,1,0",
        "--params",
        "1/3,-1/2,1,0,2,1/3",
        "--target",
        "1/3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["terms"][0]["coeff"], "1");
    let general = run(&[
        "connect",
        "--index",
        "1,1,1",
        "--params",
        "0,0,0,0,0,0",
        "--target",
        "1/3,1,-1/2,0",
    ]);
    assert_eq!(general.status.code(), Some(0));
}

fn write_config(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("sweep.json");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SMALL: &str = r#"{"runs": [
  {"suite": "theorem1", "degree": 2, "grid": [["1/3", "-1/2", "1", "0", "2", "1/3"]]},
  {"suite": "pde", "degree": 2, "grid": [["0", "1", "1/3", "1"]]}
]}"#;

#[test]
fn verify_clean_exit_zero_and_deterministic_report() {
    let dir = tempdir().unwrap();
    let cfg = write_config(&dir, SMALL);
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");
    let o = run(&[
        "verify",
        "--suite",
        "theorem1",
        "--config",
        &cfg,
        "--out",
        out1.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 fail"));
    let o = bin()
        .env("SIMPLEX_ORTHO_THREADS", "1")
        .args([
            "verify",
            "--suite",
            "theorem1",
            "--config",
            &cfg,
            "--out",
            out2.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let a = fs::read(&out1).unwrap();
    assert_eq!(a, fs::read(&out2).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let first = &v["reports"][0];
    for key in ["suite", "relation", "index", "params", "status"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["suite"] == "theorem1"));
}

#[test]
fn verify_whole_config_without_suite() {
    let dir = tempdir().unwrap();
    let cfg = write_config(&dir, SMALL);
    let o = run(&["verify", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("N01") && stdout(&o).contains("B1"));
}

#[test]
fn verify_bare_run_object() {
    let dir = tempdir().unwrap();
    let cfg = write_config(&dir, r#"{"degree": 3, "grid": {"product": ["0", "1/2"], "arity": 2}}"#);
    let o = run(&["verify", "--suite", "ladder1d", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn shipped_default_config_parses() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/default.json");
    let text = fs::read_to_string(path).unwrap();
    let cfg = simplex_ortho::suites::parse_config(&text, None).unwrap();
    let reg = simplex_ortho::suites::SuiteRegistry::default();
    assert!(cfg.runs.iter().all(|r| reg.get(&r.suite).is_some()));
    assert!(cfg
        .runs
        .iter()
        .any(|r| r.suite == "theorem1" && r.degree == 5 && r.grid.len() >= 8));
}

#[test]
fn config_errors_exit_65() {
    let dir = tempdir().unwrap();
    let broken = write_config(&dir, "{ not json");
    assert_eq!(
        run(&["verify", "--suite", "pde", "--config", &broken]).status.code(),
        Some(65)
    );
    let bad_value = write_config(&dir, r#"{"degree": 1, "grid": [["-1", "0", "0", "0"]]}"#);
    assert_eq!(
        run(&["verify", "--suite", "pde", "--config", &bad_value]).status.code(),
        Some(65)
    );
    let bad_arity = write_config(&dir, r#"{"degree": 1, "grid": [["0", "0", "0"]]}"#);
    assert_eq!(
        run(&["verify", "--suite", "pde", "--config", &bad_arity]).status.code(),
        Some(65)
    );
    let missing = dir.path().join("nope.json");
    assert_eq!(
        run(&["verify", "--suite", "pde", "--config", missing.to_str().unwrap()])
            .status
            .code(),
        Some(65)
    );
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["verify", "--suite", "no-such-suite"]).status.code(), Some(64));
    assert_eq!(
        run(&[
            "print-poly",
            "--family",
            "simplex",
            "--index",
            "1,0",
            "--params",
            "0,0,0,0,0,0"
        ])
        .status
        .code(),
        Some(64)
    );
    assert_eq!(run(&["gram", "--N", "1", "--params", "0,0,0"]).status.code(), Some(64));
    assert_eq!(
        run(&["print-poly", "--family", "jacobi", "--index", "1", "--params", "x,0"])
            .status
            .code(),
        Some(64)
    );
    let bad_env = bin()
        .env("SIMPLEX_ORTHO_THREADS", "many")
        .args(["verify", "--suite", "three-term"])
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(64));
}

#[test]
fn unwritable_output_exits_1() {
    let dir = tempdir().unwrap();
    let target = dir.path().join("missing-dir").join("gram.csv");
    let o = run(&[
        "gram",
        "--N",
        "0",
        "--params",
        "0,0,0,0,0,0",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_code_mapping() {
    use simplex_ortho::report::{Status, VerificationReport};
    use simplex_ortho::suites::SweepOutcome;
    let rep = |s: Status| {
        let mut r = VerificationReport::pass("X", vec![0], &[]);
        r.status = s;
        r
    };
    assert_eq!(
        SweepOutcome::new(vec![rep(Status::Pass), rep(Status::NotApplicable)]).exit_code(),
        0
    );
    assert_eq!(SweepOutcome::new(vec![rep(Status::ErratumCandidate)]).exit_code(), 2);
    assert_eq!(
        SweepOutcome::new(vec![rep(Status::Fail), rep(Status::ErratumCandidate)]).exit_code(),
        1
    );
}

#[test]
fn help_and_list() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let o = run(&["verify", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    for name in [
        "ladder1d",
        "m2d",
        "theorem1",
        "second-order",
        "pde",
        "corollaries",
        "connections",
        "three-term",
    ] {
        assert!(stdout(&o).contains(name), "{name}");
    }
}

#[test]
fn rule_dump() {
    let o = run(&["rule", "--params", "0,0,0,0,0,0", "--order", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 1);
}

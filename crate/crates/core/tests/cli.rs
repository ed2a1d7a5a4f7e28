use std::fs;
use std::path::{Path, PathBuf};

use crossed_hqft::cli::{run, EXIT_FAIL, EXIT_MALFORMED, EXIT_PASS};
use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli_in(dir: &Path, args: &[&str]) -> Out {
    let mut full = vec![
        "crossed-hqft".to_string(),
        "--fixtures-dir".into(),
        dir.display().to_string(),
    ];
    full.extend(args.iter().map(|s| s.to_string()));
    let (mut o, mut e) = (Vec::new(), Vec::new());
    let code = run(full, &mut o, &mut e);
    Out {
        code,
        stdout: String::from_utf8(o).unwrap(),
        stderr: String::from_utf8(e).unwrap(),
    }
}

fn cli(args: &[&str]) -> Out {
    cli_in(&fixtures(), args)
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("{e}: {s}"))
}

#[test]
fn check_passing_and_failing_objects() {
    for (kind, name) in [
        ("group", "S3"),
        ("crossed-module", "CM-A3S3"),
        ("morphism", "q-CM-A3S3"),
        ("algebra", "kP-CM-Id2"),
        ("algebra", "kC-CM-Id2-F2"),
        ("expression", "snake-CM-A3S3"),
    ] {
        let out = cli(&["check", kind, name]);
        assert_eq!(out.code, EXIT_PASS, "{kind} {name}: {}", out.stderr);
        assert_eq!(json(&out.stdout)["passed"], Value::Bool(true));
    }
    let out = cli(&["check", "algebra", "kC-CM-Mod"]);
    assert_eq!(out.code, EXIT_FAIL);
    assert!(out.stderr.contains("Tr("), "{}", out.stderr);
    let report = json(&out.stdout);
    let failed: Vec<&str> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["passed"] == Value::Bool(false))
        .map(|r| r["family"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["trace"]);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{").unwrap();
    assert_eq!(
        cli(&["check", "algebra", bad.to_str().unwrap()]).code,
        EXIT_MALFORMED
    );
    assert_eq!(
        cli(&["check", "algebra", "no-such-algebra"]).code,
        EXIT_MALFORMED
    );
    assert_eq!(cli(&["check", "widget", "S3"]).code, EXIT_MALFORMED);
    let out = cli(&["--field", "Fp:4", "build", "kP", "CM-Id2"]);
    assert_eq!(out.code, EXIT_MALFORMED);
    assert!(out.stderr.contains("Fp:<p>"));
    // An expression over the wrong crossed module.
    assert_eq!(cli(&["eval", "kP-CM-Mod", "disc-s"]).code, EXIT_MALFORMED);
}

#[test]
fn built_algebras_pass_their_own_checks() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["build", "kP", "CM-A3S3"],
        &["build", "kC", "CM-Id2"],
        &["--field", "Fp:3", "build", "kP", "CM-Mod"],
        &["build", "pullback", "q-CM-A3S3", "kP-Q-CM-A3S3"],
        &["build", "pushforward", "q-CM-A3S3", "kP-CM-A3S3"],
        &["--field", "Fp:2", "build", "kP", "CM-AutS3"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let out = cli(args);
        assert_eq!(out.code, EXIT_PASS, "{args:?}: {}", out.stderr);
        let path = dir.path().join(format!("built-{i}.json"));
        fs::write(&path, &out.stdout).unwrap();
        let re = cli(&["check", "algebra", path.to_str().unwrap()]);
        assert_eq!(re.code, EXIT_PASS, "{args:?}: {}", re.stderr);
    }
    let out = cli(&["build", "kC", "CM-Mod"]);
    assert_eq!(out.code, EXIT_FAIL);
    assert_eq!(json(&out.stdout)["kind"], "algebra");
}

#[test]
fn kp_iso_witness_is_reported() {
    let out = cli(&["build", "kp_iso", "CM-A3S3"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let doc = json(&out.stdout);
    assert_eq!(doc["report"]["passed"], Value::Bool(true));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kp.json");
    let out = cli(&["--out", path.to_str().unwrap(), "build", "kP", "CM-Id2"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.is_empty());
    assert_eq!(json(&fs::read_to_string(&path).unwrap())["kind"], "algebra");
}

fn matrix(doc: &Value) -> Vec<Vec<String>> {
    doc["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap().to_string())
                .collect()
        })
        .collect()
}

#[test]
fn eval_examples() {
    let out = cli(&["eval", "kP-CM-Id2", "disc-s"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let doc = json(&out.stdout);
    assert_eq!(matrix(&doc), vec![vec!["1"]]);
    assert_eq!(doc["target"], serde_json::json!([["s"]]));

    let doc = json(&cli(&["eval", "kP-CM-Id2", "identity-s"]).stdout);
    assert_eq!(matrix(&doc), vec![vec!["1"]]);
    let doc = json(&cli(&["eval", "kC-CM-Id2-F2", "cup-cap-s"]).stdout);
    assert_eq!(matrix(&doc).len(), 1);
    assert_eq!(doc["field"], serde_json::json!({"Fp": 2}));

    // Cup, Swap, Cap on grade t counts dim L_t: 0 for K[C] over Z/3 → Z/2, 1 for K[P].
    let doc = json(&cli(&["eval", "kC-CM-Mod", "cup-swap-cap-CM-Mod"]).stdout);
    assert_eq!(matrix(&doc), vec![vec!["0"]]);
    let doc = json(&cli(&["eval", "kP-CM-Mod", "cup-swap-cap-CM-Mod"]).stdout);
    assert_eq!(matrix(&doc), vec![vec!["1"]]);
}

#[test]
fn verify_suites_on_fixtures() {
    for suite in ["boxed", "equivalence", "adjunction", "round-trip", "none"] {
        let out = cli(&["verify", suite]);
        assert_eq!(out.code, EXIT_PASS, "{suite}: {}", out.stderr);
        assert_eq!(json(&out.stdout)["passed"], Value::Bool(true));
    }
    let none = json(&cli(&["verify", "none"]).stdout);
    assert_eq!(none["results"], serde_json::json!([]));
}

fn copy_dir(from: &Path, to: &Path) {
    fs::create_dir_all(to).unwrap();
    for entry in fs::read_dir(from).unwrap() {
        let entry = entry.unwrap();
        let target = to.join(entry.file_name());
        if entry.file_type().unwrap().is_dir() {
            copy_dir(&entry.path(), &target);
        } else {
            fs::copy(entry.path(), target).unwrap();
        }
    }
}

#[test]
fn verify_catches_an_injected_mutant() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("fixtures");
    copy_dir(&fixtures(), &ws);
    fs::remove_dir_all(ws.join("mutations")).unwrap();
    fs::copy(
        fixtures().join("mutations/algebras/kP-CM-A3S3-mutant-algebra.json"),
        ws.join("algebras/kP-CM-A3S3-mutant-algebra.json"),
    )
    .unwrap();
    let out = cli_in(&ws, &["verify", "all"]);
    assert_eq!(out.code, EXIT_FAIL);
    assert!(
        out.stderr.contains("kP-CM-A3S3-mutant-algebra"),
        "{}",
        out.stderr
    );
    assert_eq!(cli_in(&ws, &["verify", "none"]).code, EXIT_PASS);
}

#[test]
fn every_mutation_is_rejected_with_a_counterexample() {
    let manifest = json(&fs::read_to_string(fixtures().join("mutations/manifest.json")).unwrap());
    let entries = manifest.as_array().unwrap();
    assert!(entries.len() >= 15);
    for m in entries {
        let file = fixtures()
            .join("mutations")
            .join(m["file"].as_str().unwrap());
        let kind = m["kind"].as_str().unwrap();
        let out = cli(&["check", kind, file.to_str().unwrap()]);
        assert_eq!(out.code, EXIT_FAIL, "{}", file.display());
        assert!(out.stderr.contains("counterexample"), "{}", out.stderr);
        let family = m["family"].as_str().unwrap();
        let report = json(&out.stdout);
        let fam_failed = report["results"]
            .as_array()
            .unwrap()
            .iter()
            .any(|r| r["family"] == family && r["passed"] == Value::Bool(false));
        assert!(fam_failed, "{} did not fail {family}", file.display());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["build", "kP", "CM-A3S3"][..],
        &["build", "kp_iso", "CM-A3S3"],
        &["verify", "round-trip"],
        &["eval", "kC-CM-Mod", "copants-pants-CM-Mod"],
    ] {
        let (a, b) = (cli(args), cli(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

fn tree(dir: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.push((
                    p.strip_prefix(dir).unwrap().to_path_buf(),
                    fs::read(&p).unwrap(),
                ));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn regenerated_fixtures_match_the_checked_in_ones() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("fx");
    let out = cli(&["demo", "--write-fixtures", target.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let (got, want) = (tree(&target), tree(&fixtures()));
    assert_eq!(
        got.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>(),
        want.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>()
    );
    for ((p, a), (_, b)) in got.iter().zip(&want) {
        assert!(a == b, "{} differs", p.display());
    }
}

#[test]
fn demo_runs() {
    let out = cli(&["demo"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    assert!(!out.stdout.is_empty());
}

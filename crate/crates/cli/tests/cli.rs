use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_neargroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn ring_build_prints_products() {
    let out = stdout(&["ring", "build", "--group", "Z/2", "--k", "1"]);
    assert!(out.contains("X ⊗ X = e ⊕ g ⊕ X"), "{out}");
    assert_eq!(
        code(&["ring", "check", "--group", "S3", "--k", "3", "--random", "4"]),
        0
    );
}

#[test]
fn tampered_ring_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.json");
    assert_eq!(
        code(&[
            "ring",
            "build",
            "--group",
            "Z/2",
            "--k",
            "1",
            "--json",
            path.to_str().unwrap()
        ]),
        0
    );
    let mut ring = read_json(&path);
    assert_eq!(
        code(&["ring", "check", "--ring", path.to_str().unwrap()]),
        0
    );
    // X ⊗ X loses its g summand, so Frobenius reciprocity breaks
    ring["N"][2][2][1] = Value::from(0);
    std::fs::write(&path, ring.to_string()).unwrap();
    assert_eq!(
        code(&["ring", "check", "--ring", path.to_str().unwrap()]),
        1
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["ring", "build", "--group", "Z/0"]), 2);
    assert_eq!(code(&["ring", "build", "--group", "nonsense"]), 2);
    assert_eq!(code(&["affine", "table", "--q", "6"]), 2);
    assert_eq!(code(&["metric", "transitive-scan", "--max-order", "2"]), 2);
    assert_eq!(code(&["equi", "fuse", "--preset", "nope"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.json");
    assert_ne!(
        code(&["ring", "check", "--ring", missing.to_str().unwrap()]),
        0
    );
}

#[test]
fn failing_claim_exits_one() {
    // D/Δ is integral at (r, k, n) = (4, 5, 5) although r ≠ k
    let out = run(&["alg", "ratio-scan", "--k-max", "5", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("(4, 5, 5)"));
    assert_eq!(
        code(&["alg", "ratio-scan", "--k-max", "4", "--n-max", "5"]),
        0
    );
}

#[test]
fn spherical_and_fpdim_subcommands() {
    assert_eq!(
        code(&["spherical", "pipeline", "--group", "Z/3", "--k", "6"]),
        0
    );
    assert_eq!(code(&["ring", "fpdim", "--group", "Z/2", "--k", "1"]), 0);
    assert_eq!(code(&["ring", "fpdim", "--scan", "--max-n", "30"]), 0);
    assert_eq!(
        code(&[
            "alg",
            "lemma-scan",
            "--a-max",
            "3",
            "--c-max",
            "3",
            "--bd-max",
            "12",
            "--samples",
            "50",
            "--seed",
            "7"
        ]),
        0
    );
}

#[test]
fn metric_subcommands() {
    let out = stdout(&["metric", "gauss", "--factors", "3", "--q-gen", "2"]);
    assert!(out.contains("|.|^2 = 3"), "{out}");
    assert_eq!(code(&["metric", "enum", "--factors", "2,2"]), 0);
    assert_eq!(
        code(&[
            "metric",
            "isometries",
            "--factors",
            "2,2",
            "--q-gen",
            "2,2",
            "--b",
            "0,2;2,0",
            "--acting",
            "Z/3"
        ]),
        0
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.json");
    assert_eq!(
        code(&[
            "metric",
            "transitive-scan",
            "--max-order",
            "9",
            "--json",
            path.to_str().unwrap()
        ]),
        0
    );
    assert_eq!(read_json(&path)["found"].as_array().unwrap().len(), 3);
}

#[test]
fn equivariant_presets_and_action_files() {
    for preset in ["z3", "z3bar", "klein"] {
        assert_eq!(code(&["equi", "fuse", "--preset", preset]), 0, "{preset}");
    }
    assert!(stdout(&["equi", "fuse", "--preset", "z3"]).contains("rule (Z/2,1)"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("action.json");
    let action = r#"{"metric":{"factors":[3],"conductor":6,"q_gen":[2],"b":[[4]]},"H":{"kind":"cyclic","n":2},"images":[[0,2,1]]}"#;
    std::fs::write(&path, action).unwrap();
    assert_eq!(
        code(&["equi", "fuse", "--action", path.to_str().unwrap()]),
        0
    );
    // moves the identity, so it is not an automorphism
    let bad = r#"{"metric":{"factors":[3],"conductor":6,"q_gen":[2],"b":[[4]]},"H":{"kind":"cyclic","n":2},"images":[[1,2,0]]}"#;
    std::fs::write(&path, bad).unwrap();
    assert_eq!(
        code(&["equi", "fuse", "--action", path.to_str().unwrap()]),
        2
    );
}

#[test]
fn affine_subcommands() {
    assert_eq!(code(&["affine", "table", "--q", "5"]), 0);
    assert_eq!(code(&["affine", "verify", "--q-max", "8"]), 0);
}

#[test]
fn classify_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(
        code(&["classify", "--max-n", "8", "--json", a.to_str().unwrap()]),
        0
    );
    assert_eq!(
        code(&[
            "classify",
            "--max-n",
            "8",
            "--quiet",
            "--json",
            b.to_str().unwrap()
        ]),
        0
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let report = read_json(&a);
    assert_eq!(report["schema"], "neargroup-report/1");
    let counts: Vec<(String, u64)> = report["non_symmetric"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["rule"].as_str().unwrap().to_string(),
                e["count"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        counts,
        vec![
            ("(1,1)".into(), 4),
            ("(Z/2,1)".into(), 2),
            ("(Z/3,2)".into(), 1)
        ]
    );
}

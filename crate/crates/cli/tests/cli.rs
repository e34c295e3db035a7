//! End-to-end behaviour of the `omega-lsa` command line.

use std::path::Path;
use std::process::Command;

use omega_cli::{run_command, without_timing};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_omega-lsa");

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["omega-lsa"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}")))
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json")).unwrap();
    jsonschema::JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_schema_valid(doc: &Value) {
    let s = schema();
    if let Err(errors) = s.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:#?}");
    };
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const ABELIAN: &str = "dim = 2\nbasis = u, v\nfield = Q\nkind = lie\n";

const NOT_JACOBI: &str = "\
dim = 3
basis = x, y, z
field = Q
kind = lie

[brackets]
x,y = x
x,z = y
y,z = x
";

#[test]
fn emitted_b_is_perfect() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.toml");
    let (code, _) = run_json(&["catalog", "emit", "--family", "B", "-o", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, doc) = run_json(&["perfect", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["verdict"], Value::Bool(true));
    assert_eq!(doc["payload"]["derived_dim"], 3);
    assert_schema_valid(&doc);
}

#[test]
fn abelian_is_admissible() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "ab.toml", ABELIAN);
    let (code, doc) = run_json(&["admissible", &f]);
    assert_eq!(code, 0);
    assert_eq!(doc["verdict"], "ADMISSIBLE");
    assert!(doc["payload"]["report"]["witness"].is_array());
    assert_schema_valid(&doc);
}

#[test]
fn verify_theorem1_reports_every_family() {
    let (code, doc) = run_json(&["verify-theorem1", "--sample", "alpha=2", "--sample", "alpha=-2", "--sample", "alpha=1/2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["verdict"], "PASS");
    assert_eq!(doc["payload"]["families"], 10);
    assert_eq!(doc["payload"]["instances"], 12);
    let results = doc["payload"]["results"].as_array().unwrap();
    let labels: Vec<&str> = results.iter().map(|r| r["instance"].as_str().unwrap()).collect();
    assert_eq!(
        labels,
        ["A_alpha", "B", "C_alpha", "G1_alpha", "H1_alpha", "A_tilde_alpha", "B_tilde", "C_tilde_alpha", "P1", "P1[alt]", "P2", "P2[alt]"]
    );
    assert!(results.iter().all(|r| r["verdict"] == "INADMISSIBLE"));
    assert_schema_valid(&doc);
}

#[test]
fn lsa_check_and_commutator() {
    let dir = tempfile::tempdir().unwrap();
    let lsa = dir.path().join("l.toml");
    let lie = dir.path().join("c.toml");
    let (code, _) = run_json(&["catalog", "emit", "--family", "LSA3_2", "--param", "a1=1", "--param", "a2=0", "--param", "a3=-1/2", "-o", lsa.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, doc) = run_json(&["check", lsa.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["module_identity"]["passed"], true);
    let (code, doc) = run_json(&["commutator", lsa.to_str().unwrap(), "-o", lie.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["perfect"], false);
    assert_eq!(std::fs::read_to_string(&lie).unwrap(), doc["payload"]["algebra_file"].as_str().unwrap());
    let (code, doc) = run_json(&["admissible", lie.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["verdict"], "ADMISSIBLE");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ab = write(&dir, "ab.toml", ABELIAN);
    let bad = write(&dir, "bad.toml", NOT_JACOBI);
    let dup = write(&dir, "dup.toml", "dim = 2\nbasis = u, v\nfield = Q\nkind = lie\n[brackets]\nu,v = u\nv,u = -u\n");
    let unknown_name = write(&dir, "n.toml", "dim = 2\nbasis = u, v\nfield = Q\nkind = lie\n[brackets]\nu,v = w\n");
    let missing = dir.path().join("missing.toml");
    let a = dir.path().join("a.toml");
    run(&["catalog", "emit", "--family", "A_alpha", "-o", a.to_str().unwrap()]);
    let a = a.to_str().unwrap();

    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["check", &ab], 0),
        (vec!["check", &bad], 1),
        (vec!["check", &dup], 2),
        (vec!["check", &unknown_name], 2),
        (vec!["check", missing.to_str().unwrap()], 2),
        (vec!["perfect", &ab], 0),
        (vec!["commutator", &ab], 2),
        (vec!["admissible", a], 0),
        (vec!["admissible", a, "--mode", "module-only", "--sample", "alpha=1/2"], 0),
        (vec!["admissible", a, "--sample", "beta=1"], 2),
        (vec!["admissible", &ab, "--sample", "alpha=1"], 2),
        (vec!["catalog", "list"], 0),
        (vec!["catalog", "emit", "--family", "Nope"], 2),
        (vec!["catalog", "emit", "--family", "C_alpha", "--param", "alpha=-1"], 2),
        (vec!["catalog", "emit", "--family", "B", "--param", "alpha"], 2),
        (vec!["no-such-command"], 2),
        (vec!["--help"], 0),
    ];
    for (args, expected) in cases {
        let (code, out, err) = run(&args);
        assert_eq!(code, expected, "{args:?}\nstdout: {out}\nstderr: {err}");
        if out.trim_start().starts_with('{') {
            let doc: Value = serde_json::from_str(&out).unwrap();
            assert_eq!(doc["exit_code"], expected, "{args:?}");
            assert_schema_valid(&doc);
        }
        if expected == 2 {
            assert!(!err.is_empty(), "{args:?}: diagnostics belong on stderr");
        }
    }
}

#[test]
fn axiom_failure_names_the_triple() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.toml", NOT_JACOBI);
    let (code, doc) = run_json(&["check", &bad]);
    assert_eq!(code, 1);
    assert_eq!(doc["verdict"], "FAIL");
    let failure = &doc["payload"]["axioms"]["failures"][0];
    assert_eq!(failure["triple"], serde_json::json!(["x", "y", "z"]));
    assert_eq!(failure["residual"], "y");
}

#[test]
fn process_exit_codes_match_reports() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.toml", NOT_JACOBI);
    let out = Command::new(BIN).args(["check", &bad]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("axiom failure"));
    let out = Command::new(BIN).args(["catalog", "list", "--kind", "lsa"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["payload"]["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.toml");
    run(&["catalog", "emit", "--family", "C_tilde_alpha", "-o", a.to_str().unwrap()]);
    let a = a.to_str().unwrap();
    for args in [
        vec!["check", a],
        vec!["admissible", a, "--sample", "alpha=2"],
        vec!["catalog", "list"],
        vec!["verify-theorem1"],
    ] {
        let (_, first, _) = run(&args);
        let (_, second, _) = run(&args);
        assert_eq!(without_timing(&first).unwrap(), without_timing(&second).unwrap(), "{args:?}");
    }
}

#[test]
fn text_format_renders_summaries() {
    let (code, out, _) = run(&["verify-theorem1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS: 12 instances over 10 families"));
    let (_, out, _) = run(&["catalog", "emit", "--family", "B", "--format", "text"]);
    assert!(out.contains("[omega]") && out.contains("y,z = 2"));
}

#[test]
fn catalog_emit_defaults_to_generic_alpha() {
    let (_, doc) = run_json(&["catalog", "emit", "--family", "G1_alpha"]);
    assert_eq!(doc["payload"]["field"], "Q(alpha)");
    let (_, doc) = run_json(&["catalog", "emit", "--family", "G1_alpha", "--param", "alpha=3"]);
    assert_eq!(doc["payload"]["field"], "Q");
}

#[test]
fn schema_rejects_malformed_reports() {
    let (_, mut doc) = run_json(&["catalog", "list"]);
    assert!(schema().is_valid(&doc));
    doc["verdict"] = Value::String("MAYBE".into());
    assert!(!schema().is_valid(&doc));
    doc.as_object_mut().unwrap().remove("verdict");
    assert!(!schema().is_valid(&doc));
}

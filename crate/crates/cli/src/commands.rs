use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use num_rational::BigRational;
use omega_core::admissibility::{check_sample, decide_admissible, decide_with, AdmissibilityReport, DeciderMode, SampleOutcome, Settings, Verdict};
use omega_core::algebra::LieReport;
use omega_core::catalog;
use omega_core::groebner::is_groebner_basis;
use omega_core::io::{emit_algebra, emit_lie, format_vector, parse_algebra_file, parse_scalar, Algebra, AlgebraKind, ParseError};
use omega_core::{FieldKind, OmegaLieAlgebra, OmegaLsaAlgebra};
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::InputDigest;
use crate::{InputError, KindArg, ModeArg, Outcome, EXIT_OK, EXIT_UNKNOWN, EXIT_VIOLATION};

fn read_input(path: &Path) -> Result<(String, InputDigest), InputError> {
    let shown = path.display().to_string();
    let bytes = if shown == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| InputError(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| InputError(format!("{shown}: {e}")))?
    };
    let digest = InputDigest::of(&shown, &bytes);
    let text = String::from_utf8(bytes).map_err(|_| InputError(format!("{shown}: not valid UTF-8")))?;
    Ok((text, digest))
}

fn load(path: &Path) -> Result<(Algebra, InputDigest), InputError> {
    let (text, digest) = read_input(path)?;
    let algebra = parse_algebra_file(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((algebra, digest))
}

fn load_lie(path: &Path) -> Result<(OmegaLieAlgebra, InputDigest), InputError> {
    match load(path)? {
        (Algebra::Lie(l), d) => Ok((l, d)),
        (Algebra::Lsa(_), _) => Err(InputError(format!(
            "{}: expected kind = lie (run `commutator` on an lsa file first)",
            path.display()
        ))),
    }
}

fn outcome(verdict: Value, exit_code: i32, payload: Value, input: Option<InputDigest>, text: String) -> Outcome {
    Outcome {
        verdict,
        exit_code,
        payload,
        input,
        diagnostics: Vec::new(),
        text,
    }
}

#[derive(Serialize)]
struct TripleFailure {
    triple: [String; 3],
    residual: String,
}

fn lie_axioms(report: &LieReport, names: &[String]) -> Value {
    let failures: Vec<TripleFailure> = report
        .failures()
        .map(|t| TripleFailure {
            triple: [names[t.triple.0].clone(), names[t.triple.1].clone(), names[t.triple.2].clone()],
            residual: format_vector(&t.residual, names),
        })
        .collect();
    let antisymmetry: Vec<[String; 2]> = report
        .antisymmetry_violations
        .iter()
        .map(|&(i, j)| [names[i].clone(), names[j].clone()])
        .collect();
    json!({
        "passed": report.passed(),
        "triples_checked": report.triples.len(),
        "antisymmetry_violations": antisymmetry,
        "failures": failures,
    })
}

fn index_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn pass_fail(ok: bool) -> Value {
    Value::String(if ok { "PASS" } else { "FAIL" }.into())
}

pub(crate) fn check(path: &Path) -> Result<Outcome, InputError> {
    let (text, digest) = read_input(path)?;
    match parse_algebra_file(&text) {
        Ok(Algebra::Lie(l)) => {
            let report = l.check()?;
            let ok = report.passed();
            let payload = json!({
                "kind": "lie",
                "dim": l.dim(),
                "field": l.kind().name(),
                "basis": l.basis_names(),
                "axioms": lie_axioms(&report, l.basis_names()),
            });
            let text = format!("{}: omega-Lie axioms {}\n", path.display(), if ok { "hold" } else { "FAIL" });
            Ok(outcome(pass_fail(ok), if ok { EXIT_OK } else { EXIT_VIOLATION }, payload, Some(digest), text))
        }
        Ok(Algebra::Lsa(a)) => Ok(check_lsa(path, &a, digest)?),
        Err(ParseError::NotOmegaLie(report)) => {
            let n = report.triples.iter().map(|t| t.triple.2 + 1).max().unwrap_or(0);
            let names = declared_basis(&text).unwrap_or_else(|| index_names(n));
            let payload = json!({ "kind": "lie", "axioms": lie_axioms(&report, &names) });
            let mut o = outcome(
                pass_fail(false),
                EXIT_VIOLATION,
                payload,
                Some(digest),
                format!("{}: omega-Lie axioms FAIL ({report})\n", path.display()),
            );
            o.diagnostics.push(format!("axiom failure: {report}"));
            Ok(o)
        }
        Err(ParseError::NotOmegaLsa(report)) => {
            let failures: Vec<Value> = report
                .failures()
                .map(|t| json!({ "triple": [t.triple.0, t.triple.1, t.triple.2], "residual": t.residual }))
                .collect();
            let payload = json!({
                "kind": "lsa",
                "axioms": { "passed": false, "triples_checked": report.triples.len(), "failures": failures },
            });
            let mut o = outcome(
                pass_fail(false),
                EXIT_VIOLATION,
                payload,
                Some(digest),
                format!("{}: omega-left-symmetric identity FAIL ({report})\n", path.display()),
            );
            o.diagnostics.push(format!("axiom failure: {report}"));
            Ok(o)
        }
        Err(e) => Err(InputError(format!("{}: {e}", path.display()))),
    }
}

/// Basis names from the header, for reporting on files that failed to load.
fn declared_basis(text: &str) -> Option<Vec<String>> {
    text.lines().find_map(|line| {
        let line = line.split('#').next()?.trim();
        let (k, v) = line.split_once('=')?;
        (k.trim() == "basis").then(|| v.split(',').map(|s| s.trim().trim_matches('"').to_string()).collect())
    })
}

fn check_lsa(path: &Path, a: &OmegaLsaAlgebra, digest: InputDigest) -> Result<Outcome, InputError> {
    let report = a.check()?;
    let module = a.check_module_identity();
    let names = a.basis_names();
    let module_failures: Vec<Value> = module
        .pairs
        .iter()
        .filter(|p| !p.residual.is_zero())
        .map(|p| json!({ "pair": [names[p.pair.0].clone(), names[p.pair.1].clone()], "residual": p.residual }))
        .collect();
    let ok = report.passed() && module.passed();
    let payload = json!({
        "kind": "lsa",
        "dim": a.dim(),
        "field": a.kind().name(),
        "basis": names,
        "axioms": { "passed": report.passed(), "triples_checked": report.triples.len() },
        "module_identity": { "passed": module.passed(), "failures": module_failures },
    });
    let text = format!(
        "{}: omega-left-symmetric identity {}, module identity {}\n",
        path.display(),
        if report.passed() { "holds" } else { "FAILS" },
        if module.passed() { "holds" } else { "FAILS" },
    );
    Ok(outcome(pass_fail(ok), if ok { EXIT_OK } else { EXIT_VIOLATION }, payload, Some(digest), text))
}

pub(crate) fn perfect(path: &Path) -> Result<Outcome, InputError> {
    let (l, digest) = load_lie(path)?;
    let derived = l.derived_subalgebra();
    let perfect = derived.len() == l.dim();
    let basis: Vec<String> = derived.iter().map(|v| format_vector(v, l.basis_names())).collect();
    let payload = json!({
        "dim": l.dim(),
        "derived_dim": derived.len(),
        "derived_basis": basis,
        "perfect": perfect,
    });
    let text = format!(
        "{}: {} (dim [L,L] = {} of {})\n",
        path.display(),
        if perfect { "perfect" } else { "not perfect" },
        derived.len(),
        l.dim()
    );
    Ok(outcome(Value::Bool(perfect), EXIT_OK, payload, Some(digest), text))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), InputError> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

pub(crate) fn commutator(path: &Path, output: Option<&Path>) -> Result<Outcome, InputError> {
    let (a, digest) = match load(path)? {
        (Algebra::Lsa(a), d) => (a, d),
        (Algebra::Lie(_), _) => return Err(InputError(format!("{}: expected kind = lsa", path.display()))),
    };
    let lie = a.commutator_algebra()?;
    let file = emit_lie(&lie, &format!("commutator algebra of {}", path.display()));
    write_output(output, &file)?;
    let payload = json!({
        "omega_lie": lie.check()?.passed(),
        "perfect": lie.is_perfect(),
        "algebra_file": file,
    });
    Ok(outcome(Value::String("OK".into()), EXIT_OK, payload, Some(digest), file))
}

fn parse_samples(samples: &[String], kind: FieldKind) -> Result<Vec<BigRational>, InputError> {
    if !samples.is_empty() && kind != FieldKind::RationalFunction {
        return Err(InputError("--sample needs an algebra over Q(alpha)".into()));
    }
    samples
        .iter()
        .map(|s| {
            let (k, v) = s.split_once('=').ok_or_else(|| InputError(format!("--sample `{s}`: expected alpha=VALUE")))?;
            if k.trim() != "alpha" {
                return Err(InputError(format!("--sample `{s}`: only alpha can be sampled")));
            }
            let x = parse_scalar(v, FieldKind::Rational).map_err(|e| InputError(format!("--sample `{s}`: {e}")))?;
            x.as_rational().ok_or_else(|| InputError(format!("--sample `{s}`: not rational")))
        })
        .collect()
}

fn render_report(label: &str, r: &AdmissibilityReport) -> String {
    let mut s = format!("{label}: {}", r.verdict);
    if let Some(a) = &r.annotation {
        let _ = write!(s, " ({a})");
    }
    s.push('\n');
    for st in &r.certificate {
        let dim = st.dim.map_or("empty".to_string(), |d| d.to_string());
        let _ = writeln!(s, "  {:<40} equations {:>4}  dim {dim}", st.name, st.equations);
        for p in st.pinned.iter().flatten() {
            let rows: Vec<String> = p.matrix.iter().map(|r| format!("[{}]", r.join(", "))).collect();
            let _ = writeln!(s, "      {} = [{}]", p.name, rows.join(", "));
        }
    }
    if let Some(w) = &r.witness_products {
        let _ = writeln!(s, "  witness:");
        for e in w {
            let _ = writeln!(s, "      {} * {} = {}", e.left, e.right, e.value);
        }
    }
    s
}

pub(crate) fn admissible(path: &Path, mode: ModeArg, degree_cap: u32, samples: &[String]) -> Result<Outcome, InputError> {
    let (l, digest) = load_lie(path)?;
    let at = parse_samples(samples, l.kind())?;
    let mode = match mode {
        ModeArg::Full => DeciderMode::Full,
        ModeArg::ModuleOnly => DeciderMode::ModuleOnly,
    };
    let report = decide_with(&l, Settings { degree_cap, mode })?;
    let checks: Vec<SampleOutcome> = at.iter().map(|a| check_sample(&l, &report, a)).collect();
    let mut diagnostics = Vec::new();
    let mut exit = match report.verdict {
        Verdict::Unknown => {
            diagnostics.push(format!("degree cap {degree_cap} exceeded"));
            EXIT_UNKNOWN
        }
        _ => EXIT_OK,
    };
    for c in checks.iter().filter(|c| c.is_mismatch()) {
        diagnostics.push(format!("generic and sampled verdicts disagree: {c:?}"));
        exit = EXIT_VIOLATION;
    }
    let mut text = render_report(&path.display().to_string(), &report);
    for c in &checks {
        let _ = writeln!(text, "  sample {}", serde_json::to_string(c).expect("serializes"));
    }
    let payload = json!({ "report": report, "samples": checks });
    let mut o = outcome(Value::String(report.verdict.to_string()), exit, payload, Some(digest), text);
    o.diagnostics = diagnostics;
    Ok(o)
}

pub(crate) fn catalog_list(kind: Option<KindArg>, dim: Option<usize>) -> Result<Outcome, InputError> {
    let wanted = kind.map(|k| match k {
        KindArg::Lie => AlgebraKind::Lie,
        KindArg::Lsa => AlgebraKind::Lsa,
    });
    let entries: Vec<_> = catalog::list_entries()
        .into_iter()
        .filter(|e| wanted.is_none_or(|k| e.kind == k))
        .filter(|e| dim.is_none_or(|d| e.dim_rule.admits(d)))
        .collect();
    let mut text = String::new();
    let list: Vec<Value> = entries
        .iter()
        .map(|e| {
            let params: Vec<Value> = e
                .params
                .iter()
                .map(|p| json!({ "name": p.name, "default": p.default, "description": p.description }))
                .collect();
            let slots: Vec<&str> = e.params.iter().map(|p| p.name).collect();
            let _ = writeln!(text, "{:<14} {:<4} dim {:<4} params [{}] {}", e.name, e.kind.name(), e.dim_rule.to_string(), slots.join(", "), e.conditions);
            json!({
                "name": e.name,
                "display": e.display,
                "kind": e.kind.name(),
                "dim": e.dim_rule.to_string(),
                "params": params,
                "conditions": e.conditions,
            })
        })
        .collect();
    Ok(outcome(Value::String("OK".into()), EXIT_OK, json!({ "entries": list }), None, text))
}

pub(crate) fn catalog_emit(family: &str, params: &[String], field: Option<&str>, output: Option<&Path>) -> Result<Outcome, InputError> {
    let mut map = BTreeMap::new();
    for p in params {
        let (k, v) = p.split_once('=').ok_or_else(|| InputError(format!("--param `{p}`: expected KEY=VALUE")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(InputError(format!("--param `{}` given twice", k.trim())));
        }
    }
    let entry = catalog::entry(family).ok_or_else(|| InputError(format!("unknown family `{family}` (see `catalog list`)")))?;
    let field = match field {
        Some(f) => f.parse::<FieldKind>()?,
        None if entry.params.iter().any(|p| p.name == "alpha") && !map.contains_key("alpha") => FieldKind::RationalFunction,
        None => FieldKind::Rational,
    };
    let algebra = catalog::instantiate(family, &map, field)?;
    let title = if map.is_empty() {
        format!("{} from the built-in catalog", entry.display)
    } else {
        let args: Vec<String> = map.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{} ({}) from the built-in catalog", entry.display, args.join(", "))
    };
    let file = emit_algebra(&algebra, &title);
    write_output(output, &file)?;
    let dim = match &algebra {
        Algebra::Lie(l) => l.dim(),
        Algebra::Lsa(a) => a.dim(),
    };
    let payload = json!({
        "family": family,
        "field": field.name(),
        "params": map,
        "kind": algebra.kind().name(),
        "dim": dim,
        "algebra_file": file,
    });
    Ok(outcome(Value::String("OK".into()), EXIT_OK, payload, None, file))
}

#[derive(Serialize)]
struct InstanceResult {
    instance: String,
    family: String,
    dim: usize,
    field: &'static str,
    verdict: Verdict,
    /// Post-hoc Buchberger criterion on the Gröbner basis, when one was computed.
    groebner_criterion: Option<bool>,
    samples: Vec<SampleOutcome>,
    report: AdmissibilityReport,
}

pub(crate) fn verify_theorem1(degree_cap: u32, samples: &[String]) -> Result<Outcome, InputError> {
    let at = parse_samples(samples, FieldKind::RationalFunction)?;
    let instances = catalog::theorem_instances();
    // independent instances run concurrently; results keep catalog order
    let results: Vec<Result<InstanceResult, InputError>> = std::thread::scope(|s| {
        let handles: Vec<_> = instances
            .iter()
            .map(|(label, l)| {
                let at = &at;
                s.spawn(move || -> Result<InstanceResult, InputError> {
                    let report = decide_admissible(l, degree_cap)?;
                    let samples = if l.kind() == FieldKind::RationalFunction {
                        at.iter().map(|a| check_sample(l, &report, a)).collect()
                    } else {
                        Vec::new()
                    };
                    let groebner_criterion = report
                        .groebner
                        .as_ref()
                        .and_then(|g| g.polynomials.as_ref())
                        .map(|b| is_groebner_basis(b));
                    Ok(InstanceResult {
                        instance: label.clone(),
                        family: label.split('[').next().unwrap_or(label).to_string(),
                        dim: l.dim(),
                        field: l.kind().name(),
                        verdict: report.verdict,
                        groebner_criterion,
                        samples,
                        report,
                    })
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("decider thread")).collect()
    });
    let results = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let mut diagnostics = Vec::new();
    let mut violated = false;
    let mut unknown = false;
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{:<16} dim {:<2} {:<9} {}", r.instance, r.dim, r.field, r.verdict);
        match r.verdict {
            Verdict::Inadmissible => {}
            Verdict::Unknown => {
                unknown = true;
                diagnostics.push(format!("{}: UNKNOWN (degree cap {degree_cap})", r.instance));
            }
            Verdict::Admissible => {
                violated = true;
                diagnostics.push(format!("{}: ADMISSIBLE, contradicting the theorem", r.instance));
            }
        }
        if r.groebner_criterion == Some(false) {
            violated = true;
            diagnostics.push(format!("{}: Gröbner basis fails the Buchberger criterion", r.instance));
        }
        for c in r.samples.iter().filter(|c| c.is_mismatch()) {
            violated = true;
            diagnostics.push(format!("{}: sampled verdict differs: {c:?}", r.instance));
        }
    }
    let families: std::collections::BTreeSet<&str> = results.iter().map(|r| r.family.as_str()).collect();
    let (verdict, exit) = if violated {
        ("FAIL", EXIT_VIOLATION)
    } else if unknown {
        ("UNKNOWN", EXIT_UNKNOWN)
    } else {
        ("PASS", EXIT_OK)
    };
    let _ = writeln!(text, "{verdict}: {} instances over {} families", results.len(), families.len());
    let payload = json!({
        "degree_cap": degree_cap,
        "families": families.len(),
        "instances": results.len(),
        "all_inadmissible": results.iter().all(|r| r.verdict == Verdict::Inadmissible),
        "results": results,
    });
    let mut o = outcome(Value::String(verdict.into()), exit, payload, None, text);
    o.diagnostics = diagnostics;
    Ok(o)
}

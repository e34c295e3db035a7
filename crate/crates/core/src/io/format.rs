//! The algebra file format.
//!
//! ```text
//! # A_alpha
//! dim = 3
//! basis = x, y, z
//! field = Q(alpha)
//! kind = lie
//!
//! [brackets]
//! x,y = x
//! x,z = x + y
//! y,z = z + alpha*x
//!
//! [omega]
//! y,z = -1
//! ```
//!
//! Unlisted pairs are zero. Lie files list each bracket once; the
//! reversed pair is implied. Product files (`kind = lsa`) use a
//! `[products]` section with ordered pairs. Keys and values may be wrapped
//! in double quotes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{AlgebraError, OmegaForm, OmegaLieAlgebra, OmegaLsaAlgebra, StructureTensor};
use crate::field::{FieldElement, FieldKind};

use super::expr::ExprContext;
use super::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Lie,
    Lsa,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Lie => "lie",
            AlgebraKind::Lsa => "lsa",
        }
    }
}

/// A parsed algebra of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Lie(OmegaLieAlgebra),
    Lsa(OmegaLsaAlgebra),
}

impl Algebra {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            Algebra::Lie(_) => AlgebraKind::Lie,
            Algebra::Lsa(_) => AlgebraKind::Lsa,
        }
    }
}

#[derive(PartialEq)]
enum Section {
    Header,
    Table,
    Omega,
}

struct Entry {
    line: usize,
    key_col: usize,
    key: String,
    value_col: usize,
    value: String,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn unquote(s: &str, col: usize) -> (String, usize) {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    if t.len() >= 2 && t.starts_with('"') && t.ends_with('"') {
        (t[1..t.len() - 1].trim().to_string(), col + lead + 1)
    } else {
        (t.to_string(), col + lead)
    }
}

/// Parse, normalize and axiom-check an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<Algebra, ParseError> {
    let mut header: BTreeMap<String, (usize, usize, String)> = BTreeMap::new();
    let mut table: Vec<Entry> = Vec::new();
    let mut omega: Vec<Entry> = Vec::new();
    let mut table_name: Option<(usize, String)> = None;
    let mut section = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let trimmed = content.trim();
        if trimmed.starts_with('[') {
            if !trimmed.ends_with(']') {
                return Err(syntax(line, 1, "unterminated section header"));
            }
            let name = trimmed[1..trimmed.len() - 1].trim();
            section = match name {
                "brackets" | "products" => {
                    if let Some((first, _)) = &table_name {
                        return Err(syntax(line, 1, format!("second table section (first on line {first})")));
                    }
                    table_name = Some((line, name.to_string()));
                    Section::Table
                }
                "omega" => Section::Omega,
                other => return Err(syntax(line, 2, format!("unknown section `{other}`"))),
            };
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(syntax(line, 1, "expected `key = value`"));
        };
        let (key, key_col) = unquote(&content[..eq], 1);
        let (value, value_col) = unquote(&content[eq + 1..], eq + 2);
        if section == Section::Header {
            if header.insert(key.clone(), (line, value_col, value)).is_some() {
                return Err(ParseError::DuplicateEntry { line, key });
            }
            continue;
        }
        let entry = Entry {
            line,
            key_col,
            key,
            value_col,
            value,
        };
        match section {
            Section::Table => table.push(entry),
            Section::Omega => omega.push(entry),
            Section::Header => unreachable!(),
        }
    }

    let get = |k: &str| header.get(k).ok_or_else(|| syntax(1, 1, format!("missing header `{k}`")));
    let known = ["dim", "basis", "field", "kind"];
    if let Some((k, (line, _, _))) = header.iter().find(|(k, _)| !known.contains(&k.as_str())) {
        return Err(syntax(*line, 1, format!("unknown header `{k}`")));
    }

    let (kline, kcol, kval) = get("kind")?;
    let kind = match kval.as_str() {
        "lie" => AlgebraKind::Lie,
        "lsa" => AlgebraKind::Lsa,
        other => return Err(syntax(*kline, *kcol, format!("unknown kind `{other}` (expected lie or lsa)"))),
    };
    let (fline, fcol, fval) = get("field")?;
    let field: FieldKind = fval.parse().map_err(|m: String| syntax(*fline, *fcol, m))?;
    let (bline, bcol, bval) = get("basis")?;
    let basis: Vec<String> = if bval.is_empty() {
        Vec::new()
    } else {
        bval.split(',').map(|s| s.trim().to_string()).collect()
    };
    for (i, name) in basis.iter().enumerate() {
        let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
        if !valid || name == "alpha" {
            return Err(syntax(*bline, *bcol, format!("invalid basis name `{name}`")));
        }
        if basis[..i].contains(name) {
            return Err(syntax(*bline, *bcol, format!("basis name `{name}` repeated")));
        }
    }
    let (dline, dcol, dval) = get("dim")?;
    let dim: usize = dval
        .parse()
        .map_err(|_| syntax(*dline, *dcol, format!("invalid dimension `{dval}`")))?;
    if dim != basis.len() {
        return Err(syntax(*dline, *dcol, format!("dim = {dim} but {} basis names", basis.len())));
    }
    if let Some((line, name)) = &table_name {
        let expected = match kind {
            AlgebraKind::Lie => "brackets",
            AlgebraKind::Lsa => "products",
        };
        if name != expected {
            return Err(syntax(*line, 2, format!("kind = {} expects a [{expected}] section", kind.name())));
        }
    }

    let pair_of = |e: &Entry| -> Result<(usize, usize), ParseError> {
        let parts: Vec<&str> = e.key.split(',').collect();
        if parts.len() != 2 {
            return Err(syntax(e.line, e.key_col, format!("expected a pair `a,b`, found `{}`", e.key)));
        }
        let find = |s: &str| {
            let s = s.trim();
            basis
                .iter()
                .position(|b| b == s)
                .ok_or_else(|| syntax(e.line, e.key_col, format!("unknown basis name `{s}`")))
        };
        Ok((find(parts[0])?, find(parts[1])?))
    };
    let ctx_at = |e: &Entry| ExprContext {
        kind: field,
        basis: &basis,
        line: e.line,
        column: e.value_col,
    };

    let mut tensor = StructureTensor::zero(dim, field);
    let mut seen: BTreeMap<(usize, usize), String> = BTreeMap::new();
    for e in &table {
        let (i, j) = pair_of(e)?;
        if let Some(prev) = seen.get(&(i, j)) {
            return Err(ParseError::DuplicateEntry {
                line: e.line,
                key: prev.clone(),
            });
        }
        let v = ctx_at(e).vector(&e.value)?;
        match kind {
            AlgebraKind::Lie => {
                if let Some(prev) = seen.get(&(j, i)) {
                    return Err(ParseError::AntisymmetryDuplicate {
                        line: e.line,
                        first: prev.clone(),
                        second: e.key.clone(),
                    });
                }
                if i == j {
                    if v.iter().any(|x| !x.is_zero()) {
                        return Err(syntax(e.line, e.key_col, "bracket of an element with itself must be zero"));
                    }
                    continue;
                }
                let neg: Vec<FieldElement> = v.iter().map(|x| -x).collect();
                tensor.set_pair(j, i, &neg);
                tensor.set_pair(i, j, &v);
            }
            AlgebraKind::Lsa => tensor.set_pair(i, j, &v),
        }
        seen.insert((i, j), e.key.clone());
    }

    let mut form = OmegaForm::zero(dim, field);
    let mut seen_w: BTreeMap<(usize, usize), String> = BTreeMap::new();
    for e in &omega {
        let (i, j) = pair_of(e)?;
        let s = ctx_at(e).scalar(&e.value)?;
        if i == j {
            if !s.is_zero() {
                return Err(syntax(e.line, e.key_col, "omega of an element with itself must be zero"));
            }
            continue;
        }
        let canon = (i.min(j), i.max(j));
        if let Some(prev) = seen_w.get(&canon) {
            return Err(if (i, j) == canon || prev == &e.key {
                ParseError::DuplicateEntry {
                    line: e.line,
                    key: e.key.clone(),
                }
            } else {
                ParseError::AntisymmetryDuplicate {
                    line: e.line,
                    first: prev.clone(),
                    second: e.key.clone(),
                }
            });
        }
        seen_w.insert(canon, e.key.clone());
        form.set(i, j, s);
    }

    let lift = |e: AlgebraError| match e {
        AlgebraError::NotOmegaLie(r) => ParseError::NotOmegaLie(r),
        AlgebraError::NotOmegaLsa(r) => ParseError::NotOmegaLsa(r),
        other => syntax(1, 1, other.to_string()),
    };
    Ok(match kind {
        AlgebraKind::Lie => Algebra::Lie(OmegaLieAlgebra::new(basis, tensor, form).map_err(lift)?),
        AlgebraKind::Lsa => Algebra::Lsa(OmegaLsaAlgebra::new(basis, tensor, form).map_err(lift)?),
    })
}

fn coefficient_term(c: &FieldElement, name: &str) -> (bool, String) {
    if let Some(q) = c.as_rational() {
        let neg = q < num_rational::BigRational::from_integer(0.into());
        let mag = if neg { -q } else { q };
        let mag_s = FieldElement::Rational(mag.clone()).to_string();
        let body = if num_traits::One::is_one(&mag) {
            name.to_string()
        } else {
            format!("{mag_s}*{name}")
        };
        (neg, body)
    } else {
        (false, format!("({c})*{name}"))
    }
}

pub fn linear_combination(v: &[FieldElement], basis: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = coefficient_term(c, name);
        match (out.is_empty(), neg) {
            (true, true) => write!(out, "-{body}"),
            (true, false) => write!(out, "{body}"),
            (false, true) => write!(out, " - {body}"),
            (false, false) => write!(out, " + {body}"),
        }
        .expect("write to string");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn emit(
    title: &str,
    kind: AlgebraKind,
    field: FieldKind,
    basis: &[String],
    tensor: &StructureTensor,
    omega: &OmegaForm,
) -> String {
    let n = basis.len();
    let mut out = String::new();
    for line in title.lines() {
        writeln!(out, "# {line}").unwrap();
    }
    writeln!(out, "dim = {n}").unwrap();
    writeln!(out, "basis = {}", basis.join(", ")).unwrap();
    writeln!(out, "field = {field}").unwrap();
    writeln!(out, "kind = {}", kind.name()).unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "[{}]",
        match kind {
            AlgebraKind::Lie => "brackets",
            AlgebraKind::Lsa => "products",
        }
    )
    .unwrap();
    for i in 0..n {
        for j in 0..n {
            if kind == AlgebraKind::Lie && j <= i {
                continue;
            }
            let v = tensor.pair(i, j);
            if v.iter().all(FieldElement::is_zero) {
                continue;
            }
            writeln!(out, "{},{} = {}", basis[i], basis[j], linear_combination(&v, basis)).unwrap();
        }
    }
    writeln!(out).unwrap();
    writeln!(out, "[omega]").unwrap();
    for i in 0..n {
        for j in i + 1..n {
            let w = omega.get(i, j);
            if !w.is_zero() {
                writeln!(out, "{},{} = {}", basis[i], basis[j], w).unwrap();
            }
        }
    }
    out
}

pub fn emit_lie(l: &OmegaLieAlgebra, title: &str) -> String {
    emit(title, AlgebraKind::Lie, l.kind(), l.basis_names(), l.bracket(), l.omega())
}

pub fn emit_lsa(a: &OmegaLsaAlgebra, title: &str) -> String {
    emit(title, AlgebraKind::Lsa, a.kind(), a.basis_names(), a.product(), a.omega())
}

pub fn emit_algebra(a: &Algebra, title: &str) -> String {
    match a {
        Algebra::Lie(l) => emit_lie(l, title),
        Algebra::Lsa(s) => emit_lsa(s, title),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_ALPHA: &str = r#"# A_alpha
dim = 3
basis = x, y, z
field = Q(alpha)
kind = lie

[brackets]
"x,y" = "x"
"x,z" = "x + y"
"y,z" = "z + alpha*x"

[omega]
"y,z" = "-1"
"#;

    #[test]
    fn parses_a_alpha() {
        let Algebra::Lie(l) = parse_algebra_file(A_ALPHA).unwrap() else {
            panic!("expected a Lie algebra");
        };
        assert_eq!(l.dim(), 3);
        assert!(l.is_perfect());
        assert_eq!(l.bracket_of(2, 1)[0], -FieldElement::alpha());
        assert_eq!(*l.omega().get(2, 1), FieldElement::from_int(FieldKind::Rational, 1));
    }

    #[test]
    fn parses_abelian() {
        let text = "dim = 2\nbasis = a, b\nfield = Q\nkind = lie\n[brackets]\n[omega]\n";
        let Algebra::Lie(l) = parse_algebra_file(text).unwrap() else {
            panic!()
        };
        assert!(!l.is_perfect());
    }

    #[test]
    fn rejects_both_orders() {
        let text = "dim = 2\nbasis = a, b\nfield = Q\nkind = lie\n[brackets]\na,b = a\nb,a = -a\n";
        assert!(matches!(
            parse_algebra_file(text),
            Err(ParseError::AntisymmetryDuplicate { line: 7, .. })
        ));
    }

    #[test]
    fn reports_unknown_name_with_position() {
        let text = "dim = 2\nbasis = a, b\nfield = Q\nkind = lie\n[brackets]\na,b = a + c\n";
        assert_eq!(
            parse_algebra_file(text),
            Err(ParseError::Syntax {
                line: 6,
                column: 11,
                message: "unknown basis name `c`".into()
            })
        );
    }

    #[test]
    fn axiom_failure_is_structured() {
        let bad = A_ALPHA.replace("\"y,z\" = \"-1\"", "\"y,z\" = \"1\"");
        match parse_algebra_file(&bad) {
            Err(ParseError::NotOmegaLie(r)) => {
                assert_eq!(r.failures().next().unwrap().triple, (0, 1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn emit_then_parse() {
        let Algebra::Lie(l) = parse_algebra_file(A_ALPHA).unwrap() else {
            panic!()
        };
        let text = emit_lie(&l, "A_alpha");
        assert!(text.contains("y,z = (alpha)*x + z"), "{text}");
        assert_eq!(parse_algebra_file(&text).unwrap(), Algebra::Lie(l));
    }
}

//! Deciding whether an ω-Lie algebra is the commutator algebra of some
//! ω-left-symmetric product.
//!
//! The unknowns are the left multiplications `M_i = l_{e_i}`, flattened to
//! `n^3` coordinates: coordinate `i*n*n + r*n + c` is entry `(r, c)` of
//! `M_i`, the coefficient of `e_r` in `e_i e_c`. Linear consequences are
//! imposed first, then the module identity
//! `l_[u,v] = [l_u, l_v] + ω(u,v) id` is linearized as far as the
//! degree-2 truncation allows, and whatever quadratic system is left goes
//! to Buchberger.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{verify_witness, AlgebraError, OmegaLieAlgebra, StructureTensor};
use crate::field::{DenominatorLog, FieldElement, FieldKind};
use crate::groebner::{self, GroebnerOutcome, GroebnerStats, Monomial, MonomialOrder, Polynomial};
use crate::linalg::{AffineSpace, Matrix};

pub const DEFAULT_DEGREE_CAP: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("input is not an omega-Lie algebra: {0}")]
    NotOmegaLie(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum DeciderMode {
    /// Jacobi consequences and compatibility first, then propagation.
    #[default]
    #[serde(rename = "full")]
    Full,
    /// Operator identities only; compatibility is held back.
    #[serde(rename = "module_only")]
    ModuleOnly,
}

impl fmt::Display for DeciderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeciderMode::Full => "full",
            DeciderMode::ModuleOnly => "module_only",
        })
    }
}

impl std::str::FromStr for DeciderMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(DeciderMode::Full),
            "module_only" | "module-only" => Ok(DeciderMode::ModuleOnly),
            _ => Err(format!("unknown mode `{s}` (expected full or module-only)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub degree_cap: u32,
    pub mode: DeciderMode,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            degree_cap: DEFAULT_DEGREE_CAP,
            mode: DeciderMode::Full,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Admissible,
    Inadmissible,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Admissible => "ADMISSIBLE",
            Verdict::Inadmissible => "INADMISSIBLE",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// A system of linear equations `a x = b` over the unknown tuple.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub a: Matrix,
    pub b: Vec<FieldElement>,
}

impl LinearSystem {
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// Whether `x` satisfies every equation.
    pub fn satisfied_by(&self, x: &[FieldElement]) -> bool {
        let kind = self.a.kind();
        (0..self.len()).all(|r| crate::linalg::dot(self.a.row(r), x, kind) == self.b[r])
    }
}

fn coord(n: usize, i: usize, r: usize, c: usize) -> usize {
    (i * n + r) * n + c
}

fn build_system(n: usize, kind: FieldKind, rows: Vec<(Vec<FieldElement>, FieldElement)>) -> LinearSystem {
    let (a, b): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    LinearSystem {
        a: Matrix::from_rows(a, n * n * n, kind),
        b,
    }
}

/// `M_i e_j - M_j e_i = [e_i, e_j]` for all `i < j`.
pub fn compatibility_constraints(lie: &OmegaLieAlgebra) -> LinearSystem {
    let n = lie.dim();
    let kind = lie.kind();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let br = lie.bracket_of(i, j);
            for (r, target) in br.into_iter().enumerate() {
                let mut row = vec![FieldElement::zero(kind); n * n * n];
                row[coord(n, i, r, j)] = FieldElement::one(kind);
                row[coord(n, j, r, i)] = -FieldElement::one(kind);
                rows.push((row, target));
            }
        }
    }
    build_system(n, kind, rows)
}

/// For each triple `i < j < k`, `l_w = s id` where `w` is the ω-Jacobi
/// right-hand side and `s` the cyclic sum of `ω([e_i,e_j], e_k)`.
pub fn jacobi_consequence_constraints(lie: &OmegaLieAlgebra) -> LinearSystem {
    let n = lie.dim();
    let kind = lie.kind();
    let om = lie.omega();
    let omega_of = |v: &[FieldElement], k: usize| {
        let mut acc = FieldElement::zero(kind);
        for (m, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * om.get(m, k));
            }
        }
        acc
    };
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut w = vec![FieldElement::zero(kind); n];
                w[k] += om.get(i, j);
                w[i] += om.get(j, k);
                w[j] += om.get(k, i);
                let s = &(&omega_of(&lie.bracket_of(i, j), k) + &omega_of(&lie.bracket_of(j, k), i))
                    + &omega_of(&lie.bracket_of(k, i), j);
                if w.iter().all(FieldElement::is_zero) && s.is_zero() {
                    continue;
                }
                for r in 0..n {
                    for c in 0..n {
                        let mut row = vec![FieldElement::zero(kind); n * n * n];
                        for (m, wm) in w.iter().enumerate() {
                            row[coord(n, m, r, c)] = wm.clone();
                        }
                        let rhs = if r == c { s.clone() } else { FieldElement::zero(kind) };
                        rows.push((row, rhs));
                    }
                }
            }
        }
    }
    build_system(n, kind, rows)
}

/// Monomial key of degree at most two; the derived order puts quadratic
/// terms first so the first entry of a map is a leading term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Quad(usize, usize),
    Lin(usize),
    Const,
}

type Quadratic = BTreeMap<Key, FieldElement>;

/// `c0 + sum c_t p_t`.
#[derive(Clone, Debug)]
struct Affine {
    c0: FieldElement,
    lin: Vec<(usize, FieldElement)>,
}

fn add_into(acc: &mut Quadratic, key: Key, v: FieldElement) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(x) => {
            *x += &v;
            if x.is_zero() {
                acc.remove(&key);
            }
        }
        None => {
            acc.insert(key, v);
        }
    }
}

/// `acc += sign * a * b`.
fn add_product(acc: &mut Quadratic, a: &Affine, b: &Affine, negate: bool) {
    let sgn = |v: FieldElement| if negate { -v } else { v };
    if !a.c0.is_zero() && !b.c0.is_zero() {
        add_into(acc, Key::Const, sgn(&a.c0 * &b.c0));
    }
    if !a.c0.is_zero() {
        for (t, c) in &b.lin {
            add_into(acc, Key::Lin(*t), sgn(&a.c0 * c));
        }
    }
    if !b.c0.is_zero() {
        for (t, c) in &a.lin {
            add_into(acc, Key::Lin(*t), sgn(&b.c0 * c));
        }
    }
    for (s, x) in &a.lin {
        for (t, y) in &b.lin {
            add_into(acc, Key::Quad(*s.min(t), *s.max(t)), sgn(x * y));
        }
    }
}

fn add_affine(acc: &mut Quadratic, a: &Affine, scale: &FieldElement) {
    if scale.is_zero() {
        return;
    }
    add_into(acc, Key::Const, &a.c0 * scale);
    for (t, c) in &a.lin {
        add_into(acc, Key::Lin(*t), c * scale);
    }
}

/// Coordinate forms of a nonempty space in its own parameters.
fn parametrize(space: &AffineSpace) -> Vec<Affine> {
    let origin = space.origin().expect("nonempty space");
    let mut forms: Vec<Affine> = origin
        .iter()
        .map(|o| Affine {
            c0: o.clone(),
            lin: Vec::new(),
        })
        .collect();
    for (t, row) in space.basis().iter().enumerate() {
        for (q, x) in row.iter().enumerate() {
            if !x.is_zero() {
                forms[q].lin.push((t, x.clone()));
            }
        }
    }
    forms
}

/// Column of each basis row's leading one; `x[pivot_t] = p_t` on the space.
fn pivots(space: &AffineSpace) -> Vec<usize> {
    space
        .basis()
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

fn quadratic_residuals(lie: &OmegaLieAlgebra, space: &AffineSpace) -> Vec<Quadratic> {
    let n = lie.dim();
    let kind = lie.kind();
    let forms = parametrize(space);
    let m = |i: usize, r: usize, c: usize| &forms[coord(n, i, r, c)];
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let br = lie.bracket_of(i, j);
            let w = lie.omega().get(i, j);
            for r in 0..n {
                for c in 0..n {
                    let mut acc = Quadratic::new();
                    for (k, coef) in br.iter().enumerate() {
                        add_affine(&mut acc, m(k, r, c), coef);
                    }
                    for s in 0..n {
                        add_product(&mut acc, m(i, r, s), m(j, s, c), true);
                        add_product(&mut acc, m(j, r, s), m(i, s, c), false);
                    }
                    if r == c && !w.is_zero() {
                        add_into(&mut acc, Key::Const, -w.clone());
                    }
                    if !acc.is_empty() {
                        out.push(acc);
                    }
                }
            }
        }
    }
    let _ = kind;
    out
}

fn to_polynomial(q: &Quadratic, nvars: usize) -> Polynomial {
    let terms = q
        .iter()
        .map(|(k, c)| {
            let mono = match *k {
                Key::Const => Monomial::one(nvars),
                Key::Lin(t) => Monomial::var(nvars, t),
                Key::Quad(s, t) => Monomial::var(nvars, s).mul(&Monomial::var(nvars, t)),
            };
            (mono, c.clone())
        })
        .collect();
    Polynomial::from_terms(nvars, MonomialOrder::DegRevLex, terms)
}

/// The module identity residuals `l_[e_i,e_j] - [M_i, M_j] - ω_ij id`
/// for `i < j`, as polynomials in the space's parameters.
pub fn module_identity_residuals(lie: &OmegaLieAlgebra, space: &AffineSpace) -> Vec<Polynomial> {
    let d = space.dim().expect("nonempty space");
    quadratic_residuals(lie, space).iter().map(|q| to_polynomial(q, d)).collect()
}

/// Row echelon form by leading-key elimination. Pivot rows are monic.
fn echelon(rows: Vec<Quadratic>, log: &mut DenominatorLog) -> Vec<Quadratic> {
    let mut pivots: BTreeMap<Key, Quadratic> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, lc)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(p) => {
                    let f = lc.clone();
                    for (k, v) in p {
                        add_into(&mut row, *k, -(&f * v));
                    }
                }
                None => {
                    let inv = if lc.is_one() {
                        None
                    } else {
                        log.record_inverse(lc);
                        Some(lc.inv().expect("nonzero lead"))
                    };
                    if let Some(inv) = inv {
                        for v in row.values_mut() {
                            *v = &*v * &inv;
                        }
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.into_values().collect()
}

/// Reduce every non-leading term of the pivot rows against the other pivots.
fn back_substitute(rows: &mut [Quadratic]) {
    let leads: Vec<Key> = rows.iter().map(|r| *r.keys().next().expect("nonzero")).collect();
    for i in (0..rows.len()).rev() {
        for j in 0..rows.len() {
            if i == j {
                continue;
            }
            if let Some(f) = rows[j].get(&leads[i]).cloned() {
                let pivot = rows[i].clone();
                for (k, v) in &pivot {
                    add_into(&mut rows[j], *k, -(&f * v));
                }
            }
        }
    }
}

/// One constraint stage of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub name: String,
    /// Equations contributed by this stage.
    pub equations: usize,
    /// Dimension of the solution space afterwards, `None` when empty.
    pub dim: Option<usize>,
    /// The operators `l_{e_i}`, once the space is a single point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pinned: Option<Vec<PinnedOperator>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinnedOperator {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

/// Result of [`propagate`].
#[derive(Clone, Debug)]
pub struct Propagation {
    pub space: AffineSpace,
    /// Remaining residuals, each with a quadratic leading term.
    pub residuals: Vec<Polynomial>,
    pub stages: Vec<Stage>,
    pub denominators: DenominatorLog,
}

impl Propagation {
    /// The operator tuple when the space is a single point.
    pub fn operators(&self, n: usize) -> Option<Vec<Matrix>> {
        if self.space.dim() != Some(0) {
            return None;
        }
        Some(operators_at(n, self.space.origin()?, self.space.kind()))
    }
}

/// `l_{e_i}` read off a point of the unknown space.
pub fn operators_at(n: usize, point: &[FieldElement], kind: FieldKind) -> Vec<Matrix> {
    (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n, kind);
            for r in 0..n {
                for c in 0..n {
                    m[(r, c)] = point[coord(n, i, r, c)].clone();
                }
            }
            m
        })
        .collect()
}

/// The product tensor at a point of the unknown space.
pub fn product_at(n: usize, point: &[FieldElement], kind: FieldKind) -> StructureTensor {
    let mut t = StructureTensor::zero(n, kind);
    for i in 0..n {
        for r in 0..n {
            for c in 0..n {
                t.set(i, c, r, point[coord(n, i, r, c)].clone());
            }
        }
    }
    t
}

/// The unknown-space point of a product tensor.
pub fn point_of(product: &StructureTensor) -> Vec<FieldElement> {
    let n = product.dim();
    let mut p = vec![FieldElement::zero(product.kind()); n * n * n];
    for i in 0..n {
        for r in 0..n {
            for c in 0..n {
                p[coord(n, i, r, c)] = product.get(i, c, r).clone();
            }
        }
    }
    p
}

struct Run<'a> {
    lie: &'a OmegaLieAlgebra,
    stages: Vec<Stage>,
    log: DenominatorLog,
    /// Residuals of the round that emptied the space, in that round's
    /// parameters. They generate the unit ideal.
    refutation: Option<Vec<Polynomial>>,
}

impl<'a> Run<'a> {
    fn new(lie: &'a OmegaLieAlgebra) -> Self {
        let mut log = DenominatorLog::new();
        for v in lie.bracket().values().iter().chain(lie.omega().matrix().to_rows().iter().flatten()) {
            log.record_value(v);
        }
        Run {
            lie,
            stages: Vec::new(),
            log,
            refutation: None,
        }
    }

    fn stage(&mut self, name: &str, equations: usize, space: &AffineSpace) {
        let pinned = (space.dim() == Some(0)).then(|| {
            let n = self.lie.dim();
            operators_at(n, space.origin().expect("point"), space.kind())
                .into_iter()
                .zip(self.lie.basis_names())
                .map(|(m, name)| PinnedOperator {
                    name: format!("l_{name}"),
                    matrix: m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
                })
                .collect()
        });
        self.stages.push(Stage {
            name: name.to_string(),
            equations,
            dim: space.dim(),
            pinned,
        });
    }

    fn impose(&mut self, name: &str, space: &AffineSpace, sys: &LinearSystem) -> AffineSpace {
        let out = space.intersect_logged(&sys.a, &sys.b, &mut self.log);
        self.stage(name, sys.len(), &out);
        out
    }

    /// Harvest linear consequences of the residuals until nothing changes.
    fn saturate(&mut self, mut space: AffineSpace, label: &str) -> (AffineSpace, Vec<Quadratic>) {
        let n3 = space.ambient_dim();
        let mut round = 0;
        loop {
            if space.is_empty() {
                return (space, Vec::new());
            }
            round += 1;
            let raw = quadratic_residuals(self.lie, &space);
            let rows = echelon(raw.clone(), &mut self.log);
            let (linear, quadratic): (Vec<_>, Vec<_>) = rows
                .into_iter()
                .partition(|r| !matches!(r.keys().next(), Some(Key::Quad(..))));
            if linear.is_empty() {
                let mut quadratic = quadratic;
                back_substitute(&mut quadratic);
                return (space, quadratic);
            }
            let piv = pivots(&space);
            let kind = space.kind().join(self.lie.kind());
            let mut a = Vec::with_capacity(linear.len());
            let mut b = Vec::with_capacity(linear.len());
            for row in &linear {
                let mut coeffs = vec![FieldElement::zero(kind); n3];
                let mut rhs = FieldElement::zero(kind);
                for (k, v) in row {
                    match *k {
                        Key::Lin(t) => coeffs[piv[t]] = v.clone(),
                        Key::Const => rhs = -v.clone(),
                        Key::Quad(..) => unreachable!("partitioned"),
                    }
                }
                a.push(coeffs);
                b.push(rhs);
            }
            let sys = LinearSystem {
                a: Matrix::from_rows(a, n3, kind),
                b,
            };
            let d = space.dim().unwrap_or(0);
            space = self.impose(&format!("{label} round {round}"), &space, &sys);
            if space.is_empty() {
                let gens = raw.iter().map(|q| to_polynomial(q, d)).filter(|p| !p.is_zero()).collect();
                self.refutation = Some(gens);
            }
        }
    }

    fn finish(self, space: AffineSpace, quadratic: Vec<Quadratic>) -> Propagation {
        let d = space.dim().unwrap_or(0);
        Propagation {
            residuals: quadratic.iter().map(|q| to_polynomial(q, d)).collect(),
            space,
            stages: self.stages,
            denominators: self.log,
        }
    }
}

fn check_input(lie: &OmegaLieAlgebra) -> Result<(), AdmissibilityError> {
    let report = lie.check()?;
    if report.passed() {
        Ok(())
    } else {
        Err(AdmissibilityError::NotOmegaLie(report.to_string()))
    }
}

/// Impose the linear constraints of `mode`, then linearize the module
/// identity to a fixed point.
pub fn propagate(lie: &OmegaLieAlgebra, mode: DeciderMode) -> Result<Propagation, AdmissibilityError> {
    check_input(lie)?;
    let n = lie.dim();
    let mut run = Run::new(lie);
    let full = AffineSpace::full(n * n * n, lie.kind());
    let mut space = run.impose("jacobi consequences", &full, &jacobi_consequence_constraints(lie));
    if mode == DeciderMode::Full {
        space = run.impose("compatibility", &space, &compatibility_constraints(lie));
    }
    let (space, quadratic) = run.saturate(space, "module identity");
    Ok(run.finish(space, quadratic))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerSummary {
    pub variables: usize,
    pub generators: Vec<String>,
    /// Reduced basis, absent when the degree cap was hit.
    pub basis: Option<Vec<String>>,
    pub contains_one: Option<bool>,
    pub stats: GroebnerStats,
    #[serde(skip)]
    pub polynomials: Option<Vec<Polynomial>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annotation: Option<String>,
    #[serde(skip)]
    pub witness: Option<StructureTensor>,
    /// Nonzero products of the witness, `left * right = value`.
    #[serde(rename = "witness")]
    pub witness_products: Option<Vec<WitnessEntry>>,
    pub certificate: Vec<Stage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerSummary>,
    pub settings: Settings,
    /// Polynomials in alpha that were inverted; specializing at a root of
    /// any of them is not covered by this run.
    pub denominators: Vec<String>,
    #[serde(skip)]
    pub denominator_log: DenominatorLog,
}

impl AdmissibilityReport {
    /// Whether the verdict carries over to `alpha = at`.
    pub fn specializes_at(&self, at: &BigRational) -> bool {
        self.denominator_log.vanishing_at(at).is_none()
    }
}

fn witness_entries(lie: &OmegaLieAlgebra, t: &StructureTensor) -> Vec<WitnessEntry> {
    let names = lie.basis_names();
    let mut out = Vec::new();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let v = t.pair(i, j);
            if v.iter().all(FieldElement::is_zero) {
                continue;
            }
            out.push(WitnessEntry {
                left: names[i].clone(),
                right: names[j].clone(),
                value: crate::io::format_vector(&v, names),
            });
        }
    }
    out
}

fn summarize(gens: &[Polynomial], r: &groebner::GroebnerResult) -> GroebnerSummary {
    let basis = r.basis();
    GroebnerSummary {
        variables: gens.first().map_or(0, Polynomial::nvars),
        generators: gens.iter().map(ToString::to_string).collect(),
        basis: basis.map(|b| b.iter().map(ToString::to_string).collect()),
        contains_one: groebner::contains_one(r),
        stats: r.stats.clone(),
        polynomials: basis.map(<[Polynomial]>::to_vec),
    }
}

/// Candidate values tried when fixing a free parameter.
fn candidates(kind: FieldKind) -> Vec<FieldElement> {
    [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2)]
        .iter()
        .map(|&(p, q)| FieldElement::fraction(kind, p, q).expect("nonzero denominator"))
        .collect()
}

fn vanishes_at_origin(quad: &[Quadratic]) -> bool {
    quad.iter().all(|q| q.get(&Key::Const).is_none())
}

/// Fix free parameters one at a time until the residuals vanish at the
/// origin of the remaining space. A value is rejected when it empties the
/// space or makes the residual ideal trivial; a capped Gröbner run does
/// not reject. Best effort.
fn search_witness(run: &mut Run<'_>, mut space: AffineSpace, mut quad: Vec<Quadratic>, cap: u32) -> Option<Vec<FieldElement>> {
    let n3 = space.ambient_dim();
    let kind = space.kind();
    loop {
        if vanishes_at_origin(&quad) {
            return space.origin().map(<[FieldElement]>::to_vec);
        }
        if space.dim()? == 0 {
            return None;
        }
        let pivot = pivots(&space)[0];
        let mut next = None;
        for v in candidates(kind) {
            let mut row = vec![FieldElement::zero(kind); n3];
            row[pivot] = FieldElement::one(kind);
            let mut scratch = Run {
                lie: run.lie,
                stages: Vec::new(),
                log: DenominatorLog::new(),
                refutation: None,
            };
            let fixed = space.intersect_logged(&Matrix::from_rows(vec![row], n3, kind), &[v], &mut scratch.log);
            let (sub, sub_quad) = scratch.saturate(fixed, "witness");
            if sub.is_empty() {
                continue;
            }
            let viable = vanishes_at_origin(&sub_quad) || {
                let d = sub.dim().unwrap_or(0);
                let gens: Vec<Polynomial> = sub_quad.iter().map(|q| to_polynomial(q, d)).collect();
                let r = groebner::buchberger_logged(&gens, MonomialOrder::DegRevLex, cap, &mut scratch.log);
                groebner::contains_one(&r) != Some(true)
            };
            if viable {
                run.log.merge(&scratch.log);
                next = Some((sub, sub_quad));
                break;
            }
        }
        (space, quad) = next?;
    }
}

/// Decide with default settings.
pub fn decide_admissible(lie: &OmegaLieAlgebra, degree_cap: u32) -> Result<AdmissibilityReport, AdmissibilityError> {
    decide_with(
        lie,
        Settings {
            degree_cap,
            mode: DeciderMode::Full,
        },
    )
}

/// In `ModuleOnly` mode the operator identities are exhausted first and
/// compatibility is imposed afterwards, so the certificate follows the
/// hand derivation; the verdict is the same in both modes.
pub fn decide_with(lie: &OmegaLieAlgebra, settings: Settings) -> Result<AdmissibilityReport, AdmissibilityError> {
    check_input(lie)?;
    let n = lie.dim();
    let mut run = Run::new(lie);
    let full = AffineSpace::full(n * n * n, lie.kind());
    let mut space = run.impose("jacobi consequences", &full, &jacobi_consequence_constraints(lie));
    let compat = compatibility_constraints(lie);
    let quadratic = match settings.mode {
        DeciderMode::Full => {
            space = run.impose("compatibility", &space, &compat);
            let (s, q) = run.saturate(space, "module identity");
            space = s;
            q
        }
        DeciderMode::ModuleOnly => {
            let (s, _) = run.saturate(space, "module identity");
            space = run.impose("compatibility", &s, &compat);
            let (s, q) = run.saturate(space, "module identity after compatibility");
            space = s;
            q
        }
    };

    let mut report = AdmissibilityReport {
        verdict: Verdict::Unknown,
        annotation: None,
        witness: None,
        witness_products: None,
        certificate: Vec::new(),
        groebner: None,
        settings,
        denominators: Vec::new(),
        denominator_log: DenominatorLog::new(),
    };

    if space.is_empty() {
        report.verdict = Verdict::Inadmissible;
        run.stages.push(Stage {
            name: "linear infeasibility".into(),
            equations: 0,
            dim: None,
            pinned: None,
        });
        // independent check: the residuals that forced the contradiction
        // must generate the unit ideal
        if let Some(gens) = run.refutation.take() {
            let r = groebner::buchberger_logged(&gens, MonomialOrder::DegRevLex, settings.degree_cap, &mut run.log);
            run.stages.push(Stage {
                name: "groebner refutation".into(),
                equations: gens.len(),
                dim: None,
                pinned: None,
            });
            if groebner::contains_one(&r) == Some(false) {
                report.verdict = Verdict::Unknown;
                report.annotation = Some("linear and Groebner refutations disagree".into());
            }
            report.groebner = Some(summarize(&gens, &r));
        }
    } else {
        let point = if vanishes_at_origin(&quadratic) {
            space.origin().map(<[FieldElement]>::to_vec)
        } else {
            let d = space.dim().unwrap_or(0);
            let gens: Vec<Polynomial> = quadratic.iter().map(|q| to_polynomial(q, d)).collect();
            let r = groebner::buchberger_logged(&gens, MonomialOrder::DegRevLex, settings.degree_cap, &mut run.log);
            report.groebner = Some(summarize(&gens, &r));
            run.stages.push(Stage {
                name: "groebner".into(),
                equations: gens.len(),
                dim: space.dim(),
                pinned: None,
            });
            match r.outcome {
                GroebnerOutcome::CapExceeded => None,
                GroebnerOutcome::Basis(ref b) if b.iter().any(Polynomial::is_unit) => {
                    report.verdict = Verdict::Inadmissible;
                    None
                }
                GroebnerOutcome::Basis(_) => {
                    report.verdict = Verdict::Admissible;
                    search_witness(&mut run, space.clone(), quadratic.clone(), settings.degree_cap)
                }
            }
        };
        if let Some(p) = point {
            let product = product_at(n, &p, lie.kind());
            // witnesses are always re-verified from scratch
            assert!(verify_witness(lie, &product), "decider produced an invalid witness");
            report.verdict = Verdict::Admissible;
            report.witness_products = Some(witness_entries(lie, &product));
            report.witness = Some(product);
            run.stages.push(Stage {
                name: "witness".into(),
                equations: 0,
                dim: Some(0),
                pinned: None,
            });
        } else if report.verdict == Verdict::Admissible {
            report.annotation = Some("exists over closure".into());
        }
    }
    report.certificate = run.stages;
    report.denominators = run.log.polys().map(ToString::to_string).collect();
    report.denominator_log = run.log;
    Ok(report)
}

/// Outcome of re-deciding at a rational value of alpha.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SampleOutcome {
    Coherent { alpha: String, verdict: Verdict },
    /// A recorded denominator, or the algebra itself, degenerates here.
    Skipped { alpha: String, reason: String },
    Mismatch { alpha: String, generic: Verdict, special: Verdict },
}

impl SampleOutcome {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, SampleOutcome::Mismatch { .. })
    }
}

/// Re-decide `lie` at `alpha = at` and compare with `generic`.
pub fn check_sample(lie: &OmegaLieAlgebra, generic: &AdmissibilityReport, at: &BigRational) -> SampleOutcome {
    let alpha = at.to_string();
    if let Some(p) = generic.denominator_log.vanishing_at(at) {
        return SampleOutcome::Skipped {
            alpha,
            reason: format!("denominator {p} vanishes"),
        };
    }
    let special = match lie.specialize(at) {
        Ok(s) => s,
        Err(e) => return SampleOutcome::Skipped { alpha, reason: e.to_string() },
    };
    match decide_with(&special, generic.settings) {
        Ok(r) if r.verdict == generic.verdict => SampleOutcome::Coherent { alpha, verdict: r.verdict },
        Ok(r) => SampleOutcome::Mismatch {
            alpha,
            generic: generic.verdict,
            special: r.verdict,
        },
        Err(e) => SampleOutcome::Skipped { alpha, reason: e.to_string() },
    }
}

//! Built-in algebra families.
//!
//! The perfect nontrivial ω-Lie algebras (three of dimension 3, five of
//! dimension 4, and the two extension types of dimension at least 5) and
//! the two 3-dimensional ω-left-symmetric families. Brackets not listed
//! in a family's table are zero.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{AlgebraError, OmegaForm, OmegaLieAlgebra, OmegaLsaAlgebra, StructureTensor};
use crate::field::{FieldElement, FieldKind};
use crate::io::{Algebra, AlgebraKind, ExprContext, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` has no parameter `{param}`")]
    UnknownParameter { family: String, param: String },
    #[error("family `{family}` needs parameter `{param}` over Q")]
    MissingParameter { family: String, param: String },
    #[error("parameter `{param}`: {source}")]
    BadParameter { param: String, source: ParseError },
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error(transparent)]
    Axiom(#[from] AlgebraError),
}

/// How the dimension of a family is determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimRule {
    Fixed(usize),
    /// Smallest dimension; grows with the extension space.
    AtLeast(usize),
}

impl DimRule {
    pub fn admits(self, dim: usize) -> bool {
        match self {
            DimRule::Fixed(n) => dim == n,
            DimRule::AtLeast(n) => dim >= n,
        }
    }
}

impl std::fmt::Display for DimRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimRule::Fixed(n) => write!(f, "{n}"),
            DimRule::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSlot {
    pub name: &'static str,
    /// Value used when the parameter is omitted; `None` means the formal
    /// parameter over `Q(alpha)` and is required over `Q`.
    pub default: Option<&'static str>,
    pub description: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub display: &'static str,
    pub kind: AlgebraKind,
    pub dim_rule: DimRule,
    pub params: Vec<ParamSlot>,
    pub conditions: &'static str,
}

const ALPHA: ParamSlot = ParamSlot {
    name: "alpha",
    default: None,
    description: "family parameter; formal over Q(alpha)",
};

fn lsa_params() -> Vec<ParamSlot> {
    ["a1", "a2", "a3"]
        .into_iter()
        .map(|name| ParamSlot {
            name,
            default: Some("0"),
            description: "rational family parameter",
        })
        .collect()
}

/// Every entry, perfect ω-Lie algebras first, in a fixed order.
pub fn list_entries() -> Vec<CatalogEntry> {
    use AlgebraKind::*;
    use DimRule::*;
    let e = |name, display, kind, dim_rule, params, conditions| CatalogEntry {
        name,
        display,
        kind,
        dim_rule,
        params,
        conditions,
    };
    vec![
        e("A_alpha", "A_α", Lie, Fixed(3), vec![ALPHA], ""),
        e("B", "B", Lie, Fixed(3), vec![], ""),
        e("C_alpha", "C_α", Lie, Fixed(3), vec![ALPHA], "alpha != 0, -1"),
        e("G1_alpha", "G_{1,α}", Lie, Fixed(4), vec![ALPHA], ""),
        e("H1_alpha", "H_{1,α}", Lie, Fixed(4), vec![ALPHA], ""),
        e("A_tilde_alpha", "Ã_α", Lie, Fixed(4), vec![ALPHA], ""),
        e("B_tilde", "B̃", Lie, Fixed(4), vec![], ""),
        e("C_tilde_alpha", "C̃_α", Lie, Fixed(4), vec![ALPHA], "alpha != 0, -1"),
        e(
            "P1",
            "P1",
            Lie,
            AtLeast(5),
            vec![
                ParamSlot { name: "n", default: Some("2"), description: "dim H1 (basis f1..fn), at least 2" },
                ParamSlot { name: "a", default: Some("1"), description: "nonzero scalar" },
                ParamSlot { name: "h1", default: Some("h0"), description: "vector in span(h0) + H1" },
                ParamSlot { name: "h2", default: Some("f1"), description: "vector in H1" },
            ],
            "a != 0, h1 in span(h0)+H1, h2 in H1",
        ),
        e(
            "P2",
            "P2",
            Lie,
            AtLeast(5),
            vec![
                ParamSlot { name: "n", default: Some("2"), description: "dim H (basis f1..fn), at least 2" },
                ParamSlot { name: "h1", default: Some("f1"), description: "vector in H" },
                ParamSlot { name: "h2", default: Some("f2"), description: "vector in H" },
                ParamSlot { name: "h3", default: Some("0"), description: "vector in H" },
                ParamSlot { name: "b1", default: Some("1"), description: "nonzero scalar" },
                ParamSlot { name: "b2", default: Some("0"), description: "scalar" },
                ParamSlot { name: "c1", default: Some("-2"), description: "nonzero scalar" },
            ],
            "b1 != 0, c1 != 0, b1 + c1 + 1 = 0, h1, h2, h3 in H",
        ),
        e("LSA3_1", "LSA3-1", Lsa, Fixed(3), lsa_params(), ""),
        e("LSA3_2", "LSA3-2", Lsa, Fixed(3), lsa_params(), ""),
    ]
}

/// Entries of one kind, optionally restricted to a dimension.
pub fn query(kind: AlgebraKind, dim: Option<usize>) -> Vec<CatalogEntry> {
    list_entries()
        .into_iter()
        .filter(|e| e.kind == kind && dim.is_none_or(|d| e.dim_rule.admits(d) && matches!(e.dim_rule, DimRule::Fixed(_))))
        .collect()
}

pub fn entry(name: &str) -> Option<CatalogEntry> {
    list_entries().into_iter().find(|e| e.name == name)
}

/// Names of the ten perfect ω-Lie families.
pub fn perfect_family_names() -> Vec<&'static str> {
    list_entries()
        .into_iter()
        .filter(|e| e.kind == AlgebraKind::Lie)
        .map(|e| e.name)
        .collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Bracket table builder: `set(i, j, v)` also fills `[e_j, e_i] = -v`.
struct Table {
    n: usize,
    kind: FieldKind,
    bracket: StructureTensor,
    omega: OmegaForm,
}

impl Table {
    fn new(n: usize, kind: FieldKind) -> Self {
        Table {
            n,
            kind,
            bracket: StructureTensor::zero(n, kind),
            omega: OmegaForm::zero(n, kind),
        }
    }

    fn vec(&self, terms: &[(usize, &FieldElement)]) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(self.kind); self.n];
        for (i, c) in terms {
            v[*i] = &v[*i] + c;
        }
        v
    }

    fn set(&mut self, i: usize, j: usize, v: Vec<FieldElement>) {
        let neg: Vec<FieldElement> = v.iter().map(|x| -x).collect();
        self.bracket.set_pair(i, j, &v);
        self.bracket.set_pair(j, i, &neg);
    }

    fn finish(self, basis: Vec<String>) -> Result<OmegaLieAlgebra, CatalogError> {
        Ok(OmegaLieAlgebra::new(basis, self.bracket, self.omega)?)
    }
}

fn int(kind: FieldKind, n: i64) -> FieldElement {
    FieldElement::from_int(kind, n)
}

fn require_generic(alpha: &FieldElement, family: &str) -> Result<(), CatalogError> {
    let kind = alpha.kind();
    if alpha.is_zero() || (alpha + &int(kind, 1)).is_zero() {
        return Err(CatalogError::SideCondition(format!("{family} requires alpha != 0, -1 (got {alpha})")));
    }
    Ok(())
}

/// `A_α`, basis `x, y, z`.
pub fn a_alpha(alpha: &FieldElement) -> Result<OmegaLieAlgebra, CatalogError> {
    let k = alpha.kind();
    let one = int(k, 1);
    let mut t = Table::new(3, k);
    let (x, y, z) = (0, 1, 2);
    t.set(x, y, t.vec(&[(x, &one)]));
    t.set(x, z, t.vec(&[(x, &one), (y, &one)]));
    t.set(y, z, t.vec(&[(z, &one), (x, alpha)]));
    t.omega.set(y, z, int(k, -1));
    t.finish(names(&["x", "y", "z"]))
}

/// `B`, basis `x, y, z`.
pub fn b(kind: FieldKind) -> Result<OmegaLieAlgebra, CatalogError> {
    let one = int(kind, 1);
    let mut t = Table::new(3, kind);
    let (x, y, z) = (0, 1, 2);
    t.set(x, y, t.vec(&[(y, &one)]));
    t.set(x, z, t.vec(&[(y, &one), (z, &one)]));
    t.set(y, z, t.vec(&[(x, &one)]));
    t.omega.set(y, z, int(kind, 2));
    t.finish(names(&["x", "y", "z"]))
}

/// `C_α` (α ≠ 0, −1), basis `x, y, z`.
pub fn c_alpha(alpha: &FieldElement) -> Result<OmegaLieAlgebra, CatalogError> {
    require_generic(alpha, "C_alpha")?;
    let k = alpha.kind();
    let one = int(k, 1);
    let mut t = Table::new(3, k);
    let (x, y, z) = (0, 1, 2);
    t.set(x, y, t.vec(&[(y, &one)]));
    t.set(x, z, t.vec(&[(z, alpha)]));
    t.set(y, z, t.vec(&[(x, &one)]));
    t.omega.set(y, z, alpha + &one);
    t.finish(names(&["x", "y", "z"]))
}

const XYZE: [&str; 4] = ["x", "y", "z", "e"];

/// `G_{1,α}`, basis `x, y, z, e`.
pub fn g1_alpha(alpha: &FieldElement) -> Result<OmegaLieAlgebra, CatalogError> {
    let k = alpha.kind();
    let one = int(k, 1);
    let m1 = int(k, -1);
    let mut t = Table::new(4, k);
    let (x, y, z, e) = (0, 1, 2, 3);
    t.set(e, x, t.vec(&[(e, &one), (y, alpha)]));
    t.set(e, y, t.vec(&[(e, &m1), (x, &one)]));
    t.set(y, z, t.vec(&[(z, &one)]));
    t.set(x, y, t.vec(&[(y, &one)]));
    t.omega.set(e, x, alpha.clone());
    t.omega.set(x, y, one.clone());
    t.finish(names(&XYZE))
}

/// `H_{1,α}`, basis `x, y, z, e`.
pub fn h1_alpha(alpha: &FieldElement) -> Result<OmegaLieAlgebra, CatalogError> {
    let k = alpha.kind();
    let one = int(k, 1);
    let m1 = int(k, -1);
    let mut t = Table::new(4, k);
    let (x, y, z, e) = (0, 1, 2, 3);
    t.set(e, x, t.vec(&[(e, &one), (y, alpha)]));
    t.set(e, y, t.vec(&[(e, &m1), (x, &one), (z, &one)]));
    t.set(y, z, t.vec(&[(z, &one)]));
    t.set(x, y, t.vec(&[(y, &one)]));
    t.omega.set(e, x, alpha.clone());
    t.omega.set(x, y, one.clone());
    t.finish(names(&XYZE))
}

/// `Ã_α`, basis `x, y, z, e`.
pub fn a_tilde_alpha(alpha: &FieldElement) -> Result<OmegaLieAlgebra, CatalogError> {
    let k = alpha.kind();
    let one = int(k, 1);
    let mut t = Table::new(4, k);
    let (x, y, z, e) = (0, 1, 2, 3);
    t.set(x, y, t.vec(&[(x, &one)]));
    t.set(x, z, t.vec(&[(x, &one), (y, &one)]));
    t.set(y, z, t.vec(&[(z, &one), (x, alpha)]));
    t.set(e, z, t.vec(&[(e, &one)]));
    t.omega.set(y, z, int(k, -1));
    t.finish(names(&XYZE))
}

/// `B̃`, basis `x, y, z, e`.
///
/// `e` spans an ideal with `[e, u] = λ(u) e`; the ω-Jacobi identity on
/// triples `(u, v, e)` forces `λ([u, v]) = -ω(u, v)`, hence `λ(x) = -2`
/// and `λ(y) = λ(z) = 0`.
pub fn b_tilde(kind: FieldKind) -> Result<OmegaLieAlgebra, CatalogError> {
    let one = int(kind, 1);
    let mut t = Table::new(4, kind);
    let (x, y, z, e) = (0, 1, 2, 3);
    t.set(x, y, t.vec(&[(y, &one)]));
    t.set(x, z, t.vec(&[(y, &one), (z, &one)]));
    t.set(y, z, t.vec(&[(x, &one)]));
    t.set(e, x, t.vec(&[(e, &int(kind, -2))]));
    t.omega.set(y, z, int(kind, 2));
    t.finish(names(&XYZE))
}

/// `C̃_α` (α ≠ 0, −1), basis `x, y, z, e`.
pub fn c_tilde_alpha(alpha: &FieldElement) -> Result<OmegaLieAlgebra, CatalogError> {
    require_generic(alpha, "C_tilde_alpha")?;
    let k = alpha.kind();
    let one = int(k, 1);
    let mut t = Table::new(4, k);
    let (x, y, z, e) = (0, 1, 2, 3);
    t.set(x, y, t.vec(&[(y, &one)]));
    t.set(x, z, t.vec(&[(z, alpha)]));
    t.set(y, z, t.vec(&[(x, &one)]));
    t.set(e, x, t.vec(&[(e, &-(alpha + &one))]));
    t.omega.set(y, z, alpha + &one);
    t.finish(names(&XYZE))
}

/// Extension data of the type-P1 family on `h0, f1..fn, x, v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Params {
    /// Dimension of `H1`.
    pub n: usize,
    pub a: FieldElement,
    /// Coordinates over the full basis; must lie in `span(h0) + H1`.
    pub h1: Vec<FieldElement>,
    /// Coordinates over the full basis; must lie in `H1`.
    pub h2: Vec<FieldElement>,
}

impl P1Params {
    pub fn basis_names(n: usize) -> Vec<String> {
        let mut b = vec!["h0".to_string()];
        b.extend((1..=n).map(|i| format!("f{i}")));
        b.push("x".into());
        b.push("v".into());
        b
    }

    fn from_exprs(n: usize, a: &str, h1: &str, h2: &str, kind: FieldKind) -> Self {
        let basis = Self::basis_names(n);
        let ctx = ExprContext { kind, basis: &basis, line: 1, column: 1 };
        P1Params {
            n,
            a: ctx.scalar(a).expect("valid literal"),
            h1: ctx.vector(h1).expect("valid literal"),
            h2: ctx.vector(h2).expect("valid literal"),
        }
    }

    /// `dim H1 = 2`, `a = 1`, `h1 = h0`, `h2 = f1`.
    pub fn default_instance(kind: FieldKind) -> Self {
        Self::from_exprs(2, "1", "h0", "f1", kind)
    }

    /// `dim H1 = 3`, `a = 2`, `h1 = h0 + f2`, `h2 = f1 + f3`.
    pub fn alternate_instance(kind: FieldKind) -> Self {
        Self::from_exprs(3, "2", "h0 + f2", "f1 + f3", kind)
    }
}

/// Type-P1: `[x,h0] = -a h0`, `[v,h] = h/a` for `h` in `H1`,
/// `[v,h0] = h2 + h0/a + x`, `[x,v] = h1 + a v`, `ω(x,v) = 1`.
pub fn p1(params: &P1Params) -> Result<OmegaLieAlgebra, CatalogError> {
    let n = params.n;
    if n < 2 {
        return Err(CatalogError::SideCondition(format!("P1 needs dim H1 >= 2 (got {n})")));
    }
    let dim = n + 3;
    if params.h1.len() != dim || params.h2.len() != dim {
        return Err(CatalogError::SideCondition(format!("P1 vectors must have {dim} coordinates")));
    }
    let kind = [&params.a]
        .into_iter()
        .chain(&params.h1)
        .chain(&params.h2)
        .fold(FieldKind::Rational, |k, x| k.join(x.kind()));
    let a_inv = params
        .a
        .inv()
        .ok_or_else(|| CatalogError::SideCondition("P1 requires a != 0".into()))?;
    let (h0, x, v) = (0, n + 1, n + 2);
    if !params.h1[x].is_zero() || !params.h1[v].is_zero() {
        return Err(CatalogError::SideCondition("P1 requires h1 in span(h0) + H1".into()));
    }
    if !params.h2[h0].is_zero() || !params.h2[x].is_zero() || !params.h2[v].is_zero() {
        return Err(CatalogError::SideCondition("P1 requires h2 in H1".into()));
    }
    let one = int(kind, 1);
    let mut t = Table::new(dim, kind);
    t.set(x, h0, t.vec(&[(h0, &-&params.a)]));
    for f in 1..=n {
        t.set(v, f, t.vec(&[(f, &a_inv)]));
    }
    let mut vh0 = params.h2.clone();
    vh0[h0] = &vh0[h0] + &a_inv;
    vh0[x] = &vh0[x] + &one;
    t.set(v, h0, vh0);
    let mut xv = params.h1.clone();
    xv[v] = &xv[v] + &params.a;
    t.set(x, v, xv);
    t.omega.set(x, v, one);
    t.finish(P1Params::basis_names(n))
}

/// Extension data of the type-P2 family on `f1..fn, x, y, a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Params {
    /// Dimension of `H`.
    pub n: usize,
    pub h1: Vec<FieldElement>,
    pub h2: Vec<FieldElement>,
    pub h3: Vec<FieldElement>,
    pub b1: FieldElement,
    pub b2: FieldElement,
    pub c1: FieldElement,
}

impl P2Params {
    pub fn basis_names(n: usize) -> Vec<String> {
        let mut b: Vec<String> = (1..=n).map(|i| format!("f{i}")).collect();
        b.extend(["x", "y", "a"].map(String::from));
        b
    }

    #[allow(clippy::too_many_arguments)]
    fn from_exprs(n: usize, h1: &str, h2: &str, h3: &str, b1: &str, b2: &str, c1: &str, kind: FieldKind) -> Self {
        let basis = Self::basis_names(n);
        let ctx = ExprContext { kind, basis: &basis, line: 1, column: 1 };
        P2Params {
            n,
            h1: ctx.vector(h1).expect("valid literal"),
            h2: ctx.vector(h2).expect("valid literal"),
            h3: ctx.vector(h3).expect("valid literal"),
            b1: ctx.scalar(b1).expect("valid literal"),
            b2: ctx.scalar(b2).expect("valid literal"),
            c1: ctx.scalar(c1).expect("valid literal"),
        }
    }

    /// `dim H = 2`, `h1 = f1`, `h2 = f2`, `h3 = 0`, `b1 = 1`, `b2 = 0`, `c1 = -2`.
    pub fn default_instance(kind: FieldKind) -> Self {
        Self::from_exprs(2, "f1", "f2", "0", "1", "0", "-2", kind)
    }

    /// `dim H = 3`, `h1 = f1`, `h2 = f2 + f3`, `h3 = f3`, `b1 = 2`, `b2 = 1`, `c1 = -3`.
    pub fn alternate_instance(kind: FieldKind) -> Self {
        Self::from_exprs(3, "f1", "f2 + f3", "f3", "2", "1", "-3", kind)
    }
}

/// Type-P2: `[a,h] = h` for `h` in `H`, `[x,y] = h3 + a`,
/// `[x,a] = h1 + b1 x + b2 y`, `[y,a] = h2 + c1 y`, `ω(x,y) = 1`.
pub fn p2(params: &P2Params) -> Result<OmegaLieAlgebra, CatalogError> {
    let n = params.n;
    if n < 2 {
        return Err(CatalogError::SideCondition(format!("P2 needs dim H >= 2 (got {n})")));
    }
    let dim = n + 3;
    let (x, y, a) = (n, n + 1, n + 2);
    for (name, h) in [("h1", &params.h1), ("h2", &params.h2), ("h3", &params.h3)] {
        if h.len() != dim {
            return Err(CatalogError::SideCondition(format!("P2 vectors must have {dim} coordinates")));
        }
        if !h[x].is_zero() || !h[y].is_zero() || !h[a].is_zero() {
            return Err(CatalogError::SideCondition(format!("P2 requires {name} in H")));
        }
    }
    let kind = [&params.b1, &params.b2, &params.c1]
        .into_iter()
        .chain(&params.h1)
        .chain(&params.h2)
        .chain(&params.h3)
        .fold(FieldKind::Rational, |k, v| k.join(v.kind()));
    let one = int(kind, 1);
    if params.b1.is_zero() || params.c1.is_zero() || !(&(&params.b1 + &params.c1) + &one).is_zero() {
        return Err(CatalogError::SideCondition(format!(
            "P2 requires b1 != 0, c1 != 0 and b1 + c1 + 1 = 0 (got b1 = {}, c1 = {})",
            params.b1, params.c1
        )));
    }
    let mut t = Table::new(dim, kind);
    for f in 0..n {
        t.set(a, f, t.vec(&[(f, &one)]));
    }
    let mut xy = params.h3.clone();
    xy[a] = &xy[a] + &one;
    t.set(x, y, xy);
    let mut xa = params.h1.clone();
    xa[x] = &xa[x] + &params.b1;
    xa[y] = &xa[y] + &params.b2;
    t.set(x, a, xa);
    let mut ya = params.h2.clone();
    ya[y] = &ya[y] + &params.c1;
    t.set(y, a, ya);
    t.omega.set(x, y, one);
    t.finish(P2Params::basis_names(n))
}

const E123: [&str; 3] = ["e1", "e2", "e3"];

fn lsa_table(kind: FieldKind, rows: [[Vec<FieldElement>; 3]; 3], omega: [(usize, usize, i64); 3]) -> Result<OmegaLsaAlgebra, CatalogError> {
    let mut product = StructureTensor::zero(3, kind);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            product.set_pair(i, j, v);
        }
    }
    let mut w = OmegaForm::zero(3, kind);
    for (i, j, c) in omega {
        w.set(i, j, int(kind, c));
    }
    Ok(OmegaLsaAlgebra::new(names(&E123), product, w)?)
}

fn lin(kind: FieldKind, c: [&FieldElement; 3]) -> Vec<FieldElement> {
    c.iter().map(|x| x.in_kind(kind).unwrap_or_else(|| (*x).clone())).collect()
}

/// First 3-dimensional family: `e1 e_j = e2 e_j = u_j` and
/// `e3 e_j = 2 e_j - u_j` with
/// `u_1 = (a1, a2, a3)`, `u_2 = (a1 - 1, a2 + 1, a3)`,
/// `u_3 = (2 - a1, 1 - a2, 1 - a3)`;
/// `ω(e2,e3) = 2`, `ω(e3,e1) = -2`.
pub fn lsa3_1(a: [&FieldElement; 3]) -> Result<OmegaLsaAlgebra, CatalogError> {
    let kind = a.iter().fold(FieldKind::Rational, |k, x| k.join(x.kind()));
    let one = int(kind, 1);
    let two = int(kind, 2);
    let [a1, a2, a3] = a;
    let u1 = lin(kind, [a1, a2, a3]);
    let u2 = lin(kind, [&(a1 - &one), &(a2 + &one), a3]);
    let u3 = lin(kind, [&(&two - a1), &(&one - a2), &(&one - a3)]);
    let twice = |j: usize, u: &[FieldElement]| -> Vec<FieldElement> {
        (0..3)
            .map(|k| if k == j { &two - &u[k] } else { -&u[k] })
            .collect()
    };
    let rows = [
        [u1.clone(), u2.clone(), u3.clone()],
        [u1.clone(), u2.clone(), u3.clone()],
        [twice(0, &u1), twice(1, &u2), twice(2, &u3)],
    ];
    lsa_table(kind, rows, [(0, 1, 0), (1, 2, 2), (2, 0, -2)])
}

/// Second 3-dimensional family: `e1 e_j = 2 e_j`, `e2 e1 = e3 e1 = e2 + e3`,
/// `e2 e2 = e3 e2 = (a1, a2, a3)`, `e2 e3 = e3 e3 = (a1 + 1, a2, a3)`;
/// `ω(e2,e3) = 2`.
pub fn lsa3_2(a: [&FieldElement; 3]) -> Result<OmegaLsaAlgebra, CatalogError> {
    let kind = a.iter().fold(FieldKind::Rational, |k, x| k.join(x.kind()));
    let zero = FieldElement::zero(kind);
    let one = int(kind, 1);
    let two = int(kind, 2);
    let [a1, a2, a3] = a;
    let v1 = lin(kind, [&zero, &one, &one]);
    let v2 = lin(kind, [a1, a2, a3]);
    let v3 = lin(kind, [&(a1 + &one), a2, a3]);
    let rows = [
        [lin(kind, [&two, &zero, &zero]), lin(kind, [&zero, &two, &zero]), lin(kind, [&zero, &zero, &two])],
        [v1.clone(), v2.clone(), v3.clone()],
        [v1, v2, v3],
    ];
    lsa_table(kind, rows, [(0, 1, 0), (1, 2, 2), (2, 0, 0)])
}

fn bad_param(param: &str, source: ParseError) -> CatalogError {
    CatalogError::BadParameter {
        param: param.into(),
        source,
    }
}

/// Instantiate by name with textual parameters.
///
/// Scalars are read with the scalar literal grammar; `h1`, `h2`, `h3` are
/// linear combinations of the family's basis names. Over `Q(alpha)`, an
/// omitted `alpha` is the formal parameter.
pub fn instantiate(name: &str, params: &BTreeMap<String, String>, field: FieldKind) -> Result<Algebra, CatalogError> {
    let entry = entry(name).ok_or_else(|| CatalogError::UnknownFamily(name.to_string()))?;
    for k in params.keys() {
        if !entry.params.iter().any(|s| s.name == k) {
            return Err(CatalogError::UnknownParameter {
                family: name.into(),
                param: k.clone(),
            });
        }
    }
    let raw = |slot: &str| -> Option<String> {
        params.get(slot).cloned().or_else(|| {
            entry
                .params
                .iter()
                .find(|s| s.name == slot)
                .and_then(|s| s.default.map(String::from))
        })
    };
    let scalar = |slot: &str| -> Result<FieldElement, CatalogError> {
        let text = raw(slot).unwrap_or_default();
        ExprContext::scalars(field).scalar(&text).map_err(|e| bad_param(slot, e))
    };
    let alpha = || -> Result<FieldElement, CatalogError> {
        match params.get("alpha") {
            Some(_) => scalar("alpha"),
            None if field == FieldKind::RationalFunction => Ok(FieldElement::alpha()),
            None => Err(CatalogError::MissingParameter {
                family: name.into(),
                param: "alpha".into(),
            }),
        }
    };
    let extension_dim = || -> Result<usize, CatalogError> {
        let text = raw("n").unwrap_or_default();
        text.trim().parse().map_err(|_| CatalogError::BadParameter {
            param: "n".into(),
            source: ParseError::Syntax {
                line: 1,
                column: 1,
                message: format!("expected a dimension, found `{text}`"),
            },
        })
    };
    let lie = |r: Result<OmegaLieAlgebra, CatalogError>| r.map(Algebra::Lie);
    match name {
        "A_alpha" => lie(a_alpha(&alpha()?)),
        "B" => lie(b(field)),
        "C_alpha" => lie(c_alpha(&alpha()?)),
        "G1_alpha" => lie(g1_alpha(&alpha()?)),
        "H1_alpha" => lie(h1_alpha(&alpha()?)),
        "A_tilde_alpha" => lie(a_tilde_alpha(&alpha()?)),
        "B_tilde" => lie(b_tilde(field)),
        "C_tilde_alpha" => lie(c_tilde_alpha(&alpha()?)),
        "P1" => {
            let n = extension_dim()?;
            let basis = P1Params::basis_names(n);
            let ctx = ExprContext { kind: field, basis: &basis, line: 1, column: 1 };
            let p = P1Params {
                n,
                a: scalar("a")?,
                h1: ctx.vector(&raw("h1").unwrap_or_default()).map_err(|e| bad_param("h1", e))?,
                h2: ctx.vector(&raw("h2").unwrap_or_default()).map_err(|e| bad_param("h2", e))?,
            };
            lie(p1(&p))
        }
        "P2" => {
            let n = extension_dim()?;
            let basis = P2Params::basis_names(n);
            let ctx = ExprContext { kind: field, basis: &basis, line: 1, column: 1 };
            let vector = |slot: &str| ctx.vector(&raw(slot).unwrap_or_default()).map_err(|e| bad_param(slot, e));
            let p = P2Params {
                n,
                h1: vector("h1")?,
                h2: vector("h2")?,
                h3: vector("h3")?,
                b1: scalar("b1")?,
                b2: scalar("b2")?,
                c1: scalar("c1")?,
            };
            lie(p2(&p))
        }
        "LSA3_1" | "LSA3_2" => {
            let (a1, a2, a3) = (scalar("a1")?, scalar("a2")?, scalar("a3")?);
            let f = if name == "LSA3_1" { lsa3_1 } else { lsa3_2 };
            f([&a1, &a2, &a3]).map(Algebra::Lsa)
        }
        _ => unreachable!("entry list and constructors agree"),
    }
}

/// The perfect catalog instances used for theorem verification: every
/// family at its generic (or only) parameters, plus the alternate P1/P2
/// instances. Labels are stable.
pub fn theorem_instances() -> Vec<(String, OmegaLieAlgebra)> {
    let q = FieldKind::Rational;
    let alpha = FieldElement::alpha();
    let all: Vec<(&str, Result<OmegaLieAlgebra, CatalogError>)> = vec![
        ("A_alpha", a_alpha(&alpha)),
        ("B", b(q)),
        ("C_alpha", c_alpha(&alpha)),
        ("G1_alpha", g1_alpha(&alpha)),
        ("H1_alpha", h1_alpha(&alpha)),
        ("A_tilde_alpha", a_tilde_alpha(&alpha)),
        ("B_tilde", b_tilde(q)),
        ("C_tilde_alpha", c_tilde_alpha(&alpha)),
        ("P1", p1(&P1Params::default_instance(q))),
        ("P1[alt]", p1(&P1Params::alternate_instance(q))),
        ("P2", p2(&P2Params::default_instance(q))),
        ("P2[alt]", p2(&P2Params::alternate_instance(q))),
    ];
    all.into_iter()
        .map(|(label, r)| (label.to_string(), r.expect("catalog instance is valid")))
        .collect()
}

/// Whether a family has the parameter `alpha`.
pub fn is_parametric(name: &str) -> bool {
    entry(name.split('[').next().unwrap_or(name)).is_some_and(|e| e.params.iter().any(|p| p.name == "alpha"))
}

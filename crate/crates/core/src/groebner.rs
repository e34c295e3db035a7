//! Sparse multivariate polynomials and a degree-capped Buchberger algorithm.
//!
//! Coefficients are [`FieldElement`]s, so ideals over `Q(alpha)` are
//! handled generically without specializing the parameter.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::field::{DenominatorLog, FieldElement, FieldKind};

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[serde(rename = "degrevlex")]
    DegRevLex,
    /// Lexicographic with `p0 > p1 > ...`.
    #[serde(rename = "lex")]
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // larger when the last differing exponent is smaller
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Polynomial with terms sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: FieldElement) -> Self {
        Self::from_terms(nvars, order, vec![(Monomial::one(nvars), c)])
    }

    /// The variable `p_i`.
    pub fn var(nvars: usize, order: MonomialOrder, i: usize, kind: FieldKind) -> Self {
        Self::from_terms(nvars, order, vec![(Monomial::var(nvars, i), FieldElement::one(kind))])
    }

    /// Collect like terms, drop zeros and sort.
    pub fn from_terms(nvars: usize, order: MonomialOrder, terms: Vec<(Monomial, FieldElement)>) -> Self {
        let mut acc: BTreeMap<Monomial, FieldElement> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            match acc.get_mut(&m) {
                Some(x) => *x += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.degree() == 0
    }

    pub fn lead(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Re-sort under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &FieldElement| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c * m * self`; multiplying by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .flat_map(|(m, c)| other.terms.iter().map(move |(n, d)| (m.mul(n), c * d)))
            .collect();
        Polynomial::from_terms(self.nvars, self.order, terms)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, log: &mut DenominatorLog) -> Polynomial {
        match self.lead() {
            Some((_, c)) if !c.is_one() => {
                log.record_inverse(c);
                self.scale(&c.inv().expect("nonzero lead"))
            }
            _ => self.clone(),
        }
    }

    /// Substitute `p_var = value`.
    pub fn substitute(&self, var: usize, value: &FieldElement) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = std::mem::take(&mut e[var]);
                (Monomial(e), c * &value.pow(k))
            })
            .collect();
        Polynomial::from_terms(self.nvars, self.order, terms)
    }

    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        let kind = point.iter().fold(
            self.terms.first().map_or(FieldKind::Rational, |t| t.1.kind()),
            |k, x| k.join(x.kind()),
        );
        let mut acc = FieldElement::zero(kind);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("p{v}") } else { format!("p{v}^{e}") })
                .collect();
            let simple = c.as_rational().is_some() && !c.to_string().contains(' ');
            let coeff = if simple { c.to_string() } else { format!("({c})") };
            match (vars.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Full normal form of `f` modulo `basis`.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_logged(f, basis, &mut DenominatorLog::new())
}

fn reduce_logged(f: &Polynomial, basis: &[Polynomial], log: &mut DenominatorLog) -> Polynomial {
    let order = f.order;
    let mut p = f.terms.clone();
    // p[..head] already moved to the remainder
    let mut head = 0;
    let mut rem: Vec<(Monomial, FieldElement)> = Vec::new();
    while head < p.len() {
        let divisor = basis
            .iter()
            .find(|g| g.lead_monomial().is_some_and(|gm| gm.divides(&p[head].0)));
        let Some(g) = divisor else {
            rem.push(p[head].clone());
            head += 1;
            continue;
        };
        let (gm, gc) = g.lead().expect("nonzero divisor");
        if !gc.is_one() {
            log.record_inverse(gc);
        }
        let factor = -p[head].1.checked_div(gc).expect("nonzero lead");
        let shift = gm.quotient_of(&p[head].0);
        // the leads cancel; merge the tails in one pass
        let tail: Vec<_> = p.drain(head + 1..).collect();
        let shifted = g.terms[1..].iter().map(|(t, x)| (t.mul(&shift), x * &factor));
        p = merge_sorted(tail, shifted, order);
        head = 0;
    }
    Polynomial {
        nvars: f.nvars,
        order,
        terms: rem,
    }
}

/// Sum of two term lists sorted descending under `order`.
fn merge_sorted(
    a: Vec<(Monomial, FieldElement)>,
    b: impl Iterator<Item = (Monomial, FieldElement)>,
    order: MonomialOrder,
) -> Vec<(Monomial, FieldElement)> {
    let mut out = Vec::with_capacity(a.len() + b.size_hint().0);
    let mut a = a.into_iter().peekable();
    let mut b = b.peekable();
    loop {
        let step = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match step {
            Ordering::Greater => out.extend(a.next()),
            Ordering::Less => out.extend(b.next()),
            Ordering::Equal => {
                let (m, mut c) = a.next().expect("peeked");
                let (_, d) = b.next().expect("peeked");
                c += &d;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l), &gc.clone());
    let b = g.mul_term(&gm.quotient_of(&l), &fc.clone());
    a.sub(&b)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroebnerStats {
    pub pairs_processed: usize,
    pub pairs_skipped: usize,
    pub max_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerOutcome {
    /// Reduced basis with monic leading coefficients, sorted by increasing
    /// leading monomial.
    Basis(Vec<Polynomial>),
    /// An S-pair of degree above the cap was required.
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerResult {
    pub outcome: GroebnerOutcome,
    pub stats: GroebnerStats,
}

impl GroebnerResult {
    pub fn basis(&self) -> Option<&[Polynomial]> {
        match &self.outcome {
            GroebnerOutcome::Basis(b) => Some(b),
            GroebnerOutcome::CapExceeded => None,
        }
    }
}

/// `Some(true)` iff the ideal is the whole ring, `None` if the run was capped.
pub fn contains_one(r: &GroebnerResult) -> Option<bool> {
    r.basis().map(|b| b.iter().any(Polynomial::is_unit))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed lowest lcm degree first, ties by index. Pairs
/// with coprime leading monomials and pairs covered by Buchberger's chain
/// criterion are skipped. If a pair whose lcm has degree above
/// `degree_cap` must be processed, the result is [`GroebnerOutcome::CapExceeded`].
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder, degree_cap: u32) -> GroebnerResult {
    buchberger_logged(gens, order, degree_cap, &mut DenominatorLog::new())
}

pub fn buchberger_logged(gens: &[Polynomial], order: MonomialOrder, degree_cap: u32, log: &mut DenominatorLog) -> GroebnerResult {
    let mut stats = GroebnerStats::default();
    let mut g: Vec<Polynomial> = Vec::new();
    for f in gens {
        let f = f.with_order(order);
        let r = reduce_logged(&f, &g, log);
        if r.is_zero() {
            continue;
        }
        stats.max_degree = stats.max_degree.max(r.total_degree());
        if r.is_unit() {
            return unit_result(&r, stats);
        }
        g.push(r.monic(log));
    }
    let Some(nvars) = g.first().map(Polynomial::nvars) else {
        return GroebnerResult {
            outcome: GroebnerOutcome::Basis(Vec::new()),
            stats,
        };
    };

    // pending pairs keyed by (lcm degree, j, i) for deterministic selection
    let mut pending: BTreeMap<(u32, usize, usize), ()> = BTreeMap::new();
    let lm = |p: &Polynomial| p.lead_monomial().expect("nonzero").clone();
    let push_pairs = |pending: &mut BTreeMap<(u32, usize, usize), ()>, g: &[Polynomial], j: usize| {
        for i in 0..j {
            let d = lm(&g[i]).lcm(&lm(&g[j])).degree();
            pending.insert((d, j, i), ());
        }
    };
    for j in 1..g.len() {
        push_pairs(&mut pending, &g, j);
    }
    let is_pending = |pending: &BTreeMap<(u32, usize, usize), ()>, g: &[Polynomial], a: usize, b: usize| {
        let (i, j) = (a.min(b), a.max(b));
        let d = lm(&g[i]).lcm(&lm(&g[j])).degree();
        pending.contains_key(&(d, j, i))
    };

    while let Some((&(deg, j, i), _)) = pending.iter().next() {
        pending.remove(&(deg, j, i));
        let (mi, mj) = (lm(&g[i]), lm(&g[j]));
        if mi.coprime(&mj) {
            stats.pairs_skipped += 1;
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && lm(&g[k]).divides(&l)
                && !is_pending(&pending, &g, i, k)
                && !is_pending(&pending, &g, j, k)
        });
        if chain {
            stats.pairs_skipped += 1;
            continue;
        }
        if deg > degree_cap {
            return GroebnerResult {
                outcome: GroebnerOutcome::CapExceeded,
                stats,
            };
        }
        stats.pairs_processed += 1;
        stats.max_degree = stats.max_degree.max(deg);
        let s = s_polynomial(&g[i], &g[j]);
        let r = reduce_logged(&s, &g, log);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return unit_result(&r, stats);
        }
        g.push(r.monic(log));
        push_pairs(&mut pending, &g, g.len() - 1);
    }

    GroebnerResult {
        outcome: GroebnerOutcome::Basis(reduce_basis(g, nvars, log)),
        stats,
    }
}

fn unit_result(r: &Polynomial, stats: GroebnerStats) -> GroebnerResult {
    let kind = r.lead().map_or(FieldKind::Rational, |t| t.1.kind());
    GroebnerResult {
        outcome: GroebnerOutcome::Basis(vec![Polynomial::constant(r.nvars(), r.order(), FieldElement::one(kind))]),
        stats,
    }
}

fn reduce_basis(g: Vec<Polynomial>, _nvars: usize, log: &mut DenominatorLog) -> Vec<Polynomial> {
    // minimal: drop elements whose lead is divisible by another lead
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, p) in g.iter().enumerate() {
        let m = p.lead_monomial().expect("nonzero");
        let redundant = g.iter().enumerate().any(|(k, q)| {
            let qm = q.lead_monomial().expect("nonzero");
            k != idx && qm.divides(m) && (qm != m || k < idx)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce_logged(&minimal[i], &others, log);
        reduced.push(r.monic(log));
    }
    if let Some(order) = reduced.first().map(Polynomial::order) {
        reduced.sort_by(|a, b| order.cmp(a.lead_monomial().expect("nonzero"), b.lead_monomial().expect("nonzero")));
    }
    reduced
}

/// Buchberger's criterion: every S-polynomial reduces to zero. Pairs with
/// coprime leading monomials are skipped, which is sound.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let (Some(a), Some(b)) = (basis[i].lead_monomial(), basis[j].lead_monomial()) else {
                return false;
            };
            if a.coprime(b) {
                continue;
            }
            if !reduce(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether no leading monomial divides another and every lead is monic.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, p)| {
        let Some((m, c)) = p.lead() else { return false };
        c.is_one()
            && basis.iter().enumerate().all(|(k, q)| {
                k == i || q.terms().iter().all(|(t, _)| !m.divides(t))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rational;
    const ORD: MonomialOrder = MonomialOrder::DegRevLex;

    /// Polynomial from `(coefficient, exponents)` pairs.
    fn poly(nvars: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            ORD,
            terms
                .iter()
                .map(|(c, e)| (Monomial(e.to_vec()), FieldElement::from_int(Q, *c)))
                .collect(),
        )
    }

    #[test]
    fn degrevlex_order() {
        let m = |e: &[u32]| Monomial(e.to_vec());
        assert_eq!(ORD.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(ORD.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(ORD.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn reduce_examples() {
        let p1 = poly(2, &[(1, &[1, 0])]);
        assert!(reduce(&p1, std::slice::from_ref(&p1)).is_zero());
        let sq = poly(2, &[(1, &[2, 0])]);
        assert!(reduce(&sq, std::slice::from_ref(&p1)).is_zero());
        let f = poly(2, &[(1, &[1, 1]), (1, &[0, 0])]);
        assert_eq!(reduce(&f, &[p1]), poly(2, &[(1, &[0, 0])]));
    }

    #[test]
    fn inconsistent_linear_system() {
        let gens = [poly(1, &[(1, &[1]), (-1, &[0])]), poly(1, &[(1, &[1]), (-2, &[0])])];
        let r = buchberger(&gens, ORD, 6);
        assert_eq!(contains_one(&r), Some(true));
        assert_eq!(r.basis().unwrap().len(), 1);
    }

    #[test]
    fn irreducible_quadratic_is_proper() {
        let gens = [poly(1, &[(1, &[2]), (1, &[0])])];
        let r = buchberger(&gens, ORD, 6);
        assert_eq!(r.basis().unwrap(), &gens);
        assert_eq!(contains_one(&r), Some(false));
    }

    #[test]
    fn two_parabolas() {
        // p0^2 - p1, p1^2 - p0: substituting p1 = p0^2 gives p0^4 = p0, four
        // solutions over the closure.
        let gens = [
            poly(2, &[(1, &[2, 0]), (-1, &[0, 1])]),
            poly(2, &[(1, &[0, 2]), (-1, &[1, 0])]),
        ];
        let r = buchberger(&gens, ORD, 6);
        let basis = r.basis().unwrap();
        assert_eq!(contains_one(&r), Some(false));
        assert!(is_groebner_basis(basis));
        assert!(is_reduced(basis));
        for g in &gens {
            assert!(reduce(g, basis).is_zero());
        }
        // Leading monomials p0^2 and p1^2 leave {1, p0, p1, p0 p1} as standard
        // monomials: a zero-dimensional ideal of degree 4.
        let leads: Vec<&Monomial> = basis.iter().map(|p| p.lead_monomial().unwrap()).collect();
        let standard = [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0], [0, 2], [2, 1], [1, 2], [3, 0], [0, 3]]
            .iter()
            .filter(|e| !leads.iter().any(|l| l.divides(&Monomial(e.to_vec()))))
            .count();
        assert_eq!(standard, 4);
        // the four points (0,0), (1,1), (w, w^2), (w^2, w) include the rational ones
        for pt in [[0, 0], [1, 1]] {
            let p: Vec<FieldElement> = pt.iter().map(|&x| FieldElement::from_int(Q, x)).collect();
            assert!(basis.iter().all(|g| g.eval(&p).is_zero()));
        }
    }

    #[test]
    fn cap_is_reported() {
        // leads p0^2 and p0 p1 overlap in p0^2 p1, degree 3
        let gens = [
            poly(2, &[(1, &[2, 0]), (-1, &[0, 1])]),
            poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]),
        ];
        let r = buchberger(&gens, ORD, 2);
        assert_eq!(r.outcome, GroebnerOutcome::CapExceeded);
        assert_eq!(contains_one(&r), None);
        let r = buchberger(&gens, ORD, 6);
        assert_eq!(contains_one(&r), Some(false));
        assert!(is_groebner_basis(r.basis().unwrap()));
    }

    #[test]
    fn empty_and_zero_generators() {
        let r = buchberger(&[], ORD, 6);
        assert_eq!(contains_one(&r), Some(false));
        let r = buchberger(&[Polynomial::zero(2, ORD)], ORD, 6);
        assert_eq!(r.basis().unwrap().len(), 0);
    }

    #[test]
    fn function_field_coefficients() {
        // (alpha) p0 - 1 and (alpha + 1) p0 - 1 are inconsistent over Q(alpha)
        let k = FieldKind::RationalFunction;
        let a = FieldElement::alpha();
        let one = FieldElement::one(k);
        let x = Monomial::var(1, 0);
        let c = Monomial::one(1);
        let f = Polynomial::from_terms(1, ORD, vec![(x.clone(), a.clone()), (c.clone(), -&one)]);
        let g = Polynomial::from_terms(1, ORD, vec![(x, &a + &one), (c, -&one)]);
        let mut log = DenominatorLog::new();
        let r = buchberger_logged(&[f, g], ORD, 6, &mut log);
        assert_eq!(contains_one(&r), Some(true));
        assert!(!log.is_empty());
    }
}

//! Exact scalars: rationals and rational functions in one formal parameter.
//!
//! Every algebra instance picks one [`FieldKind`] for all of its scalars.
//! Mixed arithmetic promotes rationals into `Q(alpha)` as constants, and
//! equality compares values, so a constant rational function equals the
//! matching rational.

mod poly;
mod ratfunc;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use poly::UniPoly;
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {denominator} vanishes at alpha = {at}")]
    VanishingDenominator { denominator: String, at: String },
}

/// Which field a scalar (or a whole algebra) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldKind {
    /// `Q`
    #[serde(rename = "Q")]
    Rational,
    /// `Q(alpha)`
    #[serde(rename = "Q(alpha)")]
    RationalFunction,
}

impl FieldKind {
    /// The smallest field containing both.
    pub fn join(self, other: FieldKind) -> FieldKind {
        if self == FieldKind::RationalFunction || other == FieldKind::RationalFunction {
            FieldKind::RationalFunction
        } else {
            FieldKind::Rational
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Rational => "Q",
            FieldKind::RationalFunction => "Q(alpha)",
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Q" => Ok(FieldKind::Rational),
            "Q(alpha)" => Ok(FieldKind::RationalFunction),
            other => Err(format!("unknown field `{other}` (expected Q or Q(alpha))")),
        }
    }
}

/// An exact scalar.
#[derive(Clone, Debug)]
pub enum FieldElement {
    Rational(BigRational),
    Function(RationalFunction),
}

impl FieldElement {
    pub fn zero(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Rational => FieldElement::Rational(BigRational::zero()),
            FieldKind::RationalFunction => FieldElement::Function(RationalFunction::zero()),
        }
    }

    pub fn one(kind: FieldKind) -> Self {
        Self::from_int(kind, 1)
    }

    pub fn from_int(kind: FieldKind, n: i64) -> Self {
        Self::from_rational(kind, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(kind: FieldKind, q: BigRational) -> Self {
        match kind {
            FieldKind::Rational => FieldElement::Rational(q),
            FieldKind::RationalFunction => FieldElement::Function(RationalFunction::constant(q)),
        }
    }

    /// `p/q` as an element of `kind`; fails when `q = 0`.
    pub fn fraction(kind: FieldKind, p: i64, q: i64) -> Result<Self, FieldError> {
        if q == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::from_rational(
            kind,
            BigRational::new(BigInt::from(p), BigInt::from(q)),
        ))
    }

    /// The formal parameter `alpha` in `Q(alpha)`.
    pub fn alpha() -> Self {
        FieldElement::Function(RationalFunction::alpha())
    }

    /// A rational function given by numerator and denominator, reduced.
    pub fn function(num: UniPoly, den: UniPoly) -> Result<Self, FieldError> {
        RationalFunction::new(num, den).map(FieldElement::Function)
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElement::Rational(_) => FieldKind::Rational,
            FieldElement::Function(_) => FieldKind::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Function(f) => f.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    /// The value as a rational, if it is one (constant functions included).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Function(f) => f.as_constant(),
        }
    }

    /// Re-tag the value in `kind`. Fails only when a non-constant
    /// function would have to become a rational.
    pub fn in_kind(&self, kind: FieldKind) -> Option<Self> {
        match (self, kind) {
            (FieldElement::Rational(q), k) => Some(Self::from_rational(k, q.clone())),
            (FieldElement::Function(f), FieldKind::RationalFunction) => {
                Some(FieldElement::Function(f.clone()))
            }
            (FieldElement::Function(f), FieldKind::Rational) => {
                f.as_constant().map(FieldElement::Rational)
            }
        }
    }

    fn to_function(&self) -> RationalFunction {
        match self {
            FieldElement::Rational(q) => RationalFunction::constant(q.clone()),
            FieldElement::Function(f) => f.clone(),
        }
    }

    /// Canonical form. Values are always kept reduced, so this is the
    /// identity on well-formed elements; it exists for callers that
    /// assemble elements from raw parts.
    pub fn normalize(&self) -> Result<Self, FieldError> {
        match self {
            FieldElement::Rational(q) => {
                if q.denom().is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(FieldElement::Rational(BigRational::new(
                    q.numer().clone(),
                    q.denom().clone(),
                )))
            }
            FieldElement::Function(f) => {
                RationalFunction::new(f.numer().clone(), f.denom().clone())
                    .map(FieldElement::Function)
            }
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            FieldElement::Rational(q) => (!q.is_zero()).then(|| FieldElement::Rational(q.recip())),
            FieldElement::Function(f) => f.inv().map(FieldElement::Function),
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        let inv = other.inv().ok_or(FieldError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.kind());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `alpha = at`, producing a rational.
    pub fn specialize(&self, at: &BigRational) -> Result<Self, FieldError> {
        match self {
            FieldElement::Rational(q) => Ok(FieldElement::Rational(q.clone())),
            FieldElement::Function(f) => f.eval(at).map(FieldElement::Rational),
        }
    }

    /// Whether the element's denominator, or its numerator, involves `alpha`.
    pub fn is_parametric(&self) -> bool {
        match self {
            FieldElement::Rational(_) => false,
            FieldElement::Function(f) => !f.numer().is_constant() || !f.denom().is_constant(),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a == b,
            (FieldElement::Function(a), FieldElement::Function(b)) => a == b,
            (FieldElement::Rational(a), FieldElement::Function(f))
            | (FieldElement::Function(f), FieldElement::Rational(a)) => {
                f.as_constant().as_ref() == Some(a)
            }
        }
    }
}

impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Function(rf) => write!(f, "{rf}"),
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(small_op(a, b, Op::Add).unwrap_or_else(|| a + b)),
            _ if rhs.is_zero() => self.in_kind(self.kind().join(rhs.kind())).expect("promotion"),
            _ if self.is_zero() => rhs.in_kind(self.kind().join(rhs.kind())).expect("promotion"),
            _ => FieldElement::Function(self.to_function().add(&rhs.to_function())),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(small_op(a, b, Op::Sub).unwrap_or_else(|| a - b)),
            _ => FieldElement::Function(self.to_function().sub(&rhs.to_function())),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(small_op(a, b, Op::Mul).unwrap_or_else(|| a * b)),
            _ => FieldElement::Function(self.to_function().mul(&rhs.to_function())),
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn small(q: &BigRational) -> Option<(i128, i128)> {
    Some((q.numer().to_i64()? as i128, q.denom().to_i64()? as i128))
}

/// Machine-word arithmetic when both operands fit in `i64`; bignum gcds
/// dominate otherwise. `None` when an operand is large.
fn small_op(a: &BigRational, b: &BigRational, op: Op) -> Option<BigRational> {
    let ((an, ad), (bn, bd)) = (small(a)?, small(b)?);
    // |products| < 2^126, so these cannot overflow i128
    let (n, d) = match op {
        Op::Add => (an * bd + bn * ad, ad * bd),
        Op::Sub => (an * bd - bn * ad, ad * bd),
        Op::Mul => (an * bn, ad * bd),
    };
    let g = n.gcd(&d);
    let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
    // denominators stay positive: ad, bd > 0
    Some(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Function(f) => FieldElement::Function(f.neg()),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

/// Denominators met while computing over `Q(alpha)`.
///
/// Every nonzero element that gets inverted contributes its numerator, so
/// a specialization `alpha = a0` is sound for the recorded computation
/// exactly when no recorded polynomial vanishes at `a0`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DenominatorLog {
    polys: BTreeSet<UniPoly>,
}

impl DenominatorLog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record that `x` was inverted.
    pub fn record_inverse(&mut self, x: &FieldElement) {
        if let FieldElement::Function(f) = x {
            if !f.numer().is_constant() {
                self.polys.insert(f.numer().monic());
            }
            if !f.denom().is_constant() {
                self.polys.insert(f.denom().clone());
            }
        }
    }

    /// Record the denominator of a value that entered the computation.
    pub fn record_value(&mut self, x: &FieldElement) {
        if let FieldElement::Function(f) = x {
            if !f.denom().is_constant() {
                self.polys.insert(f.denom().clone());
            }
        }
    }

    pub fn merge(&mut self, other: &DenominatorLog) {
        self.polys.extend(other.polys.iter().cloned());
    }

    pub fn polys(&self) -> impl Iterator<Item = &UniPoly> {
        self.polys.iter()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// The first recorded polynomial vanishing at `at`, if any.
    pub fn vanishing_at(&self, at: &BigRational) -> Option<&UniPoly> {
        self.polys.iter().find(|p| p.eval(at).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, r: i64) -> FieldElement {
        FieldElement::fraction(FieldKind::Rational, p, r).unwrap()
    }

    #[test]
    fn word_arithmetic_matches_bignum() {
        let big = |p: i64, r: i64| BigRational::new(BigInt::from(p), BigInt::from(r));
        let vals = [(0, 1), (1, 1), (-7, 3), (5, 12), (i64::MAX, 1), (i64::MIN, 3), (1, i64::MAX), (-3, i64::MAX - 1)];
        for &(an, ad) in &vals {
            for &(bn, bd) in &vals {
                let (a, b) = (big(an, ad), big(bn, bd));
                for (op, want) in [(Op::Add, &a + &b), (Op::Sub, &a - &b), (Op::Mul, &a * &b)] {
                    let got = small_op(&a, &b, op).unwrap();
                    assert_eq!((got.numer(), got.denom()), (want.numer(), want.denom()));
                }
            }
        }
        // results beyond one word are still exact
        let huge = big(i64::MAX, 1) * big(i64::MAX, 1);
        assert!(small_op(&huge, &big(1, 1), Op::Add).is_none());
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(-1, -3).to_string(), "1/3");
        assert_eq!(q(0, 5).to_string(), "0");
        let raw = FieldElement::Rational(BigRational::new_raw(BigInt::from(2), BigInt::from(4)));
        assert_eq!(raw.normalize().unwrap().to_string(), "1/2");
        let bad = FieldElement::Rational(BigRational::new_raw(BigInt::from(1), BigInt::from(0)));
        assert_eq!(bad.normalize(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn function_normalization() {
        let f = FieldElement::function(UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(f, FieldElement::alpha() + FieldElement::one(FieldKind::RationalFunction));
        assert_eq!(
            FieldElement::function(UniPoly::one(), UniPoly::zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_kinds_compare_by_value() {
        let a = FieldElement::from_int(FieldKind::Rational, 3);
        let b = FieldElement::from_int(FieldKind::RationalFunction, 3);
        assert_eq!(a, b);
        assert_ne!(a, FieldElement::alpha());
        assert_eq!((&a + &b).kind(), FieldKind::RationalFunction);
    }

    #[test]
    fn alpha_plus_one_is_invertible() {
        let x = FieldElement::alpha() + FieldElement::one(FieldKind::RationalFunction);
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
        assert_eq!(inv.to_string(), "1/(alpha + 1)");
    }

    #[test]
    fn specialization_rejects_pole() {
        let x = FieldElement::alpha() + FieldElement::one(FieldKind::RationalFunction);
        let inv = x.inv().unwrap();
        let at = BigRational::from_integer(BigInt::from(-1));
        assert!(matches!(
            inv.specialize(&at),
            Err(FieldError::VanishingDenominator { .. })
        ));
        let mut log = DenominatorLog::new();
        log.record_inverse(&x);
        assert!(log.vanishing_at(&at).is_some());
        assert!(log.vanishing_at(&BigRational::one()).is_none());
    }
}

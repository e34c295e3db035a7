use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::UniPoly;
use super::FieldError;

/// Element of the rational function field `Q(alpha)`.
///
/// Always stored reduced, with a monic denominator, so two equal
/// functions have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").recip();
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn alpha() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.constant_term())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero"))
    }

    /// Substitute `alpha = at`; fails when the denominator vanishes there.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational, FieldError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(FieldError::VanishingDenominator {
                denominator: self.den.to_string(),
                at: at.to_string(),
            });
        }
        Ok(self.num.eval(at) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // a monic denominator other than 1 has positive degree
        match self.num.as_integer() {
            Some(n) => write!(f, "{}/({})", n, self.den),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn cancels_common_factor() {
        // (alpha^2 - 1)/(alpha - 1) = alpha + 1
        let f = RationalFunction::new(UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(f, RationalFunction::from_poly(UniPoly::from_ints(&[1, 1])));
    }

    #[test]
    fn denominator_made_monic() {
        let f = RationalFunction::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 2])).unwrap();
        assert!(f.denom().leading().unwrap().is_one());
        assert_eq!(f.to_string(), "(1/2)/(alpha)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(UniPoly::one(), UniPoly::zero()),
            Err(FieldError::DivisionByZero)
        );
    }
}

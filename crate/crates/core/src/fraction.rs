//! Homogeneous rational functions: quotients of binary forms over Q(ω).

use std::fmt;

use crate::eisenstein::QOmega;
use crate::error::{Error, Result};
use crate::forms::{self, BinaryForm};

/// `num / den` in lowest terms, with the first nonzero coefficient of `den`
/// equal to 1. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: BinaryForm,
    den: BinaryForm,
}

impl RationalFunction {
    pub fn new(num: BinaryForm, den: BinaryForm) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = forms::gcd(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            let num = num.div_exact(&g)?.expect("gcd divides");
            let den = den.div_exact(&g)?.expect("gcd divides");
            (num, den)
        };
        let lead = den.first_nonzero().expect("nonzero").inv()?;
        Ok(RationalFunction { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_form(f: BinaryForm) -> Self {
        RationalFunction::new(f, BinaryForm::one()).expect("denominator is one")
    }

    pub fn constant(c: QOmega) -> Self {
        RationalFunction::from_form(BinaryForm::constant(c))
    }

    pub fn from_integer(n: i64) -> Self {
        RationalFunction::constant(QOmega::from_integer(n))
    }

    pub fn zero() -> Self {
        RationalFunction { num: BinaryForm::zero(), den: BinaryForm::one() }
    }

    pub fn one() -> Self {
        RationalFunction::from_integer(1)
    }

    pub fn numer(&self) -> &BinaryForm {
        &self.num
    }

    pub fn denom(&self) -> &BinaryForm {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree()? as i64)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let num = (&self.num * &other.den).checked_add(&(&other.num * &self.den))?;
        RationalFunction::new(num, &self.den * &other.den)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale(&self, c: &QOmega) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at `(x0, y0)`.
    pub fn evaluate(&self, x0: &QOmega, y0: &QOmega) -> Result<QOmega> {
        self.num.evaluate(x0, y0).checked_div(&self.den.evaluate(x0, y0))
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl From<BinaryForm> for RationalFunction {
    fn from(f: BinaryForm) -> Self {
        RationalFunction::from_form(f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BinaryForm::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> BinaryForm {
        s.parse().unwrap()
    }

    #[test]
    fn lowest_terms() {
        let f = RationalFunction::new(form("x^2 - y^2"), form("2*x + 2*y")).unwrap();
        assert_eq!(f.numer(), &form("1/2*x - 1/2*y"));
        assert_eq!(f.denom(), &BinaryForm::one());
        assert_eq!(f.degree(), Some(1));
        assert_eq!(RationalFunction::new(BinaryForm::x(), BinaryForm::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(BinaryForm::x(), BinaryForm::y()).unwrap();
        let b = RationalFunction::new(BinaryForm::y(), BinaryForm::x()).unwrap();
        assert_eq!(a.mul(&b), RationalFunction::one());
        let s = a.checked_add(&b).unwrap();
        assert_eq!(s, RationalFunction::new(form("x^2 + y^2"), form("x*y")).unwrap());
        assert_eq!(s.checked_sub(&b).unwrap(), a);
        assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
        assert_eq!(a.checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        let lin = RationalFunction::from_form(BinaryForm::x());
        assert!(matches!(lin.checked_add(&a), Err(Error::DegreeMismatch(_, _))));
        let two = QOmega::from_integer(2);
        assert_eq!(a.evaluate(&two, &QOmega::one()).unwrap(), two);
    }
}

//! Exact arithmetic in the cyclotomic field Q(ω) and its ring of integers Z[ω].
//!
//! Every element is kept on the basis {1, ω} with ω² = -1 - ω, so two values
//! are equal exactly when their coordinates are equal. Rational coordinates
//! are `BigRational`, which is always in lowest terms with a positive
//! denominator.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b·ω` of Q(ω).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QOmega {
    a: BigRational,
    b: BigRational,
}

impl QOmega {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QOmega { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QOmega::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QOmega { a, b: BigRational::zero() }
    }

    pub fn from_integer(a: i64) -> Self {
        QOmega::from_ints(a, 0)
    }

    /// `n/d` as an element of Q. Panics if `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        QOmega::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn zero() -> Self {
        QOmega::default()
    }

    pub fn one() -> Self {
        QOmega::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        QOmega::from_ints(0, 1)
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => QOmega::one(),
            1 => QOmega::omega(),
            _ => QOmega::from_ints(-1, -1),
        }
    }

    /// Coefficient of 1.
    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of ω.
    pub fn om(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugate: conj(a + bω) = a + bω² = (a - b) - bω.
    pub fn conj(&self) -> Self {
        QOmega { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm a² - ab + b², the product of the element with its conjugate.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QOmega { a: c.a / &n, b: c.b / n })
    }

    pub fn checked_div(&self, rhs: &QOmega) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QOmega::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Both coordinates are integers, i.e. the value lies in Z[ω].
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn to_eisenstein(&self) -> Option<EisensteinInt> {
        use num_traits::ToPrimitive;
        if !self.is_integral() {
            return None;
        }
        Some(EisensteinInt::new(self.a.to_integer().to_i64()?, self.b.to_integer().to_i64()?))
    }

    /// Least common multiple of the two coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.a.denom().lcm(self.b.denom())
    }
}

impl From<EisensteinInt> for QOmega {
    fn from(z: EisensteinInt) -> Self {
        QOmega::from_ints(z.m, z.n)
    }
}

impl From<BigRational> for QOmega {
    fn from(a: BigRational) -> Self {
        QOmega::from_rational(a)
    }
}

impl<'a> Add<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    fn add(self, rhs: &QOmega) -> QOmega {
        QOmega { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    fn sub(self, rhs: &QOmega) -> QOmega {
        QOmega { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    fn mul(self, rhs: &QOmega) -> QOmega {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², with ω² = -1 - ω.
        if self.b.is_zero() {
            return QOmega { a: &self.a * &rhs.a, b: &self.a * &rhs.b };
        }
        if rhs.b.is_zero() {
            return QOmega { a: &self.a * &rhs.a, b: &self.b * &rhs.a };
        }
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        QOmega { a: ac - &bd, b: ad + bc - bd }
    }
}

impl<'a> Div<&'a QOmega> for &'a QOmega {
    type Output = QOmega;
    /// Panics on division by zero; see [`QOmega::checked_div`].
    fn div(self, rhs: &QOmega) -> QOmega {
        self.checked_div(rhs).expect("division by zero in Q(ω)")
    }
}

impl Neg for &QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        QOmega { a: -&self.a, b: -&self.b }
    }
}

impl Neg for QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        QOmega { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QOmega> for QOmega {
            type Output = QOmega;
            fn $f(self, rhs: QOmega) -> QOmega {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a QOmega> for QOmega {
            type Output = QOmega;
            fn $f(self, rhs: &QOmega) -> QOmega {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QOmega> for QOmega {
    fn add_assign(&mut self, rhs: &QOmega) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&QOmega> for QOmega {
    fn sub_assign(&mut self, rhs: &QOmega) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&QOmega> for QOmega {
    fn mul_assign(&mut self, rhs: &QOmega) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Textual form: `a`, `c*w`, `a+c*w` or `a-c*w`, where `a` and `c` are
/// integers or fractions `n/d` and `w` stands for ω.
impl fmt::Display for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}*w", fmt_rational(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*w", fmt_rational(&self.a), sign, fmt_rational(&self.b.abs()))
            }
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for QOmega {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Q(ω) literal".into()));
        }
        let Some(body) = s.strip_suffix('w') else {
            return Ok(QOmega::from_rational(parse_rational(&s)?));
        };
        // The ω-term starts at the last sign that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (rat, coef) = match split {
            Some(i) => (Some(&body[..i]), &body[i..]),
            None => (None, body),
        };
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let b = match coef {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            c => parse_rational(c.strip_prefix('+').unwrap_or(c))?,
        };
        let a = match rat {
            Some(r) => parse_rational(r)?,
            None => BigRational::zero(),
        };
        Ok(QOmega::new(a, b))
    }
}

/// An Eisenstein integer `m + n·ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub m: i64,
    pub n: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { m: 0, n: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { m: 1, n: 0 };
    pub const OMEGA: EisensteinInt = EisensteinInt { m: 0, n: 1 };

    pub const fn new(m: i64, n: i64) -> Self {
        EisensteinInt { m, n }
    }

    /// N(m + nω) = m² - mn + n².
    pub fn norm(&self) -> i64 {
        self.m * self.m - self.m * self.n + self.n * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.n == 0
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// conj(m + nω) = m + nω² = (m - n) - nω.
    pub fn conj(&self) -> Self {
        EisensteinInt::new(self.m - self.n, -self.n)
    }

    /// The six units ±1, ±ω, ±ω².
    pub fn units() -> [EisensteinInt; 6] {
        [(1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1)].map(|(m, n)| EisensteinInt::new(m, n))
    }

    /// `z / self` when it lies in Z[ω].
    pub fn div_exact(&self, z: &EisensteinInt) -> Result<Option<EisensteinInt>> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = QOmega::from(*z).checked_div(&QOmega::from(*self))?;
        Ok(q.to_eisenstein())
    }

    /// Whether `self` divides `z` in Z[ω], decided by exact division in Q(ω).
    pub fn divides(&self, z: &EisensteinInt) -> Result<bool> {
        Ok(self.div_exact(z)?.is_some())
    }

    /// The same predicate through the pair of congruences
    /// `m0 m1 + n0 n1 ≡ m0 n1 ≡ m1 n0 (mod m1² - m1 n1 + n1²)`, where
    /// `self = m1 + n1 ω` and `z = m0 + n0 ω`.
    pub fn divides_by_congruence(&self, z: &EisensteinInt) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (m1, n1) = (self.m as i128, self.n as i128);
        let (m0, n0) = (z.m as i128, z.n as i128);
        let modulus = m1 * m1 - m1 * n1 + n1 * n1;
        let a = (m0 * m1 + n0 * n1).rem_euclid(modulus);
        let b = (m0 * n1).rem_euclid(modulus);
        let c = (m1 * n0).rem_euclid(modulus);
        Ok(a == b && b == c)
    }
}

/// Free-function form of [`EisensteinInt::norm`].
pub fn norm(z: &EisensteinInt) -> i64 {
    z.norm()
}

/// Whether `w` divides `z` in Z[ω].
pub fn divides(w: &EisensteinInt, z: &EisensteinInt) -> Result<bool> {
    w.divides(z)
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: Self) -> Self {
        EisensteinInt::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl Sub for EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: Self) -> Self {
        EisensteinInt::new(self.m - rhs.m, self.n - rhs.n)
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> Self {
        EisensteinInt::new(-self.m, -self.n)
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: Self) -> Self {
        let (m, n, m2, n2) = (self.m, self.n, rhs.m, rhs.n);
        EisensteinInt::new(m * m2 - n * n2, m * n2 + m2 * n - n * n2)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", QOmega::from(*self))
    }
}

//! Binary forms (homogeneous polynomials in `x`, `y`) with coefficients in Q(ω).
//!
//! A nonzero form of degree `d` is stored densely as `d + 1` coefficients,
//! `coeffs[i]` multiplying `x^(d-i) y^i`. The zero form has no coefficients
//! and no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eisenstein::QOmega;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "FormRecord", into = "FormRecord")]
pub struct BinaryForm {
    coeffs: Vec<QOmega>,
}

impl BinaryForm {
    /// Builds a form from `d + 1` coefficients; an all-zero vector becomes
    /// the zero form.
    pub fn from_coeffs(coeffs: Vec<QOmega>) -> Self {
        if coeffs.iter().all(QOmega::is_zero) {
            BinaryForm::zero()
        } else {
            BinaryForm { coeffs }
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::from_coeffs(coeffs.iter().map(|&c| QOmega::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        BinaryForm { coeffs: Vec::new() }
    }

    /// A form of degree 0. `c = 0` gives the zero form.
    pub fn constant(c: QOmega) -> Self {
        BinaryForm::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        BinaryForm::constant(QOmega::one())
    }

    /// `c · x^i · y^j`.
    pub fn monomial(c: QOmega, i: usize, j: usize) -> Self {
        let mut coeffs = vec![QOmega::zero(); i + j + 1];
        coeffs[j] = c;
        BinaryForm::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        BinaryForm::monomial(QOmega::one(), 1, 0)
    }

    pub fn y() -> Self {
        BinaryForm::monomial(QOmega::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[QOmega] {
        &self.coeffs
    }

    /// Coefficient of `x^i y^j`; zero when `i + j` is not the degree.
    pub fn coeff(&self, i: usize, j: usize) -> QOmega {
        match self.degree() {
            Some(d) if i + j == d => self.coeffs[j].clone(),
            _ => QOmega::zero(),
        }
    }

    /// Nonzero constant (a nonzero form of degree 0).
    pub fn is_constant(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn first_nonzero(&self) -> Option<&QOmega> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn checked_add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.combine(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &BinaryForm, op: impl Fn(&QOmega, &QOmega) -> QOmega) -> Result<BinaryForm> {
        match (self.degree(), other.degree()) {
            (None, _) => Ok(other.map_coeffs(|b| op(&QOmega::zero(), b))),
            (_, None) => Ok(self.clone()),
            (Some(d1), Some(d2)) if d1 != d2 => Err(Error::DegreeMismatch(d1, d2)),
            _ => Ok(BinaryForm::from_coeffs(
                self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect(),
            )),
        }
    }

    fn map_coeffs(&self, f: impl Fn(&QOmega) -> QOmega) -> BinaryForm {
        BinaryForm::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &QOmega) -> BinaryForm {
        if c.is_zero() {
            return BinaryForm::zero();
        }
        BinaryForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut acc = BinaryForm::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Multiplies by `x^a y^b`.
    pub fn mul_monomial(&self, a: usize, b: usize) -> BinaryForm {
        if self.is_zero() {
            return BinaryForm::zero();
        }
        let mut coeffs = vec![QOmega::zero(); b];
        coeffs.extend(self.coeffs.iter().cloned());
        coeffs.extend(std::iter::repeat_n(QOmega::zero(), a));
        BinaryForm { coeffs }
    }

    /// `f(y, x)`.
    pub fn swap_xy(&self) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().rev().cloned().collect() }
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(QOmega::conj).collect() }
    }

    /// `f(a·x, b·y)`.
    pub fn scale_vars(&self, a: &QOmega, b: &QOmega) -> BinaryForm {
        let Some(d) = self.degree() else {
            return BinaryForm::zero();
        };
        let a_pows = powers(a, d);
        let b_pows = powers(b, d);
        BinaryForm::from_coeffs(
            self.coeffs.iter().enumerate().map(|(i, c)| &(c * &a_pows[d - i]) * &b_pows[i]).collect(),
        )
    }

    /// `f(x0, y0)`.
    pub fn evaluate(&self, x0: &QOmega, y0: &QOmega) -> QOmega {
        let Some(d) = self.degree() else {
            return QOmega::zero();
        };
        let xp = powers(x0, d);
        let yp = powers(y0, d);
        let mut acc = QOmega::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&(c * &xp[d - i]) * &yp[i]);
            }
        }
        acc
    }

    /// Formal substitution `f(u(x,y), v(x,y))`. The result has degree
    /// `deg f · deg u`.
    pub fn substitute(&self, u: &BinaryForm, v: &BinaryForm) -> Result<BinaryForm> {
        let Some(d) = self.degree() else {
            return Ok(BinaryForm::zero());
        };
        if let (Some(a), Some(b)) = (u.degree(), v.degree()) {
            if a != b {
                return Err(Error::InhomogeneousSubstitution);
            }
        }
        // Horner in u with precomputed powers of v:
        // f = (((c0 u + c1 v) u + c2 v^2) u + ...) + cd v^d.
        let v_pows = form_powers(v, d);
        let mut acc = BinaryForm::constant(self.coeffs[0].clone());
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            acc = &acc * u;
            if !c.is_zero() {
                acc = acc.checked_add(&v_pows[i].scale(c))?;
            }
        }
        Ok(acc)
    }

    /// Exact division `self / divisor`; `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Result<Option<BinaryForm>> {
        let Some(m) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(n) = self.degree() else {
            return Ok(Some(BinaryForm::zero()));
        };
        if n < m {
            return Ok(None);
        }
        let s = divisor.y_valuation();
        if self.y_valuation() < s {
            return Ok(None);
        }
        // Both are y^s times a form whose x^top coefficient is nonzero; divide
        // the cofactors as power series in y/x.
        let f = &self.coeffs[s..];
        let g = &divisor.coeffs[s..];
        let lead_inv = g[0].inv()?;
        let qdeg = n - m;
        let mut quot: Vec<QOmega> = Vec::with_capacity(qdeg + 1);
        for j in 0..f.len() {
            let mut r = f[j].clone();
            let lo = j.saturating_sub(g.len() - 1);
            for k in lo..=j.min(qdeg) {
                if k < quot.len() && !quot[k].is_zero() && !g[j - k].is_zero() {
                    r -= &(&g[j - k] * &quot[k]);
                }
            }
            if j <= qdeg {
                quot.push(&r * &lead_inv);
            } else if !r.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(BinaryForm::from_coeffs(quot)))
    }

    /// Largest power of `y` dividing a nonzero form.
    pub fn y_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Largest power of `x` dividing a nonzero form.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Greatest common divisor, scaled so its first nonzero coefficient is 1.
    pub fn gcd(&self, other: &BinaryForm) -> Result<BinaryForm> {
        gcd(self, other)
    }

    /// `(f / c, c)` where `c` is the first nonzero coefficient of `f`.
    pub fn normalize_scale(&self) -> Result<(BinaryForm, QOmega)> {
        let c = self.first_nonzero().ok_or(Error::NormalizeZero)?.clone();
        let inv = c.inv()?;
        Ok((self.scale(&inv), c))
    }

    /// Residue classes mod 3 of the exponents of `x` and `y` in the support.
    pub fn shape_mod3(&self) -> ShapeMod3 {
        let Some(d) = self.degree() else {
            return ShapeMod3 { x: ExponentClass::Empty, y: ExponentClass::Empty };
        };
        let mut xs = [false; 3];
        let mut ys = [false; 3];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                xs[(d - i) % 3] = true;
                ys[i % 3] = true;
            }
        }
        ShapeMod3 { x: ExponentClass::from_flags(xs), y: ExponentClass::from_flags(ys) }
    }

    /// `F(x^3, y^3)`.
    pub fn inflate3(&self) -> BinaryForm {
        let Some(d) = self.degree() else {
            return BinaryForm::zero();
        };
        let mut coeffs = vec![QOmega::zero(); 3 * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[3 * i] = c.clone();
        }
        BinaryForm { coeffs }
    }

    /// Finds `F` with `self = x^a y^b F(x^3, y^3)`, if it exists.
    pub fn deflate3(&self, a: usize, b: usize) -> Option<BinaryForm> {
        let Some(d) = self.degree() else {
            return Some(BinaryForm::zero());
        };
        if d < a + b || !(d - a - b).is_multiple_of(3) {
            return None;
        }
        let e = (d - a - b) / 3;
        let mut coeffs = vec![QOmega::zero(); e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < b || !(i - b).is_multiple_of(3) || d - i < a {
                return None;
            }
            coeffs[(i - b) / 3] = c.clone();
        }
        Some(BinaryForm::from_coeffs(coeffs))
    }
}

fn powers(a: &QOmega, d: usize) -> Vec<QOmega> {
    let mut out = Vec::with_capacity(d + 1);
    out.push(QOmega::one());
    for k in 1..=d {
        let next = &out[k - 1] * a;
        out.push(next);
    }
    out
}

/// `v^0, ..., v^d`.
fn form_powers(v: &BinaryForm, d: usize) -> Vec<BinaryForm> {
    let mut out = Vec::with_capacity(d + 1);
    out.push(BinaryForm::one());
    for k in 1..=d {
        let next = &out[k - 1] * v;
        out.push(next);
    }
    out
}

/// Greatest common divisor of two forms, scaled so that its first nonzero
/// coefficient is 1.
///
/// The common power of `y` is split off, the cofactors are dehomogenized at
/// `y = 1`, and the univariate gcd is taken by the Euclidean algorithm over
/// Q(ω) before re-homogenizing.
pub fn gcd(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::UndefinedGcd),
        (true, false) => return Ok(g.normalize_scale()?.0),
        (false, true) => return Ok(f.normalize_scale()?.0),
        _ => {}
    }
    let k = f.y_valuation().min(g.y_valuation());
    let a = dehomogenize(f);
    let b = dehomogenize(g);
    let h = upoly::gcd(a, b);
    Ok(homogenize(&h).mul_monomial(0, k))
}

/// Whether the gcd of `f` and `g` is a nonzero constant. A modular
/// certificate is tried first; the exact gcd decides when it is
/// inconclusive.
pub fn is_coprime(f: &BinaryForm, g: &BinaryForm) -> bool {
    if crate::modular::certify_coprime(f, g) {
        return true;
    }
    gcd(f, g).is_ok_and(|h| h.is_constant())
}

/// `f(x, 1)` as an ascending coefficient vector with no trailing zeros.
fn dehomogenize(f: &BinaryForm) -> Vec<QOmega> {
    let s = f.y_valuation();
    f.coeffs[s..].iter().rev().cloned().collect()
}

fn homogenize(p: &[QOmega]) -> BinaryForm {
    BinaryForm::from_coeffs(p.iter().rev().cloned().collect())
}

/// Dense univariate polynomials over Q(ω), ascending coefficients.
pub(crate) mod upoly {
    use crate::eisenstein::QOmega;

    pub(crate) fn trim(p: &mut Vec<QOmega>) {
        while p.last().is_some_and(QOmega::is_zero) {
            p.pop();
        }
    }

    pub(crate) fn make_monic(p: &mut [QOmega]) {
        let Some(lead) = p.last() else {
            return;
        };
        if lead.is_one() {
            return;
        }
        let inv = lead.inv().expect("nonzero leading coefficient");
        for c in p.iter_mut() {
            *c = &*c * &inv;
        }
    }

    /// Remainder of `a` modulo a monic `b`.
    pub(crate) fn rem_monic(mut a: Vec<QOmega>, b: &[QOmega]) -> Vec<QOmega> {
        let db = b.len() - 1;
        while a.len() > db && !a.is_empty() {
            let top = a.len() - 1;
            let c = a[top].clone();
            if !c.is_zero() {
                let shift = top - db;
                for (k, bk) in b.iter().enumerate().take(db) {
                    if !bk.is_zero() {
                        a[shift + k] -= &(&c * bk);
                    }
                }
            }
            a.pop();
            trim(&mut a);
        }
        a
    }

    /// Monic gcd; both inputs nonzero.
    pub(crate) fn gcd(mut a: Vec<QOmega>, mut b: Vec<QOmega>) -> Vec<QOmega> {
        trim(&mut a);
        trim(&mut b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        make_monic(&mut b);
        while !b.is_empty() {
            let r = rem_monic(a, &b);
            a = b;
            b = r;
            make_monic(&mut b);
        }
        make_monic(&mut a);
        a
    }
}

impl<'a> Add<&'a BinaryForm> for &'a BinaryForm {
    type Output = BinaryForm;
    /// Panics on a degree mismatch; see [`BinaryForm::checked_add`].
    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a BinaryForm> for &'a BinaryForm {
    type Output = BinaryForm;
    /// Panics on a degree mismatch; see [`BinaryForm::checked_sub`].
    fn sub(self, rhs: &BinaryForm) -> BinaryForm {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a BinaryForm> for &'a BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        if self.is_zero() || rhs.is_zero() {
            return BinaryForm::zero();
        }
        let mut coeffs = vec![QOmega::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        BinaryForm { coeffs }
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;
    fn neg(self) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<BinaryForm> for BinaryForm {
            type Output = BinaryForm;
            fn $f(self, rhs: BinaryForm) -> BinaryForm {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a BinaryForm> for BinaryForm {
            type Output = BinaryForm;
            fn $f(self, rhs: &BinaryForm) -> BinaryForm {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Residue class mod 3 of the exponents of one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExponentClass {
    Uniform(u8),
    /// Several residues occur; `true` at index `k` when residue `k` does.
    Mixed([bool; 3]),
    /// Zero form: no exponents at all.
    Empty,
}

impl ExponentClass {
    fn from_flags(flags: [bool; 3]) -> Self {
        match flags.iter().filter(|&&b| b).count() {
            0 => ExponentClass::Empty,
            1 => ExponentClass::Uniform(flags.iter().position(|&b| b).unwrap() as u8),
            _ => ExponentClass::Mixed(flags),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeMod3 {
    pub x: ExponentClass,
    pub y: ExponentClass,
}

impl ShapeMod3 {
    /// No exponent of either variable is congruent to 2 mod 3.
    pub fn avoids_residue_two(&self) -> bool {
        [self.x, self.y].iter().all(|c| match c {
            ExponentClass::Uniform(k) => *k != 2,
            ExponentClass::Mixed(flags) => !flags[2],
            ExponentClass::Empty => true,
        })
    }
}

/// Free-function form of [`BinaryForm::shape_mod3`].
pub fn shape_mod3(f: &BinaryForm) -> ShapeMod3 {
    f.shape_mod3()
}

/// Textual form: nonzero terms `coef*x^i*y^j` by descending `i`, joined with
/// ` + ` (or ` - ` before a negative rational coefficient). Coefficients
/// with an ω part are parenthesized. The zero form prints as `0`.
impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = d - j;
            let negative_rational = c.is_rational() && c.re() < &num_rational::BigRational::from_integer(0.into());
            let body = if c.is_rational() {
                if first || !negative_rational {
                    c.to_string()
                } else {
                    (-c).to_string()
                }
            } else {
                format!("({c})")
            };
            if !first {
                f.write_str(if negative_rational { " - " } else { " + " })?;
            }
            write!(f, "{body}*x^{i}*y^{j}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for BinaryForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty form".into()));
        }
        if s == ['0'] {
            return Ok(BinaryForm::zero());
        }
        let mut terms: Vec<(QOmega, usize, usize)> = Vec::new();
        let mut pos = 0;
        let err = |msg: &str| Error::Parse(format!("form: {msg}"));
        while pos < s.len() {
            let mut negate = false;
            if s[pos] == '+' || s[pos] == '-' {
                negate = s[pos] == '-';
                pos += 1;
            } else if !terms.is_empty() {
                return Err(err("expected `+` or `-` between terms"));
            }
            let coef: Option<QOmega> = if s.get(pos) == Some(&'(') {
                let close = s[pos..].iter().position(|&c| c == ')').ok_or_else(|| err("unbalanced parenthesis"))?;
                let text: String = s[pos + 1..pos + close].iter().collect();
                pos += close + 1;
                Some(text.parse()?)
            } else {
                let start = pos;
                while pos < s.len() && (s[pos].is_ascii_digit() || s[pos] == '/') {
                    pos += 1;
                }
                let text: String = s[start..pos].iter().collect();
                if text.is_empty() {
                    None
                } else {
                    Some(text.parse()?)
                }
            };
            let has_coef = coef.is_some();
            let coef = coef.unwrap_or_else(QOmega::one);
            let coef = if negate { -coef } else { coef };
            let (mut i, mut j) = (0, 0);
            let mut factors = 0;
            loop {
                let mut at = pos;
                if has_coef || factors > 0 {
                    if s.get(at) != Some(&'*') {
                        break;
                    }
                    at += 1;
                }
                let var = match s.get(at) {
                    Some(&v @ ('x' | 'y')) => v,
                    _ if factors == 0 && !has_coef => return Err(err("missing coefficient")),
                    _ => return Err(err("expected `x` or `y`")),
                };
                pos = at + 1;
                let mut e = 1;
                if s.get(pos) == Some(&'^') {
                    pos += 1;
                    let start = pos;
                    while pos < s.len() && s[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let text: String = s[start..pos].iter().collect();
                    e = text.parse().map_err(|_| err("bad exponent"))?;
                }
                if var == 'x' {
                    i += e;
                } else {
                    j += e;
                }
                factors += 1;
            }
            terms.push((coef, i, j));
        }
        let d = terms[0].1 + terms[0].2;
        let mut coeffs = vec![QOmega::zero(); d + 1];
        for (c, i, j) in terms {
            if i + j != d {
                return Err(err("terms of different total degree"));
            }
            coeffs[j] += &c;
        }
        Ok(BinaryForm::from_coeffs(coeffs))
    }
}

/// JSON shape of a form: `{"degree": d, "coeffs": ["a+b*w", ...]}`, with
/// `degree: null` and no coefficients for the zero form.
#[derive(Serialize, Deserialize)]
pub struct FormRecord {
    pub degree: Option<usize>,
    pub coeffs: Vec<String>,
}

impl From<BinaryForm> for FormRecord {
    fn from(f: BinaryForm) -> Self {
        FormRecord { degree: f.degree(), coeffs: f.coeffs.iter().map(ToString::to_string).collect() }
    }
}

impl TryFrom<FormRecord> for BinaryForm {
    type Error = Error;

    fn try_from(r: FormRecord) -> Result<Self> {
        let coeffs = r.coeffs.iter().map(|c| c.parse()).collect::<Result<Vec<QOmega>>>()?;
        match r.degree {
            None if coeffs.is_empty() => Ok(BinaryForm::zero()),
            Some(d) if coeffs.len() == d + 1 => {
                if coeffs.iter().all(QOmega::is_zero) {
                    Err(Error::Parse("nonzero degree with all-zero coefficients".into()))
                } else {
                    Ok(BinaryForm { coeffs })
                }
            }
            _ => Err(Error::Parse("degree does not match coefficient count".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> BinaryForm {
        s.parse().unwrap()
    }

    fn x() -> BinaryForm {
        BinaryForm::x()
    }

    fn y() -> BinaryForm {
        BinaryForm::y()
    }

    #[test]
    fn product_of_linear_forms() {
        assert_eq!(&(&x() + &y()) * &(&x() - &y()), BinaryForm::from_ints(&[1, 0, -1]));
        assert!((&x() * &BinaryForm::zero()).is_zero());
    }

    #[test]
    fn add_degree_mismatch() {
        let e = x().checked_add(&BinaryForm::one()).unwrap_err();
        assert_eq!(e, Error::DegreeMismatch(1, 0));
        assert_eq!(x().checked_add(&BinaryForm::zero()).unwrap(), x());
        assert!(x().checked_sub(&x()).unwrap().is_zero());
    }

    #[test]
    fn degree_twelve_table_arithmetic() {
        // -3(x^3 - y^3)^3 (x^3 + y^3) - (1 + 2w)(x^3 (x^3 + 2y^3)^3 + y^3 (y^3 + 2x^3)^3)
        let x3 = x().pow(3);
        let y3 = y().pow(3);
        let two = QOmega::from_integer(2);
        let a = (&x3 - &y3).pow(3) * (&x3 + &y3);
        let b = &x3 * &(&x3 + &y3.scale(&two)).pow(3) + &y3 * &(&y3 + &x3.scale(&two)).pow(3);
        let p12 = &a.scale(&QOmega::from_integer(-3)) - &b.scale(&QOmega::from_ints(1, 2));
        assert_eq!(p12.degree(), Some(12));
        // x^12: -3 - (1 + 2w) = -4 - 2w; y^12: 3 - (1 + 2w) = 2 - 2w.
        assert_eq!(p12.coeff(12, 0), QOmega::from_ints(-4, -2));
        assert_eq!(p12.coeff(0, 12), QOmega::from_ints(2, -2));
        assert_eq!(p12.coeff(11, 1), QOmega::zero());
    }

    #[test]
    fn substitution() {
        let u = f("1*x^2*y^0 + 3*x^1*y^1");
        let v = f("(1+2*w)*x^0*y^2");
        assert_eq!(x().substitute(&u, &v).unwrap(), u);
        let g = BinaryForm::from_ints(&[1, 1, 1]);
        let got = g.substitute(&x().pow(3), &y().pow(3)).unwrap();
        assert_eq!(got, BinaryForm::from_ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(g.substitute(&x(), &BinaryForm::one()), Err(Error::InhomogeneousSubstitution));
    }

    #[test]
    fn substitution_with_zero_argument() {
        let g = BinaryForm::from_ints(&[2, 1, 5]);
        let got = g.substitute(&x(), &BinaryForm::zero()).unwrap();
        assert_eq!(got, BinaryForm::from_ints(&[2, 0, 0]));
    }

    #[test]
    fn gcd_examples() {
        let x2y = BinaryForm::monomial(QOmega::one(), 2, 1);
        let xy2 = BinaryForm::monomial(QOmega::one(), 1, 2);
        assert_eq!(gcd(&x2y, &xy2).unwrap(), BinaryForm::monomial(QOmega::one(), 1, 1));
        let l = &x() + &y().scale(&QOmega::omega());
        let a = l.pow(2);
        let b = &l * &(&x() - &y());
        assert_eq!(gcd(&a, &b).unwrap(), l);
        assert_eq!(gcd(&BinaryForm::zero(), &BinaryForm::zero()), Err(Error::UndefinedGcd));
        let three_x = x().scale(&QOmega::from_integer(3));
        assert_eq!(gcd(&three_x, &BinaryForm::zero()).unwrap(), x());
        assert!(gcd(&x(), &y()).unwrap().is_constant());
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &y()) * &(&x() - &y().scale(&QOmega::omega()));
        assert_eq!(a.div_exact(&(&x() + &y())).unwrap(), Some(&x() - &y().scale(&QOmega::omega())));
        assert_eq!(a.div_exact(&x()).unwrap(), None);
        let y2 = y().pow(2);
        assert_eq!((&y2 * &x()).div_exact(&y2).unwrap(), Some(x()));
        assert_eq!(x().div_exact(&BinaryForm::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalize_examples() {
        let (g, c) = BinaryForm::monomial(QOmega::from_integer(3), 2, 0).normalize_scale().unwrap();
        assert_eq!((g, c), (x().pow(2), QOmega::from_integer(3)));
        let w = QOmega::from_ints(1, 2);
        let (g, c) = BinaryForm::monomial(w.clone(), 1, 1).normalize_scale().unwrap();
        assert_eq!((g, c), (BinaryForm::monomial(QOmega::one(), 1, 1), w));
        assert_eq!(BinaryForm::zero().normalize_scale(), Err(Error::NormalizeZero));
    }

    #[test]
    fn shape_classes() {
        let p9 = BinaryForm::from_ints(&[-1, 0, 0, 3, 0, 0, 6, 0, 0, 1]);
        let s = p9.shape_mod3();
        assert_eq!((s.x, s.y), (ExponentClass::Uniform(0), ExponentClass::Uniform(0)));
        let p4 = BinaryForm::from_ints(&[1, 0, 0, 2, 0]);
        let s = p4.shape_mod3();
        assert_eq!((s.x, s.y), (ExponentClass::Uniform(1), ExponentClass::Uniform(0)));
        let s = BinaryForm::from_ints(&[1, 1, 0]).shape_mod3();
        assert_eq!((s.x, s.y), (ExponentClass::Mixed([false, true, true]), ExponentClass::Mixed([true, true, false])));
        assert!(!s.avoids_residue_two());
        assert_eq!(BinaryForm::zero().shape_mod3().x, ExponentClass::Empty);
    }

    #[test]
    fn deflate_and_inflate() {
        let p4 = BinaryForm::from_ints(&[1, 0, 0, 2, 0]);
        let big_p = p4.deflate3(1, 0).unwrap();
        assert_eq!(big_p, BinaryForm::from_ints(&[1, 2]));
        assert_eq!(big_p.inflate3().mul_monomial(1, 0), p4);
        assert_eq!(p4.deflate3(0, 1), None);
    }

    #[test]
    fn text_format() {
        let g = f("1*x^2*y^0 - 3/2*x^1*y^1 + (1+2*w)*x^0*y^2");
        assert_eq!(g.to_string(), "1*x^2*y^0 - 3/2*x^1*y^1 + (1+2*w)*x^0*y^2");
        assert_eq!(f("-1*x^1*y^0 + (-2*w)*x^0*y^1").to_string(), "-1*x^1*y^0 + (-2*w)*x^0*y^1");
        assert_eq!(f("0"), BinaryForm::zero());
        assert_eq!(f("7*x^0*y^0"), BinaryForm::constant(QOmega::from_integer(7)));
        assert!("1*x^2*y^0 + 1*x^0*y^1".parse::<BinaryForm>().is_err());
        assert_eq!(f("x^2 - 3*x*y"), f("1*x^2*y^0 - 3*x^1*y^1"));
        assert_eq!(f("y"), BinaryForm::y());
        assert!("x^".parse::<BinaryForm>().is_err());
        assert!("2*z".parse::<BinaryForm>().is_err());
        assert!("2x".parse::<BinaryForm>().is_err());
    }

    #[test]
    fn json_format() {
        let g = f("1*x^1*y^0 + (1/2-1*w)*x^0*y^1");
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"degree":1,"coeffs":["1","1/2-1*w"]}"#);
        assert_eq!(serde_json::from_str::<BinaryForm>(&s).unwrap(), g);
        let z = serde_json::to_string(&BinaryForm::zero()).unwrap();
        assert_eq!(z, r#"{"degree":null,"coeffs":[]}"#);
        assert!(serde_json::from_str::<BinaryForm>(r#"{"degree":1,"coeffs":["0","0"]}"#).is_err());
        assert!(serde_json::from_str::<BinaryForm>(r#"{"degree":2,"coeffs":["1"]}"#).is_err());
    }
}

//! Rational points on `X³ + Y³ = A`, the Viète iteration, specialization of
//! parametric solutions and the Euler–Binet parameterization of
//! `X³ + Y³ = U³ + V³`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::curve::Solution;
use crate::eisenstein::QOmega;
use crate::error::{Error, Result};
use crate::fraction::RationalFunction;

/// A rational point; the only rational point at infinity is `(1 : -1 : 0)`,
/// the group identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RationalPoint {
    Affine { x: BigRational, y: BigRational },
    Infinity,
}

impl RationalPoint {
    pub fn affine(x: BigRational, y: BigRational) -> Self {
        RationalPoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RationalPoint::affine(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    /// `(X, Y) ↦ (Y, X)`.
    pub fn neg(&self) -> Self {
        match self {
            RationalPoint::Affine { x, y } => RationalPoint::affine(y.clone(), x.clone()),
            RationalPoint::Infinity => RationalPoint::Infinity,
        }
    }
}

fn cube(a: &BigRational) -> BigRational {
    a * a * a
}

/// Tab-separated `X` and `Y`; the point at infinity prints as `inf`.
impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPoint::Affine { x, y } => write!(f, "{x}\t{y}"),
            RationalPoint::Infinity => f.write_str("inf"),
        }
    }
}

struct Fraction<'a>(&'a BigRational);

impl Serialize for Fraction<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Fraction", 2)?;
        st.serialize_field("numerator", &self.0.numer().to_string())?;
        st.serialize_field("denominator", &self.0.denom().to_string())?;
        st.end()
    }
}

/// `{"x":{"numerator":..,"denominator":..},"y":..}` or `{"infinity":true}`.
impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RationalPoint::Affine { x, y } => {
                let mut st = s.serialize_struct("RationalPoint", 2)?;
                st.serialize_field("x", &Fraction(x))?;
                st.serialize_field("y", &Fraction(y))?;
                st.end()
            }
            RationalPoint::Infinity => {
                let mut st = s.serialize_struct("RationalPoint", 1)?;
                st.serialize_field("infinity", &true)?;
                st.end()
            }
        }
    }
}

/// The curve `X³ + Y³ = A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitContext {
    a: BigRational,
}

impl OrbitContext {
    pub fn new(a: BigRational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroCurveConstant);
        }
        Ok(OrbitContext { a })
    }

    /// The curve through `pt`.
    pub fn through(pt: &RationalPoint) -> Result<Self> {
        match pt {
            RationalPoint::Affine { x, y } => OrbitContext::new(cube(x) + cube(y)),
            RationalPoint::Infinity => Err(Error::NotApplicable),
        }
    }

    pub fn constant(&self) -> &BigRational {
        &self.a
    }

    pub fn contains(&self, pt: &RationalPoint) -> bool {
        match pt {
            RationalPoint::Affine { x, y } => cube(x) + cube(y) == self.a,
            RationalPoint::Infinity => true,
        }
    }

    fn check(&self, pt: &RationalPoint) -> Result<()> {
        if self.contains(pt) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(self.a.to_string()))
        }
    }

    /// `(X(X³ + 2Y³)/(X³ - Y³), -Y(Y³ + 2X³)/(X³ - Y³))`, which is `-2P`.
    pub fn viete_step(&self, pt: &RationalPoint) -> Result<RationalPoint> {
        self.check(pt)?;
        let RationalPoint::Affine { x, y } = pt else {
            return Err(Error::NotApplicable);
        };
        let (x3, y3) = (cube(x), cube(y));
        let den = &x3 - &y3;
        if den.is_zero() {
            return Err(Error::VieteUndefined);
        }
        let two = BigRational::from_integer(2.into());
        let nx = x * (&x3 + &two * &y3) / &den;
        let ny = -(y * (&y3 + &two * &x3)) / &den;
        Ok(RationalPoint::affine(nx, ny))
    }

    /// `steps` successive Viète images of `start`.
    pub fn viete_orbit(&self, start: &RationalPoint, steps: usize) -> Result<Vec<RationalPoint>> {
        let mut out = Vec::with_capacity(steps);
        let mut cur = start.clone();
        for _ in 0..steps {
            cur = self.viete_step(&cur)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// The group law over Q with identity `(1 : -1 : 0)`.
    pub fn add_points(&self, p1: &RationalPoint, p2: &RationalPoint) -> Result<RationalPoint> {
        self.check(p1)?;
        self.check(p2)?;
        let (x1, y1, x2, y2) = match (p1, p2) {
            (RationalPoint::Infinity, p) | (p, RationalPoint::Infinity) => return Ok(p.clone()),
            (RationalPoint::Affine { x: x1, y: y1 }, RationalPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        if *p2 == p1.neg() {
            return Ok(RationalPoint::Infinity);
        }
        let two = BigRational::from_integer(2.into());
        if p1 == p2 {
            // 2P = (-Y(2X³ + Y³), X(X³ + 2Y³)) / (X³ - Y³); X ≠ Y here
            let (x3, y3) = (cube(x1), cube(y1));
            let den = &x3 - &y3;
            let nx = -(y1 * (&two * &x3 + &y3)) / &den;
            let ny = x1 * (&x3 + &two * &y3) / &den;
            return Ok(RationalPoint::affine(nx, ny));
        }
        let cross = x1 * y2 - x2 * y1;
        let z = &self.a * (y1 - y2) + x1 * x2 * &cross;
        let w = &self.a * (x1 - x2) - y1 * y2 * &cross;
        let d = (x1 * x1 * x2 + y1 * y1 * y2) - (x1 * x2 * x2 + y1 * y2 * y2);
        let out = RationalPoint::affine(z / &d, w / &d);
        debug_assert!(self.contains(&out));
        Ok(out)
    }

    pub fn double_point(&self, pt: &RationalPoint) -> Result<RationalPoint> {
        self.add_points(pt, pt)
    }
}

/// `(p(x0, y0)/r(x0, y0), q(x0, y0)/r(x0, y0))`, a point on
/// `X³ + Y³ = x0³ + y0³`.
pub fn specialize(s: &Solution, x0: &BigRational, y0: &BigRational) -> Result<RationalPoint> {
    let (p, q, r) = match s {
        Solution::Infinity(0) => return Ok(RationalPoint::Infinity),
        Solution::Infinity(_) => return Err(Error::NonRationalSpecialization),
        Solution::Finite { p, q, r } => (p, q, r),
    };
    let x0 = QOmega::from_rational(x0.clone());
    let y0 = QOmega::from_rational(y0.clone());
    let rv = r.evaluate(&x0, &y0);
    if rv.is_zero() {
        return Err(Error::SpecializationPole);
    }
    let xv = p.evaluate(&x0, &y0).checked_div(&rv)?;
    let yv = q.evaluate(&x0, &y0).checked_div(&rv)?;
    if !xv.is_rational() || !yv.is_rational() {
        return Err(Error::NonRationalSpecialization);
    }
    Ok(RationalPoint::affine(xv.re().clone(), yv.re().clone()))
}

/// The four components `(X, Y, U, V)` of a solution of `X³ + Y³ = U³ + V³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerBinet {
    pub x: RationalFunction,
    pub y: RationalFunction,
    pub u: RationalFunction,
    pub v: RationalFunction,
}

impl EulerBinet {
    /// `X³ + Y³ - U³ - V³`.
    pub fn defect(&self) -> Result<RationalFunction> {
        let lhs = self.x.pow(3).checked_add(&self.y.pow(3))?;
        let rhs = self.u.pow(3).checked_add(&self.v.pow(3))?;
        lhs.checked_sub(&rhs)
    }
}

/// With `s = a² + 3b²`:
/// `X = λ(1 - (a - 3b)s)`, `Y = λ((a + 3b)s - 1)`,
/// `U = λ((a + 3b) - s²)`, `V = λ(s² - (a - 3b))`.
/// `a` and `b` must have degree zero (or be zero).
pub fn euler_binet(a: &RationalFunction, b: &RationalFunction, lam: &RationalFunction) -> Result<EulerBinet> {
    let one = RationalFunction::one();
    let three_b = b.scale(&QOmega::from_integer(3));
    let s = a.pow(2).checked_add(&three_b.mul(b))?;
    let minus = a.checked_sub(&three_b)?;
    let plus = a.checked_add(&three_b)?;
    let s2 = s.pow(2);
    Ok(EulerBinet {
        x: lam.mul(&one.checked_sub(&minus.mul(&s))?),
        y: lam.mul(&plus.mul(&s).checked_sub(&one)?),
        u: lam.mul(&plus.checked_sub(&s2)?),
        v: lam.mul(&s2.checked_sub(&minus)?),
    })
}

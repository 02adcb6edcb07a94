//! The solution set of `p³ + q³ = (x³ + y³) r³` as an abelian group.
//!
//! A finite solution `(p : q : r)` is stored in canonical scaling: the triple
//! is divided by the first nonzero coefficient of `p`, so equal projective
//! points are structurally equal. The three points at infinity are
//! `(1 : -ω^j : 0)`, written `Infinity(j)`; `Infinity(0)` is the identity
//! and `Infinity(1)` is the 3-torsion point h₀.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eisenstein::QOmega;
use crate::error::{Error, Result};
use crate::forms::{self, BinaryForm};
use crate::modular;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SolutionRecord", into = "SolutionRecord")]
pub enum Solution {
    Finite { p: BinaryForm, q: BinaryForm, r: BinaryForm },
    /// `(1 : -ω^j : 0)` for `j ∈ {0, 1, 2}`.
    Infinity(u8),
}

/// Why a finite triple fails to be a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Defect {
    DegreesBad,
    IdentityFails,
    NotCoprime,
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Defect::DegreesBad => "degrees-bad",
            Defect::IdentityFails => "identity-fails",
            Defect::NotCoprime => "not-coprime",
        })
    }
}

/// `x³ + y³`.
pub fn sum_of_cubes() -> BinaryForm {
    BinaryForm::from_ints(&[1, 0, 0, 1])
}

impl Solution {
    /// The finite point `(p : q : r)` in canonical scaling. No validity
    /// check is made; see [`Solution::check`].
    pub fn finite(p: BinaryForm, q: BinaryForm, r: BinaryForm) -> Solution {
        let scale = p.first_nonzero().or_else(|| q.first_nonzero()).or_else(|| r.first_nonzero()).cloned();
        match scale {
            Some(c) if !c.is_one() => {
                let inv = c.inv().expect("nonzero");
                Solution::Finite { p: p.scale(&inv), q: q.scale(&inv), r: r.scale(&inv) }
            }
            _ => Solution::Finite { p, q, r },
        }
    }

    pub fn infinity(j: i64) -> Solution {
        Solution::Infinity(j.rem_euclid(3) as u8)
    }

    /// The group identity `(1 : -1 : 0)`.
    pub fn identity() -> Solution {
        Solution::Infinity(0)
    }

    /// h₀ = `(1 : -ω : 0)`, of order 3.
    pub fn h0() -> Solution {
        Solution::Infinity(1)
    }

    /// h₁ = `(x : y : 1)`.
    pub fn h1() -> Solution {
        Solution::finite(BinaryForm::x(), BinaryForm::y(), BinaryForm::one())
    }

    /// h₂ = `(ωx : ωy : 1)`.
    pub fn h2() -> Solution {
        Solution::h1().omega_mul(1)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Solution::Infinity(_))
    }

    /// `deg p` for a finite solution, 0 at infinity.
    pub fn degree(&self) -> usize {
        match self {
            Solution::Finite { p, .. } => p.degree().unwrap_or(0),
            Solution::Infinity(_) => 0,
        }
    }

    pub fn components(&self) -> Option<(&BinaryForm, &BinaryForm, &BinaryForm)> {
        match self {
            Solution::Finite { p, q, r } => Some((p, q, r)),
            Solution::Infinity(_) => None,
        }
    }

    /// Checks degrees, the defining identity and pairwise coprimality.
    pub fn check(&self) -> std::result::Result<(), Defect> {
        let Solution::Finite { p, q, r } = self else {
            return Ok(());
        };
        let (Some(dp), Some(dq), Some(dr)) = (p.degree(), q.degree(), r.degree()) else {
            return Err(Defect::DegreesBad);
        };
        if dp != dq || dp != dr + 1 {
            return Err(Defect::DegreesBad);
        }
        let lhs = &p.pow(3) + &q.pow(3);
        let rhs = &sum_of_cubes() * &r.pow(3);
        if lhs != rhs {
            return Err(Defect::IdentityFails);
        }
        if !(forms::is_coprime(p, q) && forms::is_coprime(p, r) && forms::is_coprime(q, r)) {
            return Err(Defect::NotCoprime);
        }
        Ok(())
    }

    pub fn verify(&self) -> bool {
        self.check().is_ok()
    }

    /// `-(p : q : r) = (q : p : r)`.
    pub fn neg(&self) -> Solution {
        match self {
            Solution::Finite { p, q, r } => Solution::finite(q.clone(), p.clone(), r.clone()),
            Solution::Infinity(j) => Solution::infinity(-(*j as i64)),
        }
    }

    /// The image under the endomorphism `[ω^k]`: `(ω^k p : ω^k q : r)`.
    /// Points at infinity are fixed.
    pub fn omega_mul(&self, k: i64) -> Solution {
        match self {
            Solution::Finite { p, q, r } => {
                let w = QOmega::omega_pow(k);
                Solution::finite(p.scale(&w), q.scale(&w), r.clone())
            }
            inf => inf.clone(),
        }
    }

    /// `self + t·h₀`: `(ω^t p : ω^(2t) q : r)` for finite points.
    pub fn translate(&self, t: i64) -> Solution {
        match self {
            Solution::Finite { p, q, r } => Solution::finite(
                p.scale(&QOmega::omega_pow(t)),
                q.scale(&QOmega::omega_pow(2 * t)),
                r.clone(),
            ),
            Solution::Infinity(j) => Solution::infinity(*j as i64 + t),
        }
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Solution {
        match self {
            Solution::Finite { p, q, r } => Solution::finite(p.conj(), q.conj(), r.conj()),
            Solution::Infinity(j) => Solution::infinity(-(*j as i64)),
        }
    }

    /// `(ω^j p : ω^k q : r)`.
    fn twist(&self, j: i64, k: i64) -> Solution {
        let (p, q, r) = self.components().expect("finite");
        Solution::finite(p.scale(&QOmega::omega_pow(j)), q.scale(&QOmega::omega_pow(k)), r.clone())
    }

    /// `(ω^k q : ω^j p : r)`.
    fn swapped_twist(&self, j: i64, k: i64) -> Solution {
        let (p, q, r) = self.components().expect("finite");
        Solution::finite(q.scale(&QOmega::omega_pow(k)), p.scale(&QOmega::omega_pow(j)), r.clone())
    }

    /// Group sum.
    pub fn add(&self, other: &Solution) -> Solution {
        match (self, other) {
            (Solution::Infinity(0), s) | (s, Solution::Infinity(0)) => s.clone(),
            (Solution::Infinity(i), Solution::Infinity(j)) => Solution::infinity((*i + *j) as i64),
            (Solution::Infinity(j), s @ Solution::Finite { .. })
            | (s @ Solution::Finite { .. }, Solution::Infinity(j)) => s.translate(*j as i64),
            _ if self == other => self.double(),
            _ => {
                if *other == self.swapped_twist(0, 0) {
                    Solution::identity()
                } else if *other == self.swapped_twist(2, 1) {
                    Solution::Infinity(1)
                } else if *other == self.swapped_twist(1, 2) {
                    Solution::Infinity(2)
                } else {
                    self.chord_sum(other)
                }
            }
        }
    }

    /// Chord through two distinct finite points in general position.
    fn chord_sum(&self, other: &Solution) -> Solution {
        let (p1, q1, r1) = self.components().expect("finite");
        let (p2, q2, r2) = other.components().expect("finite");
        let a = sum_of_cubes();
        let r1r2 = r1 * r2;
        let a_r1r2 = &a * &r1r2;
        let cross = &(p1 * q2) - &(p2 * q1);
        let p1p2 = p1 * p2;
        let q1q2 = q1 * q2;
        let z = &(&a_r1r2 * &(&(q1 * r2) - &(q2 * r1))) + &(&p1p2 * &cross);
        let w = &(&a_r1r2 * &(&(p1 * r2) - &(p2 * r1))) - &(&q1q2 * &cross);
        let d = &(&(&(&p1p2 * p1) + &(&q1q2 * q1)) * r2) - &(&(&(&p1p2 * p2) + &(&q1q2 * q2)) * r1);
        from_projective(z, w, d)
    }

    /// `2(p : q : r) = (-q(2p³ + q³) : p(p³ + 2q³) : r(p³ - q³))`.
    pub fn double(&self) -> Solution {
        match self {
            Solution::Infinity(j) => Solution::infinity(2 * *j as i64),
            Solution::Finite { p, q, r } => {
                let p3 = p.pow(3);
                let q3 = q.pow(3);
                let two = QOmega::from_integer(2);
                let z = -&(q * &(&p3.scale(&two) + &q3));
                let w = p * &(&p3 + &q3.scale(&two));
                let d = r * &(&p3 - &q3);
                from_projective(z, w, d)
            }
        }
    }

    /// `k·self`, by recursive halving: `k·s = ⌊k/2⌋·s + ⌈k/2⌉·s`, so every
    /// chord joins two points whose difference is `s` itself.
    pub fn smul(&self, k: i64) -> Solution {
        if k < 0 {
            return self.smul(-k).neg();
        }
        let mut memo: HashMap<i64, Solution> = HashMap::new();
        memo.insert(0, Solution::identity());
        memo.insert(1, self.clone());
        smul_rec(k, &mut memo)
    }

    /// The 18 affiliates `(ω^j f, ω^k g)` and `(ω^k g, ω^j f)`, ordered by
    /// `(j, k)` with the unswapped block first.
    pub fn affiliates(&self) -> Result<AffiliateClass> {
        if self.is_infinite() {
            return Err(Error::NotApplicable);
        }
        let mut members = Vec::with_capacity(18);
        for j in 0..3 {
            for k in 0..3 {
                members.push(self.twist(j, k));
            }
        }
        for j in 0..3 {
            for k in 0..3 {
                members.push(self.swapped_twist(j, k));
            }
        }
        Ok(AffiliateClass { representative: self.clone(), members })
    }

    /// Whether `other` is one of the affiliates of `self`.
    pub fn same_affiliate_class(&self, other: &Solution) -> bool {
        if self.is_infinite() || other.is_infinite() || self.degree() != other.degree() {
            return false;
        }
        self.affiliates().is_ok_and(|class| class.members.contains(other))
    }
}

fn smul_rec(k: i64, memo: &mut HashMap<i64, Solution>) -> Solution {
    if let Some(s) = memo.get(&k) {
        return s.clone();
    }
    let half = k / 2;
    let out = if k % 2 == 0 {
        smul_rec(half, memo).double()
    } else {
        let a = smul_rec(half, memo);
        let b = smul_rec(half + 1, memo);
        a.add(&b)
    };
    memo.insert(k, out.clone());
    out
}

/// Reduces a projective triple `(z : w : d)` of equal-degree forms to a
/// canonical solution, stripping the common factor.
fn from_projective(z: BinaryForm, w: BinaryForm, d: BinaryForm) -> Solution {
    if d.is_zero() {
        // (z : w : 0) = (1 : -ω^j : 0)
        let ratio = w.div_exact(&z).expect("z nonzero").expect("proportional");
        let c = -ratio.coeffs()[0].clone();
        let j = (0..3).find(|&j| QOmega::omega_pow(j) == c).expect("ratio is -ω^j");
        return Solution::infinity(j);
    }
    let (z, w, d) = if modular::certify_coprime(&z, &d) {
        (z, w, d)
    } else {
        let g = forms::gcd(&z, &d).expect("d nonzero");
        let strip = |f: &BinaryForm| f.div_exact(&g).expect("g nonzero").expect("common factor divides");
        (strip(&z), strip(&w), strip(&d))
    };
    assert!(
        forms::is_coprime(&z, &w) && forms::is_coprime(&z, &d) && forms::is_coprime(&w, &d),
        "stripped sum is not pairwise coprime"
    );
    Solution::finite(z, w, d)
}

/// The affiliates of one finite solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffiliateClass {
    pub representative: Solution,
    pub members: Vec<Solution>,
}

impl AffiliateClass {
    pub fn contains(&self, s: &Solution) -> bool {
        self.members.contains(s)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Solution::Finite { p, q, r } => write!(f, "({p} : {q} : {r})"),
            Solution::Infinity(j) => write!(f, "(1 : -w^{j} : 0)"),
        }
    }
}

/// JSON shape: `{"kind":"finite","degree":d,"p":..,"q":..,"r":..}` or
/// `{"kind":"infinity","j":j}`.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SolutionRecord {
    Finite { degree: usize, p: BinaryForm, q: BinaryForm, r: BinaryForm },
    Infinity { j: u8 },
}

impl From<Solution> for SolutionRecord {
    fn from(s: Solution) -> Self {
        let degree = s.degree();
        match s {
            Solution::Finite { p, q, r } => SolutionRecord::Finite { degree, p, q, r },
            Solution::Infinity(j) => SolutionRecord::Infinity { j },
        }
    }
}

impl TryFrom<SolutionRecord> for Solution {
    type Error = Error;

    fn try_from(rec: SolutionRecord) -> Result<Self> {
        match rec {
            SolutionRecord::Infinity { j } if j < 3 => Ok(Solution::Infinity(j)),
            SolutionRecord::Infinity { j } => Err(Error::Parse(format!("infinity index {j} not in 0..3"))),
            SolutionRecord::Finite { degree, p, q, r } => {
                if p.degree() != Some(degree) {
                    return Err(Error::Parse(format!("declared degree {degree} does not match p")));
                }
                Ok(Solution::finite(p, q, r))
            }
        }
    }
}

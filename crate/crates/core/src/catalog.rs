//! Canonical coordinates `(m, n, t)` for `m·h₁ + n·h₂ + t·h₀`, generation,
//! composition of solutions and recognition.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::Solution;
use crate::eisenstein::{EisensteinInt, QOmega};
use crate::error::{Error, Result};
use crate::forms::{self, BinaryForm};
use crate::modular;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonCoord {
    pub m: i64,
    pub n: i64,
    pub t: u8,
}

impl CanonCoord {
    /// `t` is reduced mod 3.
    pub fn new(m: i64, n: i64, t: i64) -> Self {
        CanonCoord { m, n, t: t.rem_euclid(3) as u8 }
    }

    /// `m² - mn + n²`.
    pub fn degree(&self) -> i64 {
        phi(self.m, self.n)
    }

    pub fn lattice(&self) -> EisensteinInt {
        EisensteinInt::new(self.m, self.n)
    }
}

impl fmt::Display for CanonCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.n, self.t)
    }
}

/// `m² - mn + n²`.
pub fn phi(m: i64, n: i64) -> i64 {
    m * m - m * n + n * n
}

/// Computes `z·h₁` for Eisenstein integers `z`, remembering every
/// intermediate multiple.
///
/// With `e ∈ {0, 1, ω, 1 + ω}` congruent to `z` mod 2 and `s = (z - e)/2`,
/// `z·h₁` is `2(s·h₁)` when `e = 0` and `s·h₁ + (s + e)·h₁` otherwise. The
/// two summands differ by a unit multiple of h₁, so each chord meets a
/// common factor of degree one only. Associates are derived by the unit
/// action instead of being recomputed.
#[derive(Default)]
pub struct Generator {
    memo: HashMap<EisensteinInt, Solution>,
}

impl Generator {
    pub fn new() -> Self {
        Generator::default()
    }

    pub fn generate(&mut self, c: CanonCoord) -> Solution {
        self.multiple(c.lattice()).translate(c.t as i64)
    }

    /// `z·h₁`, where `(m + nω)·h₁ = m·h₁ + n·h₂`.
    pub fn multiple(&mut self, z: EisensteinInt) -> Solution {
        if z.is_zero() {
            return Solution::identity();
        }
        if let Some(s) = self.memo.get(&z) {
            return s.clone();
        }
        if let Some(s) = self.associate(z) {
            self.memo.insert(z, s.clone());
            return s;
        }
        let e = EisensteinInt::new(z.m.rem_euclid(2), z.n.rem_euclid(2));
        let half = EisensteinInt::new((z.m - e.m) / 2, (z.n - e.n) / 2);
        let out = if e.is_zero() {
            self.multiple(half).double()
        } else {
            let a = self.multiple(half);
            let b = self.multiple(half + e);
            a.add(&b)
        };
        self.memo.insert(z, out.clone());
        out
    }

    /// `z·h₁` from a memoized `(z·u⁻¹)·h₁`, or from h₁ when `z` is a unit.
    fn associate(&self, z: EisensteinInt) -> Option<Solution> {
        let h1 = Solution::h1();
        for k in 0..3 {
            for sign in [1, -1] {
                // u = sign·ω^k; z·u⁻¹ = sign·ω^(-k)·z
                let mut w = z;
                for _ in 0..(3 - k) % 3 {
                    w = EisensteinInt::OMEGA * w;
                }
                if sign < 0 {
                    w = -w;
                }
                let base = if w == EisensteinInt::ONE { Some(&h1) } else { self.memo.get(&w) };
                if let Some(base) = base {
                    let rotated = base.omega_mul(k as i64);
                    return Some(if sign < 0 { rotated.neg() } else { rotated });
                }
            }
        }
        None
    }
}

/// `m·h₁ + n·h₂ + t·h₀`.
pub fn generate(c: CanonCoord) -> Solution {
    Generator::new().generate(c)
}

/// Substitution `v ∘ w = (p(p', q') : q(p', q') : r'·r(p', q'))`, with any
/// common factor stripped. The stripped factor is returned alongside; it is
/// always constant.
pub fn compose_with_residue(v: &Solution, w: &Solution) -> Result<(Solution, BinaryForm)> {
    let Solution::Finite { p, q, r } = v else {
        return Ok((v.clone(), BinaryForm::one()));
    };
    let Solution::Finite { p: p2, q: q2, r: r2 } = w else {
        return Err(Error::UndefinedComposition);
    };
    let pc = p.substitute(p2, q2)?;
    let qc = q.substitute(p2, q2)?;
    let rc = r2 * &r.substitute(p2, q2)?;
    if modular::certify_coprime(&pc, &rc) {
        return Ok((Solution::finite(pc, qc, rc), BinaryForm::one()));
    }
    let g = forms::gcd(&pc, &rc)?;
    let strip = |f: &BinaryForm| f.div_exact(&g).map(|o| o.expect("gcd divides"));
    Ok((Solution::finite(strip(&pc)?, strip(&qc)?, strip(&rc)?), g))
}

/// `v ∘ w`; panics if a nonconstant common factor had to be removed.
pub fn compose(v: &Solution, w: &Solution) -> Result<Solution> {
    let (s, residue) = compose_with_residue(v, w)?;
    assert!(residue.is_constant(), "composition produced a common factor {residue}");
    Ok(s)
}

/// Coordinates of the composite: `(mm' - nn', mn' + m'n - nn', (m + n)t' + t)`.
pub fn compose_coords(c: CanonCoord, c2: CanonCoord) -> CanonCoord {
    let (m, n, t) = (c.m, c.n, c.t as i64);
    let (m2, n2, t2) = (c2.m, c2.n, c2.t as i64);
    CanonCoord::new(m * m2 - n * n2, m * n2 + m2 * n - n * n2, (m + n) * t2 + t)
}

/// Coordinates of the group sum.
pub fn add_coords(c: CanonCoord, c2: CanonCoord) -> CanonCoord {
    CanonCoord::new(c.m + c2.m, c.n + c2.n, c.t as i64 + c2.t as i64)
}

/// `m·h₁ + n·h₂ ↦ m + nω`.
pub fn rmap(c: CanonCoord) -> Result<EisensteinInt> {
    if c.t != 0 {
        return Err(Error::OutsideV1(c.t));
    }
    Ok(EisensteinInt::new(c.m, c.n))
}

pub fn rmap_inv(z: EisensteinInt) -> CanonCoord {
    CanonCoord::new(z.m, z.n, 0)
}

/// Coordinates of `(ωp : ωq : r)`: `(-n, m - n, t)`.
pub fn omega_action(c: CanonCoord) -> CanonCoord {
    CanonCoord::new(-c.n, c.m - c.n, c.t as i64)
}

/// Coordinates of the complex conjugate: `(m - n, -n, 2t)`.
pub fn conjugate_coords(c: CanonCoord) -> CanonCoord {
    CanonCoord::new(c.m - c.n, -c.n, 2 * c.t as i64)
}

/// All `(m, n)` with `m² - mn + n² = d`, in lexicographic order.
pub fn shell(d: i64) -> Vec<(i64, i64)> {
    if d <= 0 {
        return if d == 0 { vec![(0, 0)] } else { Vec::new() };
    }
    let bound = lattice_bound(d);
    let mut out = Vec::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            if phi(m, n) == d {
                out.push((m, n));
            }
        }
    }
    out
}

/// `m² - mn + n² ≥ (m² + n²)/2`, so `|m|, |n| ≤ ⌈√(2d)⌉` on the shell.
fn lattice_bound(d: i64) -> i64 {
    let mut b = (2.0 * d as f64).sqrt().ceil() as i64;
    while b * b < 2 * d {
        b += 1;
    }
    b
}

/// The coordinates of `s`, found by searching the shell of its degree.
pub fn recognize(s: &Solution) -> Result<CanonCoord> {
    recognize_with(&mut Generator::new(), s)
}

pub fn recognize_with(generator: &mut Generator, s: &Solution) -> Result<CanonCoord> {
    if let Solution::Infinity(j) = s {
        return Ok(CanonCoord::new(0, 0, *j as i64));
    }
    let d = s.degree() as i64;
    for (m, n) in shell(d) {
        let base = generator.multiple(EisensteinInt::new(m, n));
        for t in 0..3 {
            if base.translate(t) == *s {
                return Ok(CanonCoord::new(m, n, t));
            }
        }
    }
    Err(Error::NotInSolutionSet)
}

/// Which pattern of exponents the components follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "shape")]
pub enum Shape {
    /// `p = P(x³, y³)`, `q = Q(x³, y³)`, `r = xy·R(x³, y³)`.
    Div3,
    /// `p = x·P(x³, y³)`, `q = y·Q(x³, y³)`, `r = R(x³, y³)`, after
    /// exchanging `p` and `q` when `swapped`.
    Res1 { swapped: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    #[serde(rename = "P")]
    pub p: BinaryForm,
    #[serde(rename = "Q")]
    pub q: BinaryForm,
    #[serde(rename = "R")]
    pub r: BinaryForm,
    #[serde(flatten)]
    pub shape: Shape,
}

/// Regroups the components of `s` as forms in `x³` and `y³`.
pub fn extract_structure(s: &Solution) -> Result<Structure> {
    let (p, q, r) = s.components().ok_or(Error::NotApplicable)?;
    let d = s.degree();
    match d % 3 {
        0 => match (p.deflate3(0, 0), q.deflate3(0, 0), r.deflate3(1, 1)) {
            (Some(pp), Some(qq), Some(rr)) => Ok(Structure { p: pp, q: qq, r: rr, shape: Shape::Div3 }),
            _ => Err(Error::ShapeViolation(format!("degree {d} components are not P(x^3,y^3), Q(x^3,y^3), xyR(x^3,y^3)"))),
        },
        1 => {
            let r3 = r.deflate3(0, 0);
            for (swapped, a, b) in [(false, p, q), (true, q, p)] {
                if let (Some(pp), Some(qq), Some(rr)) = (a.deflate3(1, 0), b.deflate3(0, 1), r3.clone()) {
                    return Ok(Structure { p: pp, q: qq, r: rr, shape: Shape::Res1 { swapped } });
                }
            }
            Err(Error::ShapeViolation(format!("degree {d} components are not xP(x^3,y^3), yQ(x^3,y^3), R(x^3,y^3)")))
        }
        _ => Err(Error::ShapeViolation(format!("degree {d} is congruent to 2 mod 3"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reality {
    /// `n = t = 0`: real coefficients.
    Real,
    /// `t = 0` and `(m, n) = k(1, 2)`: a multiple of v₃, of the shape `(f, f̄)`.
    ConjPair,
    /// The affiliate class is closed under conjugation.
    SelfConjugateClass,
    Generic,
}

impl fmt::Display for Reality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reality::Real => "real",
            Reality::ConjPair => "conj-pair",
            Reality::SelfConjugateClass => "self-conjugate-class",
            Reality::Generic => "generic",
        })
    }
}

pub fn classify_reality(c: CanonCoord) -> Reality {
    let (m, n) = (c.m, c.n);
    if n == 0 && c.t == 0 {
        Reality::Real
    } else if c.t == 0 && m != 0 && n == 2 * m {
        Reality::ConjPair
    } else if m * n * (m - n) == 0 || (m + n) * (m - 2 * n) * (2 * m - n) == 0 {
        Reality::SelfConjugateClass
    } else {
        Reality::Generic
    }
}

/// One catalog record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub m: i64,
    pub n: i64,
    pub t: u8,
    pub degree: usize,
    pub solution: Solution,
}

impl CatalogEntry {
    pub fn coord(&self) -> CanonCoord {
        CanonCoord::new(self.m, self.n, self.t as i64)
    }
}

/// Every `m·h₁ + n·h₂ + t·h₀` with `1 ≤ m² - mn + n² ≤ dmax`, sorted by
/// `(degree, m, n, t)`. With `parallel`, the lattice cells are generated on
/// the rayon pool, each with its own memo.
pub fn build_catalog(dmax: usize, parallel: bool) -> Vec<CatalogEntry> {
    let cells: Vec<(i64, i64)> = (1..=dmax as i64).flat_map(shell).collect();
    let cell_entries = |generator: &mut Generator, (m, n): (i64, i64)| -> Vec<CatalogEntry> {
        let base = generator.multiple(EisensteinInt::new(m, n));
        (0..3)
            .map(|t| {
                let solution = base.translate(t);
                CatalogEntry { m, n, t: t as u8, degree: solution.degree(), solution }
            })
            .collect()
    };
    let mut entries: Vec<CatalogEntry> = if parallel {
        cells.par_iter().flat_map_iter(|&cell| cell_entries(&mut Generator::new(), cell)).collect()
    } else {
        let mut generator = Generator::new();
        cells.iter().flat_map(|&cell| cell_entries(&mut generator, cell)).collect()
    };
    entries.sort_by_key(|e| (e.degree, e.m, e.n, e.t));
    entries
}

/// Number of affiliate classes among catalog entries of degree `d`.
pub fn affiliate_class_count(entries: &[CatalogEntry], d: usize) -> usize {
    let mut reps: Vec<&Solution> = Vec::new();
    for e in entries.iter().filter(|e| e.degree == d) {
        if !reps.iter().any(|r| r.same_affiliate_class(&e.solution)) {
            reps.push(&e.solution);
        }
    }
    reps.len()
}

/// The solutions of degree at most 12, as listed classically, one per
/// affiliate class (the conjugate classes of degrees 7 and 12 omitted).
pub mod table {
    use super::*;

    fn f(s: &str) -> BinaryForm {
        s.parse().expect("table form")
    }

    fn c(a: i64, b: i64) -> QOmega {
        QOmega::from_ints(a, b)
    }

    pub fn v1() -> Solution {
        Solution::h1()
    }

    /// The degree-3 entry with `ζ^∓1/√3` rewritten as `(2 + ω^±1)/3`.
    pub fn v3() -> Solution {
        let third = QOmega::frac(1, 3);
        let a = &c(1, -1) * &third; // (2 + ω²)/3
        let b = &c(2, 1) * &third; // (2 + ω)/3
        let x3 = BinaryForm::monomial(QOmega::one(), 3, 0);
        let y3 = BinaryForm::monomial(QOmega::one(), 0, 3);
        Solution::finite(
            &x3.scale(&a) + &y3.scale(&b),
            &x3.scale(&b) + &y3.scale(&a),
            BinaryForm::monomial(QOmega::one(), 1, 1),
        )
    }

    pub fn v4() -> Solution {
        Solution::finite(f("x^4 + 2*x*y^3"), f("-2*x^3*y - y^4"), f("x^3 - y^3"))
    }

    pub fn v7() -> Solution {
        let k = c(1, 3);
        let x6 = f("x^6");
        let x3y3 = f("x^3*y^3");
        let y6 = f("y^6");
        let p = &BinaryForm::x() * &(&x6 + &(&x3y3 + &y6).scale(&k));
        let q = &BinaryForm::y() * &(&(&x6 + &x3y3).scale(&k) + &y6);
        let r = &(&x6 + &x3y3.scale(&c(1, -3))) + &y6;
        Solution::finite(p, q, r)
    }

    pub fn v9() -> Solution {
        Solution::finite(
            f("-x^9 + 3*x^6*y^3 + 6*x^3*y^6 + y^9"),
            f("x^9 + 6*x^6*y^3 + 3*x^3*y^6 - y^9"),
            f("3*x^7*y + 3*x^4*y^4 + 3*x*y^7"),
        )
    }

    pub fn v12() -> Solution {
        let x3 = f("x^3");
        let y3 = f("y^3");
        let a = &x3 - &y3;
        let b = &x3 + &y3;
        let u = &x3 + &y3.scale(&c(2, 0));
        let w = &y3 + &x3.scale(&c(2, 0));
        let common = &a.pow(3) * &b.scale(&c(-3, 0));
        let tail = &(&x3 * &u.pow(3)) + &(&y3 * &w.pow(3));
        // 1 + 2ω² = -1 - 2ω
        let p = &common - &tail.scale(&c(1, 2));
        let q = &common - &tail.scale(&c(-1, -2));
        let r = &(&a * &w) * &u;
        let r = &r * &f("6*x*y");
        Solution::finite(p, q, r)
    }

    /// `(degree, solution, canonical coordinates of an affiliate)`.
    pub fn entries() -> Vec<(usize, Solution, CanonCoord)> {
        vec![
            (1, v1(), CanonCoord::new(1, 0, 0)),
            (3, v3(), CanonCoord::new(1, 2, 0)),
            (4, v4(), CanonCoord::new(-2, 0, 0)),
            (7, v7(), CanonCoord::new(-2, -3, 0)),
            (9, v9(), CanonCoord::new(-3, 0, 0)),
            (12, v12(), CanonCoord::new(-2, -4, 0)),
        ]
    }
}

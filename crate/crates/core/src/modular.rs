//! Reduction of forms modulo degree-one primes of Z[ω].
//!
//! For a prime `p ≡ 1 (mod 3)` and a primitive cube root of unity `ρ` mod
//! `p`, the map `a + bω ↦ a + bρ` is reduction modulo a prime ideal above
//! `p`. If two forms with p-integral coefficients have nonzero images whose
//! gcd over F_p is constant, the forms are coprime over Q(ω): any common
//! factor, scaled to be primitive, reduces to a common factor of the same
//! degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::eisenstein::QOmega;
use crate::forms::BinaryForm;

const PRIMES: [u64; 4] = [4611686018427387847, 4611686018427387817, 4611686018427387787, 4611686018427387751];

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    p: u64,
    rho: u64,
}

impl PrimeField {
    pub(crate) fn new(p: u64) -> Self {
        let e = (p - 1) / 3;
        let rho = (2..).map(|a| pow_mod(a, e, p)).find(|&r| r != 1).expect("p ≡ 1 mod 3");
        PrimeField { p, rho }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((n % &m) + &m) % &m;
        r.to_u64().expect("reduced below p")
    }

    fn reduce_rational(&self, r: &BigRational) -> Option<u64> {
        if r.is_zero() {
            return Some(0);
        }
        let d = self.reduce_int(r.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.reduce_int(r.numer()), self.inv(d)))
    }

    fn reduce(&self, c: &QOmega) -> Option<u64> {
        let a = self.reduce_rational(c.re())?;
        let b = self.reduce_rational(c.om())?;
        Some((a + self.mul(b, self.rho)) % self.p)
    }

    /// Coefficients of the reduced form, `None` if a denominator vanishes.
    pub(crate) fn reduce_form(&self, f: &BinaryForm) -> Option<Vec<u64>> {
        f.coeffs().iter().map(|c| self.reduce(c)).collect()
    }

    /// Degree of the gcd of two nonzero forms over F_p.
    pub(crate) fn gcd_degree(&self, f: &[u64], g: &[u64]) -> usize {
        let yval = |v: &[u64]| v.iter().take_while(|&&c| c == 0).count();
        let k = yval(f).min(yval(g));
        // Dehomogenize at y = 1, ascending powers of x.
        let mut a: Vec<u64> = f[yval(f)..].iter().rev().copied().collect();
        let mut b: Vec<u64> = g[yval(g)..].iter().rev().copied().collect();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = self.rem(a, &b);
            a = b;
            b = r;
        }
        k + a.len() - 1
    }

    fn rem(&self, mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
        let db = b.len() - 1;
        let lead_inv = self.inv(b[db]);
        while a.len() > db {
            let top = a.len() - 1;
            let c = self.mul(a[top], lead_inv);
            if c != 0 {
                let shift = top - db;
                for k in 0..db {
                    a[shift + k] = self.sub(a[shift + k], self.mul(c, b[k]));
                }
            }
            a.pop();
            trim(&mut a);
        }
        a
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// `true` only when `f` and `g` are certainly coprime; `false` means the
/// certificate was inconclusive.
pub(crate) fn certify_coprime(f: &BinaryForm, g: &BinaryForm) -> bool {
    if f.is_zero() || g.is_zero() {
        return false;
    }
    if f.is_constant() || g.is_constant() {
        return true;
    }
    PRIMES.iter().map(|&p| PrimeField::new(p)).any(|field| {
        match (field.reduce_form(f), field.reduce_form(g)) {
            (Some(a), Some(b)) if a.iter().any(|&c| c != 0) && b.iter().any(|&c| c != 0) => {
                field.gcd_degree(&a, &b) == 0
            }
            _ => false,
        }
    })
}

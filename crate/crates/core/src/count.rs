//! The number `f(d)` of affiliate classes of solutions of degree `d`.

use serde::Serialize;

use crate::catalog::{self, CatalogEntry};

/// `(e/3)`: 1 for `e ≡ 1`, -1 for `e ≡ 2`, 0 for `e ≡ 0 (mod 3)`.
pub fn legendre3(e: u64) -> i64 {
    match e % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// `Σ_{e | d} (e/3)`.
pub fn count_formula(d: u64) -> i64 {
    assert!(d >= 1, "d must be positive");
    let mut total = 0;
    let mut e = 1;
    while e * e <= d {
        if d.is_multiple_of(e) {
            total += legendre3(e);
            if e * e != d {
                total += legendre3(d / e);
            }
        }
        e += 1;
    }
    total
}

/// `#{(m, n) : m² - mn + n² = d} / 6`.
pub fn count_lattice(d: u64) -> i64 {
    assert!(d >= 1, "d must be positive");
    let d = d as i64;
    // On the ellipse, m² ≤ 4d/3.
    let bound = (2.0 * (d as f64 / 3.0).sqrt()).ceil() as i64 + 1;
    let mut raw = 0;
    for m in -bound..=bound {
        for n in -bound..=bound {
            if catalog::phi(m, n) == d {
                raw += 1;
            }
        }
    }
    assert_eq!(raw % 6, 0, "lattice count {raw} for d = {d} is not a multiple of 6");
    raw / 6
}

/// Coefficients of `Σ_{m,n} z^(m² - mn + n²)` up to `z^order`.
pub fn theta_coefficients(order: usize) -> Vec<i64> {
    let mut coeffs = vec![0; order + 1];
    let bound = (2.0 * (order as f64 / 3.0).sqrt()).ceil() as i64 + 1;
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = catalog::phi(m, n) as usize;
            if e <= order {
                coeffs[e] += 1;
            }
        }
    }
    coeffs
}

/// Coefficients of `1 + 6 Σ_i (z^(3i+1)/(1 - z^(3i+1)) - z^(3i+2)/(1 - z^(3i+2)))`
/// up to `z^order`.
pub fn lambert_coefficients(order: usize) -> Vec<i64> {
    let mut coeffs = vec![0; order + 1];
    coeffs[0] = 1;
    for k in 1..=order {
        let sign = legendre3(k as u64);
        if sign == 0 {
            continue;
        }
        // z^k / (1 - z^k) = z^k + z^2k + ...
        for e in (k..=order).step_by(k) {
            coeffs[e] += 6 * sign;
        }
    }
    coeffs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub d: u64,
    pub f_formula: i64,
    pub f_lattice: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_catalog: Option<i64>,
}

impl CountReport {
    /// All available counts coincide.
    pub fn agrees(&self) -> bool {
        self.f_formula == self.f_lattice && self.f_catalog.is_none_or(|c| c == self.f_formula)
    }
}

/// Reports for `d = 1..=dmax`, cross-checked against the class counts of
/// `catalog` when one is given (it must cover every degree up to `dmax`).
pub fn count_table(dmax: u64, catalog: Option<&[CatalogEntry]>) -> Vec<CountReport> {
    (1..=dmax)
        .map(|d| CountReport {
            d,
            f_formula: count_formula(d),
            f_lattice: count_lattice(d),
            f_catalog: catalog.map(|entries| catalog::affiliate_class_count(entries, d as usize) as i64),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        assert_eq!(count_formula(1), 1);
        assert_eq!(count_formula(2), 0);
        assert_eq!(count_formula(7), 2);
        assert_eq!(count_formula(49), 3);
        assert_eq!(count_formula(1729), 8);
        assert_eq!(count_formula(16), 1);
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(count_lattice(1), 1);
        assert_eq!(count_lattice(3), 1);
        assert_eq!(count_lattice(49), 3);
        assert_eq!(count_lattice(2), 0);
    }

    #[test]
    fn small_table() {
        let table = count_table(12, None);
        let nonzero: Vec<(u64, i64)> = table.iter().filter(|r| r.f_formula != 0).map(|r| (r.d, r.f_formula)).collect();
        assert_eq!(nonzero, vec![(1, 1), (3, 1), (4, 1), (7, 2), (9, 1), (12, 1)]);
        assert!(table.iter().all(CountReport::agrees));
    }

    #[test]
    fn series_agree() {
        assert_eq!(theta_coefficients(300), lambert_coefficients(300));
    }
}

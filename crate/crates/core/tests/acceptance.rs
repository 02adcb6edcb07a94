//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any failed.

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubeforms::catalog::{self, CanonCoord, Generator, Shape};
use cubeforms::count;
use cubeforms::forms::{shape_mod3, BinaryForm};
use cubeforms::fraction::RationalFunction;
use cubeforms::orbits::{self, OrbitContext, RationalPoint};
use cubeforms::{EisensteinInt, QOmega, Solution};

fn form(s: &str) -> BinaryForm {
    s.parse().unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The classical table, typed in from its printed form.
mod reference {
    use super::*;

    pub fn v1() -> Solution {
        Solution::finite(form("x"), form("y"), form("1"))
    }

    pub fn v3() -> Solution {
        // zeta^-1/sqrt3 = (2 + w^2)/3 = (1 - w)/3, zeta/sqrt3 = (2 + w)/3
        Solution::finite(
            form("(1/3-1/3*w)*x^3 + (2/3+1/3*w)*y^3"),
            form("(2/3+1/3*w)*x^3 + (1/3-1/3*w)*y^3"),
            form("x*y"),
        )
    }

    pub fn v4() -> Solution {
        Solution::finite(form("x^4 + 2*x*y^3"), form("-y^4 - 2*x^3*y"), form("x^3 - y^3"))
    }

    pub fn v7() -> Solution {
        Solution::finite(
            form("x^7 + (1+3*w)*x^4*y^3 + (1+3*w)*x*y^6"),
            form("(1+3*w)*x^6*y + (1+3*w)*x^3*y^4 + y^7"),
            form("x^6 + (1-3*w)*x^3*y^3 + y^6"),
        )
    }

    pub fn v9() -> Solution {
        Solution::finite(
            form("-x^9 + 3*x^6*y^3 + 6*x^3*y^6 + y^9"),
            form("x^9 + 6*x^6*y^3 + 3*x^3*y^6 - y^9"),
            form("3*x^7*y + 3*x^4*y^4 + 3*x*y^7"),
        )
    }

    pub fn v12() -> Solution {
        let a = form("x^3 - y^3");
        let b = form("x^3 + y^3");
        let u = form("x^3 + 2*y^3");
        let w = form("2*x^3 + y^3");
        let head = (&a.pow(3) * &b).scale(&QOmega::from_integer(-3));
        let tail = &(&form("x^3") * &u.pow(3)) + &(&form("y^3") * &w.pow(3));
        let p = &head - &tail.scale(&QOmega::from_ints(1, 2));
        // 1 + 2w^2 = -1 - 2w
        let q = &head - &tail.scale(&QOmega::from_ints(-1, -2));
        let r = &(&(&form("6*x*y") * &a) * &w) * &u;
        Solution::finite(p, q, r)
    }

    /// `(degree, triple, canonical coordinates)`.
    pub fn table() -> Vec<(usize, Solution, CanonCoord)> {
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

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    for (d, triple, c) in reference::table() {
        ensure(triple.verify(), || format!("classical degree-{d} triple does not verify"))?;
        let g = catalog::generate(c);
        ensure(g.degree() == d, || format!("generate{c} has degree {}", g.degree()))?;
        ensure(g.same_affiliate_class(&triple), || format!("generate{c} is not an affiliate of the degree-{d} entry"))?;
    }
    within(start.elapsed(), Duration::from_secs(10))
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let mut gen = Generator::new();
    for m in -5..=5 {
        for n in -5..=5 {
            for t in 0..3 {
                let s = gen.generate(CanonCoord::new(m, n, t));
                ensure(s.verify(), || format!("generate({m},{n},{t}) fails verification"))?;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(300))
}

fn degree_law() -> Outcome {
    let mut gen = Generator::new();
    for m in -5i64..=5 {
        for n in -5i64..=5 {
            if (m, n) == (0, 0) {
                continue;
            }
            for t in 0..3 {
                let s = gen.generate(CanonCoord::new(m, n, t));
                let expected = (m * m - m * n + n * n) as usize;
                let (p, _, _) = s.components().ok_or_else(|| format!("({m},{n},{t}) is infinite"))?;
                ensure(p.degree() == Some(expected), || format!("deg p of ({m},{n},{t}) is {:?}", p.degree()))?;
            }
        }
    }
    for t in 0..3 {
        ensure(gen.generate(CanonCoord::new(0, 0, t)) == Solution::infinity(t), || format!("(0,0,{t}) is not infinite"))?;
    }
    Ok(())
}

fn ring_isomorphism() -> Outcome {
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
    for m in -6i64..=6 {
        for n in -6i64..=6 {
            for m2 in -6i64..=6 {
                for n2 in -6i64..=6 {
                    let c = CanonCoord::new(m, n, 0);
                    let c2 = CanonCoord::new(m2, n2, 0);
                    let prod = catalog::rmap(catalog::compose_coords(c, c2)).map_err(|e| e.to_string())?;
                    let expected = EisensteinInt::new(m * m2 - n * n2, m * n2 + n * m2 - n * n2);
                    ensure(prod == expected, || format!("R({c} o {c2}) = {prod}"))?;
                    let sum = catalog::rmap(catalog::add_coords(c, c2)).map_err(|e| e.to_string())?;
                    ensure(sum == EisensteinInt::new(m + m2, n + n2), || format!("R({c} + {c2}) = {sum}"))?;
                }
            }
        }
    }
    let small: Vec<CanonCoord> = (-2i64..=2)
        .flat_map(|m| (-2i64..=2).map(move |n| (m, n)))
        .filter(|&(m, n)| catalog::phi(m, n) <= 4)
        .flat_map(|(m, n)| (0..3).map(move |t| CanonCoord::new(m, n, t)))
        .collect();
    let mut gen = Generator::new();
    for &c in &small {
        for &c2 in &small {
            if (c2.m, c2.n) == (0, 0) {
                continue;
            }
            let (v, w) = (gen.generate(c), gen.generate(c2));
            let (composite, residue) = catalog::compose_with_residue(&v, &w).map_err(|e| e.to_string())?;
            ensure(residue.is_constant(), || format!("{c} o {c2} stripped a factor {residue}"))?;
            let expected = gen.generate(catalog::compose_coords(c, c2));
            ensure(composite == expected, || format!("generate({c}) o generate({c2}) != generate of composed coordinates"))?;
        }
    }
    Ok(())
}

fn composition_facts() -> Outcome {
    let compose = |a: &Solution, b: &Solution| catalog::compose(a, b).map_err(|e| e.to_string());
    ensure(compose(&reference::v3(), &reference::v3())?.same_affiliate_class(&reference::v9()), || "v3 o v3 is not v9".into())?;
    let a = compose(&reference::v3(), &reference::v4())?;
    let b = compose(&reference::v4(), &reference::v3())?;
    ensure(a.same_affiliate_class(&reference::v12()), || "v3 o v4 is not v12".into())?;
    ensure(b.same_affiliate_class(&reference::v12()), || "v4 o v3 is not v12".into())?;
    ensure(a.same_affiliate_class(&b), || "v3 o v4 and v4 o v3 are in different classes".into())
}

/// Brute-force factorization by trial division.
fn factor(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        let mut k = 0;
        while d.is_multiple_of(p) {
            d /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

fn counting() -> Outcome {
    let start = Instant::now();
    for d in 1..=2000u64 {
        let (f, l) = (count::count_formula(d), count::count_lattice(d));
        ensure(f == l, || format!("f({d}): formula {f}, lattice {l}"))?;
        if d % 3 == 2 {
            ensure(f == 0, || format!("f({d}) = {f} for d = 2 mod 3"))?;
        }
        let supported = factor(d).iter().all(|&(p, k)| p % 3 != 2 || k % 2 == 0);
        ensure((f > 0) == supported, || format!("support of f disagrees with factorization at {d}"))?;
    }
    ensure(count::count_formula(1729) == 8, || format!("f(1729) = {}", count::count_formula(1729)))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    let mut pairs = 0;
    while pairs < 200 {
        let a: u64 = rng.gen_range(1..=2000);
        let b: u64 = rng.gen_range(1..=2000 / a);
        if a.gcd(&b) != 1 {
            continue;
        }
        pairs += 1;
        let (fa, fb, fab) = (count::count_formula(a), count::count_formula(b), count::count_formula(a * b));
        ensure(fab == fa * fb, || format!("f({a}*{b}) = {fab} != {fa}*{fb}"))?;
    }
    within(start.elapsed(), Duration::from_secs(30))
}

fn structure_theorems() -> Outcome {
    let entries = catalog::build_catalog(13, true);
    ensure(!entries.is_empty(), || "empty catalog".into())?;
    for e in &entries {
        let (p, q, r) = e.solution.components().ok_or("infinite catalog entry")?;
        for f in [p, q, r] {
            ensure(shape_mod3(f).avoids_residue_two(), || format!("{} has an exponent = 2 mod 3", e.coord()))?;
            let d = f.degree().unwrap();
            for (i, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    ensure((d - i) % 3 != 2 && i % 3 != 2, || format!("monomial x^{}y^{i} in {}", d - i, e.coord()))?;
                }
            }
        }
        let st = catalog::extract_structure(&e.solution).map_err(|err| format!("{}: {err}", e.coord()))?;
        let cube = |f: &BinaryForm| f.substitute(&form("x^3"), &form("y^3")).unwrap();
        let (pp, qq, rr) = (cube(&st.p), cube(&st.q), cube(&st.r));
        let (p, q) = match st.shape {
            Shape::Res1 { swapped: true } => (q, p),
            _ => (p, q),
        };
        let rebuilt = match (e.degree % 3, st.shape) {
            (0, Shape::Div3) => (pp, qq, &form("x*y") * &rr),
            (1, Shape::Res1 { .. }) => (&form("x") * &pp, &form("y") * &qq, rr),
            _ => return Err(format!("{}: degree {} got shape {:?}", e.coord(), e.degree, st.shape)),
        };
        ensure(rebuilt == (p.clone(), q.clone(), r.clone()), || format!("{}: regrouping does not rebuild the triple", e.coord()))?;
    }
    Ok(())
}

fn orbit_reproduction() -> Outcome {
    let ctx = OrbitContext::new(q(189, 1)).map_err(|e| e.to_string())?;
    let start = RationalPoint::from_ints(6, -3);
    ensure(ctx.contains(&start), || "(6,-3) not on X^3+Y^3=189".into())?;
    let first = ctx.viete_step(&start).map_err(|e| e.to_string())?;
    ensure(first == RationalPoint::from_ints(4, 5), || format!("first step gives {first}"))?;
    let second = ctx.viete_step(&first).map_err(|e| e.to_string())?;
    ensure(second == RationalPoint::affine(q(-1256, 61), q(1265, 61)), || format!("second step gives {second}"))?;
    ensure(ctx.contains(&second), || "second point off the curve".into())?;
    let pt = orbits::specialize(&reference::v9(), &q(6, 1), &q(-3, 1)).map_err(|e| e.to_string())?;
    ensure(pt == RationalPoint::affine(q(219, 38), q(-51, 38)), || format!("v9 at (6,-3) gives {pt}"))?;
    ensure(ctx.contains(&pt), || "specialized point off the curve".into())
}

fn lucas_identity() -> Outcome {
    let a = form("-x^3 + 3*x^2*y + 6*x*y^2 + y^3");
    let b = form("x^3 + 6*x^2*y + 3*x*y^2 - y^3");
    let rhs = &(&form("27*x*y") * &form("x + y")) * &form("x^2 + x*y + y^2").pow(3);
    ensure(&a.pow(3) + &b.pow(3) == rhs, || "Lucas identity fails".into())?;
    for f in [&a, &b, &rhs] {
        ensure(f.coeffs().iter().all(|c| c.is_rational()), || "Lucas identity has non-rational coefficients".into())?;
    }
    let cube = |f: &BinaryForm| f.substitute(&form("x^3"), &form("y^3")).unwrap();
    let (ac, bc) = (cube(&a), cube(&b));
    let (p9, q9, r9) = (form("-x^9 + 3*x^6*y^3 + 6*x^3*y^6 + y^9"), form("x^9 + 6*x^6*y^3 + 3*x^3*y^6 - y^9"), form("3*x^7*y + 3*x^4*y^4 + 3*x*y^7"));
    ensure(ac == p9 && bc == q9, || "(x,y) -> (x^3,y^3) image differs from p9, q9".into())?;
    ensure(cube(&rhs) == &form("x^3 + y^3") * &r9.pow(3), || "image of the right side is not (x^3+y^3) r9^3".into())?;
    let image = Solution::finite(ac, bc, r9);
    ensure(image == reference::v9() && image.verify(), || "image triple is not v9".into())
}

fn group_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let entries = catalog::build_catalog(12, false);
    let pick = |rng: &mut ChaCha8Rng| entries[rng.gen_range(0..entries.len())].solution.clone();
    for _ in 0..50 {
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let sum = a.add(&b);
        ensure(sum.verify(), || format!("{a} + {b} does not verify"))?;
        ensure(sum == b.add(&a), || "addition is not commutative".into())?;
    }
    let small: Vec<Solution> = entries.iter().filter(|e| e.degree <= 4).map(|e| e.solution.clone()).collect();
    for _ in 0..20 {
        let [a, b, c] = [0; 3].map(|_| small[rng.gen_range(0..small.len())].clone());
        ensure(a.add(&b).add(&c) == a.add(&b.add(&c)), || "addition is not associative".into())?;
    }
    for e in &entries {
        ensure(e.solution.add(&e.solution.neg()) == Solution::identity(), || format!("{} + (-itself) != 0", e.coord()))?;
        ensure(e.solution.neg().neg() == e.solution, || "negation is not an involution".into())?;
        let thrice = e.solution.add(&Solution::h0()).add(&Solution::h0()).add(&Solution::h0());
        ensure(thrice == e.solution, || format!("{} + 3h0 != itself", e.coord()))?;
    }
    let h0 = Solution::h0();
    ensure(h0 != Solution::identity(), || "h0 = 0".into())?;
    ensure(h0.add(&h0).add(&h0) == Solution::identity(), || "3h0 != 0".into())?;
    ensure(h0.smul(3) == Solution::identity(), || "smul(3, h0) != 0".into())
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-40i64..=40)), BigInt::from(rng.gen_range(1i64..=12)))
}

fn euler_binet() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1778);
    for _ in 0..20 {
        let (a, b, lam) = (random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        let k = |r: &BigRational| RationalFunction::constant(QOmega::from_rational(r.clone()));
        let eb = orbits::euler_binet(&k(&a), &k(&b), &k(&lam)).map_err(|e| e.to_string())?;
        ensure(eb.defect().map_err(|e| e.to_string())?.is_zero(), || format!("identity fails at a={a}, b={b}, lambda={lam}"))?;
        // independent evaluation over Q
        let three = q(3, 1);
        let s = &a * &a + &three * &b * &b;
        let minus = &a - &three * &b;
        let plus = &a + &three * &b;
        let one = q(1, 1);
        let x = &lam * (&one - &minus * &s);
        let y = &lam * (&plus * &s - &one);
        let u = &lam * (&plus - &s * &s);
        let v = &lam * (&s * &s - &minus);
        let cube = |r: &BigRational| r * r * r;
        ensure(cube(&x) + cube(&y) == cube(&u) + cube(&v), || "rational evaluation fails".into())?;
        let value = |f: &RationalFunction| f.evaluate(&QOmega::one(), &QOmega::one()).unwrap();
        ensure(value(&eb.x) == QOmega::from_rational(x) && value(&eb.u) == QOmega::from_rational(u), || "function-field and rational evaluations differ".into())?;
        ensure(value(&eb.y) == QOmega::from_rational(y) && value(&eb.v) == QOmega::from_rational(v), || "function-field and rational evaluations differ".into())?;
    }
    let rf = |n: &str, d: &str| RationalFunction::new(form(n), form(d)).unwrap();
    let a = rf("2*x^2 + 5*x*y + 2*y^2", "2*x^2 + 2*x*y + 2*y^2");
    let b = rf("-3*x^2*y - 3*x*y^2", "2*x^3 - 2*y^3");
    let lam = RationalFunction::from_form(form("x - y").pow(3)).scale(&QOmega::from_integer(-1)).checked_div(&rf("9*x*y", "1")).unwrap();
    let eb = orbits::euler_binet(&a, &b, &lam).map_err(|e| e.to_string())?;
    ensure(eb.x == rf("x", "1"), || format!("X = {}", eb.x))?;
    ensure(eb.y == rf("y", "1"), || format!("Y = {}", eb.y))?;
    ensure(eb.u == rf("x^4 + 2*x*y^3", "x^3 - y^3"), || format!("U = {}", eb.u))?;
    ensure(eb.v == rf("-y^4 - 2*x^3*y", "x^3 - y^3"), || format!("V = {}", eb.v))?;
    ensure(eb.defect().map_err(|e| e.to_string())?.is_zero(), || "identity fails for the degree-4 instance".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("table reproduction", table_reproduction),
        ("identity suite |m|,|n| <= 5", identity_suite),
        ("degree law", degree_law),
        ("ring isomorphism and coherence", ring_isomorphism),
        ("composition facts", composition_facts),
        ("counting", counting),
        ("structure theorems", structure_theorems),
        ("orbit reproduction", orbit_reproduction),
        ("Lucas identity", lucas_identity),
        ("group axioms", group_axioms),
        ("Euler-Binet", euler_binet),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({secs:.2}s)", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2} {name}: FAIL ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

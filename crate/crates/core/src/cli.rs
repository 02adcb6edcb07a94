//! Command-line front end of the `cubeforms` binary.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::catalog::{self, table, CanonCoord, CatalogEntry};
use crate::count;
use crate::curve::Solution;
use crate::eisenstein::{parse_rational, EisensteinInt, QOmega};
use crate::error::Error;
use crate::forms::BinaryForm;
use crate::fraction::RationalFunction;
use crate::orbits::{self, OrbitContext, RationalPoint};

#[derive(Parser, Debug)]
#[command(name = "cubeforms", version, about = "Solutions of p^3 + q^3 = (x^3 + y^3) r^3 in binary forms")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build m*h1 + n*h2 + t*h0.
    #[command(allow_negative_numbers = true)]
    Generate {
        #[arg(short, long)]
        m: i64,
        #[arg(short, long)]
        n: i64,
        #[arg(short, long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..3))]
        t: u8,
        /// Write the solution record here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file and report its canonical coordinates.
    Verify { path: PathBuf },
    /// Group sum of two solutions.
    Add {
        path1: PathBuf,
        path2: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Group inverse.
    Neg {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Substitute the second solution into the first.
    Compose {
        path1: PathBuf,
        path2: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Canonical coordinates (m, n, t) of a solution.
    Recognize { path: PathBuf },
    /// Regroup the components as forms in x^3 and y^3.
    Extract { path: PathBuf },
    /// Every solution with 1 <= m^2 - mn + n^2 <= dmax.
    Catalog {
        #[arg(long)]
        dmax: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Generate lattice cells in parallel.
        #[arg(long)]
        parallel: bool,
    },
    /// Number of affiliate classes per degree.
    Count {
        #[arg(long)]
        dmax: u64,
        /// Cross-check against the class counts of a catalog file.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Iterate the Viete step on X^3 + Y^3 = A.
    #[command(allow_negative_numbers = true)]
    Orbit {
        #[arg(long = "A", visible_alias = "a")]
        a: String,
        #[arg(long)]
        x0: String,
        #[arg(long)]
        y0: String,
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
    /// Evaluate a solution at a rational point (x0, y0).
    #[command(allow_negative_numbers = true)]
    Specialize {
        path: PathBuf,
        #[arg(long)]
        x0: String,
        #[arg(long)]
        y0: String,
    },
    /// Reproduce the classical examples exactly.
    Selftest,
}

/// Result of one command: exit status and text for stdout.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn failure(code: u8, stdout: String, stderr: String) -> Self {
        Outcome { code, stdout, stderr }
    }
}

/// Usage-level failure: unreadable or malformed input.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = std::result::Result<Outcome, UsageError>;

pub fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    let result = match cli.command {
        Command::Generate { m, n, t, out } => cmd_generate(format, CanonCoord::new(m, n, t as i64), out.as_deref()),
        Command::Verify { path } => cmd_verify(format, &path),
        Command::Add { path1, path2, out } => {
            binary_op(format, &path1, &path2, out.as_deref(), |a, b| Ok(a.add(b)))
        }
        Command::Neg { path, out } => read_solution(&path).and_then(|s| emit_solution(format, &s.neg(), out.as_deref())),
        Command::Compose { path1, path2, out } => {
            binary_op(format, &path1, &path2, out.as_deref(), catalog::compose)
        }
        Command::Recognize { path } => cmd_recognize(format, &path),
        Command::Extract { path } => cmd_extract(format, &path),
        Command::Catalog { dmax, out, parallel } => cmd_catalog(format, dmax, out.as_deref(), parallel),
        Command::Count { dmax, catalog } => cmd_count(format, dmax, catalog.as_deref()),
        Command::Orbit { a, x0, y0, steps } => cmd_orbit(format, &a, &x0, &y0, steps),
        Command::Specialize { path, x0, y0 } => cmd_specialize(format, &path, &x0, &y0),
        Command::Selftest => Ok(cmd_selftest(format)),
    };
    result.unwrap_or_else(|UsageError(msg)| Outcome::failure(2, String::new(), format!("error: {msg}\n")))
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn read_solution(path: &Path) -> std::result::Result<Solution, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    if let Ok(s) = serde_json::from_str::<Solution>(&text) {
        return Ok(s);
    }
    serde_json::from_str::<CatalogEntry>(&text)
        .map(|e| e.solution)
        .map_err(|e| UsageError(format!("{}: not a solution record: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> std::result::Result<(), UsageError> {
    fs::write(path, contents).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn emit_solution(format: Format, s: &Solution, out: Option<&Path>) -> CmdResult {
    let record = to_json(s);
    match out {
        Some(path) => {
            write_file(path, &record)?;
            Ok(Outcome::ok(format!("degree={}\n", s.degree())))
        }
        None => Ok(Outcome::ok(match format {
            Format::Json => record,
            Format::Text => format!("degree={}\n{s}\n", s.degree()),
        })),
    }
}

fn binary_op(
    format: Format,
    path1: &Path,
    path2: &Path,
    out: Option<&Path>,
    op: impl Fn(&Solution, &Solution) -> crate::Result<Solution>,
) -> CmdResult {
    let a = read_solution(path1)?;
    let b = read_solution(path2)?;
    emit_solution(format, &op(&a, &b)?, out)
}

fn cmd_generate(format: Format, c: CanonCoord, out: Option<&Path>) -> CmdResult {
    emit_solution(format, &catalog::generate(c), out)
}

#[derive(Serialize)]
struct VerifyReport {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coord: Option<CanonCoord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnosis: Option<String>,
}

fn cmd_verify(format: Format, path: &Path) -> CmdResult {
    let s = read_solution(path)?;
    let diagnosis = match s.check() {
        Err(defect) => defect.to_string(),
        Ok(()) => match catalog::recognize(&s) {
            Ok(c) => {
                let stdout = match format {
                    Format::Json => to_json(&VerifyReport { ok: true, degree: Some(s.degree()), coord: Some(c), diagnosis: None }),
                    Format::Text => format!("OK degree={} (m,n,t)={c}\n", s.degree()),
                };
                return Ok(Outcome::ok(stdout));
            }
            Err(_) => "not-in-solution-set".to_string(),
        },
    };
    let stdout = match format {
        Format::Json => to_json(&VerifyReport { ok: false, degree: None, coord: None, diagnosis: Some(diagnosis.clone()) }),
        Format::Text => format!("FAIL {diagnosis}\n"),
    };
    Ok(Outcome::failure(1, stdout, String::new()))
}

fn cmd_recognize(format: Format, path: &Path) -> CmdResult {
    let s = read_solution(path)?;
    match catalog::recognize(&s) {
        Ok(c) => Ok(Outcome::ok(match format {
            Format::Json => to_json(&c),
            Format::Text => format!("{c}\n"),
        })),
        Err(e) => Ok(Outcome::failure(1, String::new(), format!("error: {e}\n"))),
    }
}

fn cmd_extract(format: Format, path: &Path) -> CmdResult {
    let s = read_solution(path)?;
    let st = match catalog::extract_structure(&s) {
        Ok(st) => st,
        Err(e @ Error::ShapeViolation(_)) => return Ok(Outcome::failure(1, String::new(), format!("error: {e}\n"))),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&st),
        Format::Text => {
            let shape = match st.shape {
                catalog::Shape::Div3 => "div3".to_string(),
                catalog::Shape::Res1 { swapped } => format!("res1 swapped={swapped}"),
            };
            format!("shape={shape}\nP = {}\nQ = {}\nR = {}\n", st.p, st.q, st.r)
        }
    }))
}

fn cmd_catalog(format: Format, dmax: usize, out: Option<&Path>, parallel: bool) -> CmdResult {
    let entries = catalog::build_catalog(dmax, parallel);
    let json = to_json(&entries);
    if let Some(path) = out {
        write_file(path, &json)?;
        return Ok(Outcome::ok(format!("entries={}\n", entries.len())));
    }
    Ok(Outcome::ok(match format {
        Format::Json => json,
        Format::Text => entries.iter().fold(String::new(), |mut acc, e| {
            let _ = writeln!(acc, "{}\t{}\t{}\t{}\t{}", e.degree, e.m, e.n, e.t, e.solution);
            acc
        }),
    }))
}

fn cmd_count(format: Format, dmax: u64, catalog_path: Option<&Path>) -> CmdResult {
    if dmax == 0 {
        return Err(UsageError("dmax must be positive".into()));
    }
    let entries: Option<Vec<CatalogEntry>> = match catalog_path {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Some(serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?)
        }
        None => None,
    };
    let reports = count::count_table(dmax, entries.as_deref());
    let stdout = match format {
        Format::Json => to_json(&reports),
        Format::Text => reports.iter().fold(String::new(), |mut acc, r| {
            let _ = writeln!(acc, "{}\t{}", r.d, r.f_formula);
            acc
        }),
    };
    match reports.iter().find(|r| !r.agrees()) {
        None => Ok(Outcome::ok(stdout)),
        Some(r) => Ok(Outcome::failure(1, stdout, format!("counts disagree at d={}: {r:?}\n", r.d))),
    }
}

fn rational_arg(name: &str, s: &str) -> std::result::Result<BigRational, UsageError> {
    parse_rational(s).map_err(|e| UsageError(format!("--{name}: {e}")))
}

fn emit_points(format: Format, points: &[RationalPoint]) -> String {
    match format {
        Format::Json => to_json(points),
        Format::Text => points.iter().fold(String::new(), |mut acc, p| {
            let _ = writeln!(acc, "{p}");
            acc
        }),
    }
}

fn cmd_orbit(format: Format, a: &str, x0: &str, y0: &str, steps: usize) -> CmdResult {
    let ctx = OrbitContext::new(rational_arg("A", a)?)?;
    let start = RationalPoint::affine(rational_arg("x0", x0)?, rational_arg("y0", y0)?);
    let orbit = ctx.viete_orbit(&start, steps)?;
    Ok(Outcome::ok(emit_points(format, &orbit)))
}

fn cmd_specialize(format: Format, path: &Path, x0: &str, y0: &str) -> CmdResult {
    let s = read_solution(path)?;
    let pt = orbits::specialize(&s, &rational_arg("x0", x0)?, &rational_arg("y0", y0)?)?;
    Ok(Outcome::ok(emit_points(format, &[pt])))
}

/// One named reproduction.
pub struct Check {
    pub name: &'static str,
    pub run: fn() -> bool,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn form(s: &str) -> BinaryForm {
    s.parse().expect("literal form")
}

/// The classical examples reproduced by `selftest`.
pub fn selftest_checks() -> Vec<Check> {
    vec![
        Check {
            name: "table entries verify",
            run: || table::entries().iter().all(|(d, s, _)| s.degree() == *d && s.verify()),
        },
        Check {
            name: "table reproduced from canonical coordinates",
            run: || table::entries().iter().all(|(_, s, c)| catalog::generate(*c).same_affiliate_class(s)),
        },
        Check {
            name: "h0 has order 3",
            run: || Solution::h0() != Solution::identity() && Solution::h0().smul(3) == Solution::identity(),
        },
        Check {
            name: "v3 o v3 = v9",
            run: || catalog::compose(&table::v3(), &table::v3()).is_ok_and(|s| s.same_affiliate_class(&table::v9())),
        },
        Check {
            name: "v3 o v4 = v4 o v3 = v12",
            run: || {
                let a = catalog::compose(&table::v3(), &table::v4()).expect("finite");
                let b = catalog::compose(&table::v4(), &table::v3()).expect("finite");
                a.same_affiliate_class(&table::v12()) && b.same_affiliate_class(&table::v12())
            },
        },
        Check {
            name: "h2 o h2 = -h1 - h2",
            run: || catalog::compose(&Solution::h2(), &Solution::h2()) == Ok(catalog::generate(CanonCoord::new(-1, -1, 0))),
        },
        Check {
            name: "R(v3) = 1 + 2w and R(v4) = -2",
            run: || {
                catalog::rmap(CanonCoord::new(1, 2, 0)) == Ok(EisensteinInt::new(1, 2))
                    && catalog::rmap(CanonCoord::new(-2, 0, 0)) == Ok(EisensteinInt::new(-2, 0))
            },
        },
        Check {
            name: "recognize v9 = (-3,0,0)",
            run: || catalog::recognize(&table::v9()) == Ok(CanonCoord::new(-3, 0, 0)),
        },
        Check {
            name: "two classes of degree 7",
            run: || count::count_formula(7) == 2 && count::count_lattice(7) == 2,
        },
        Check {
            name: "f(1729) = 8",
            run: || count::count_formula(1729) == 8 && count::count_lattice(1729) == 8,
        },
        Check {
            name: "no degree congruent to 2 mod 3",
            run: || (1..=2000u64).filter(|d| d % 3 == 2).all(|d| count::count_formula(d) == 0),
        },
        Check {
            name: "189 = 6^3 + (-3)^3 = 4^3 + 5^3 = (-1256/61)^3 + (1265/61)^3",
            run: || {
                let ctx = OrbitContext::new(q(189, 1)).expect("nonzero");
                ctx.viete_orbit(&RationalPoint::from_ints(6, -3), 2).is_ok_and(|o| {
                    o == vec![RationalPoint::from_ints(4, 5), RationalPoint::affine(q(-1256, 61), q(1265, 61))]
                })
            },
        },
        Check {
            name: "v9 at (6,-3) gives (219/38, -51/38)",
            run: || {
                orbits::specialize(&table::v9(), &q(6, 1), &q(-3, 1))
                    == Ok(RationalPoint::affine(q(219, 38), q(-51, 38)))
            },
        },
        Check {
            name: "Lucas identity and its image v9",
            run: || {
                let a = form("-x^3 + 3*x^2*y + 6*x*y^2 + y^3");
                let b = form("x^3 + 6*x^2*y + 3*x*y^2 - y^3");
                let rhs = &form("27*x^2*y + 27*x*y^2") * &form("x^2 + x*y + y^2").pow(3);
                let r9 = form("3*x^7*y + 3*x^4*y^4 + 3*x*y^7");
                &a.pow(3) + &b.pow(3) == rhs && Solution::finite(a.inflate3(), b.inflate3(), r9) == table::v9()
            },
        },
        Check {
            name: "Euler-Binet instance gives (x, y, f4, g4)",
            run: || {
                let rf = |n: &str, d: &str| RationalFunction::new(form(n), form(d)).expect("nonzero");
                let a = rf("2*x^2 + 5*x*y + 2*y^2", "2*x^2 + 2*x*y + 2*y^2");
                let b = rf("-3*x^2*y - 3*x*y^2", "2*x^3 - 2*y^3");
                let lam = rf("-x^3 + 3*x^2*y - 3*x*y^2 + y^3", "9*x*y");
                orbits::euler_binet(&a, &b, &lam).is_ok_and(|eb| {
                    eb.x == RationalFunction::from_form(BinaryForm::x())
                        && eb.y == RationalFunction::from_form(BinaryForm::y())
                        && eb.u == rf("x^4 + 2*x*y^3", "x^3 - y^3")
                        && eb.v == rf("-2*x^3*y - y^4", "x^3 - y^3")
                })
            },
        },
        Check {
            name: "v3 over Q(w): zeta/sqrt3 = (2+w)/3",
            run: || {
                let (p, _, r) = table::v3().components().map(|(p, q, r)| (p.clone(), q.clone(), r.clone())).expect("finite");
                // canonical p is monic; the ratio of its y^3 and x^3 coefficients is (2+w)/(2+w^2)
                let ratio = p.coeff(0, 3).checked_div(&p.coeff(3, 0)).expect("nonzero");
                ratio == QOmega::from_ints(2, 1).checked_div(&QOmega::from_ints(1, -1)).expect("nonzero")
                    && r.degree() == Some(2)
            },
        },
    ]
}

#[derive(Serialize)]
struct SelftestLine {
    name: &'static str,
    ok: bool,
}

fn cmd_selftest(format: Format) -> Outcome {
    let mut lines = Vec::new();
    for check in selftest_checks() {
        let ok = (check.run)();
        lines.push(SelftestLine { name: check.name, ok });
        if !ok {
            let stdout = render_selftest(format, &lines);
            return Outcome::failure(1, stdout, format!("selftest failed: {}\n", check.name));
        }
    }
    Outcome::ok(render_selftest(format, &lines))
}

fn render_selftest(format: Format, lines: &[SelftestLine]) -> String {
    match format {
        Format::Json => to_json(lines),
        Format::Text => lines.iter().fold(String::new(), |mut acc, l| {
            let _ = writeln!(acc, "{} {}", if l.ok { "ok" } else { "FAIL" }, l.name);
            acc
        }),
    }
}

//! Self-checks behind `riordan verify`.
//!
//! Every check compares two independent constructions of the same object,
//! for example a Riordan product against a closed-form generating function.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{binomial, rational, MultiPoly, Rational};
use crate::error::Result;
use crate::expr::parse_poly;
use crate::families::{
    f_closed, family_array, family_triple, gamma_closed, gf_chain, gf_rows, h_closed, named_triple,
    narayana_array, triangle_series, FamilySpec, Flavor, GenFn, NamedTriple, Polytope,
};
use crate::jfraction::{binomial_transform, JFraction};
use crate::oeis::{check_sequence, check_triangle, fixture, TriangleReport};
use crate::riordan::{ArrayKind, LowerTriMatrix, RiordanArray};
use crate::series::{BivariateSeries, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Props,
    Oeis,
    Group,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Props => "props",
            Suite::Oeis => "oeis",
            Suite::Group => "group",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<Option<String>>) -> Self {
        let name = name.into();
        match outcome {
            Ok(None) => Check { name, passed: true, detail: String::new() },
            Ok(Some(why)) => Check { name, passed: false, detail: why },
            Err(e) => Check { name, passed: false, detail: format!("error: {e}") },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{status} {}", self.name)
        } else {
            write!(f, "{status} {}: {}", self.name, self.detail)
        }
    }
}

pub fn run(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => [Suite::Props, Suite::Oeis, Suite::Group].into_iter().flat_map(run).collect(),
        Suite::Props => props(),
        Suite::Oeis => oeis(),
        Suite::Group => group(),
    }
}

fn expect<T: PartialEq + fmt::Debug>(what: &str, left: &T, right: &T) -> Option<String> {
    (left != right).then(|| format!("{what} differ"))
}

fn first_failure(items: impl IntoIterator<Item = Result<Option<String>>>) -> Result<Option<String>> {
    for item in items {
        if let Some(why) = item? {
            return Ok(Some(why));
        }
    }
    Ok(None)
}

fn parameters() -> Vec<(String, MultiPoly)> {
    let mut out = vec![("r".to_string(), MultiPoly::r())];
    out.extend((0..=3).map(|r| (r.to_string(), MultiPoly::int(r))));
    out
}

fn props() -> Vec<Check> {
    vec![
        Check::new("prop 1: bivariate GF of F_r", prop1_bgf()),
        Check::new("prop 1: reversed GF of F_r", prop1_reversed()),
        Check::new("closed forms for gamma, h and f", closed_forms()),
        Check::new("prop 2: J-fraction of reversed eF_r", prop2()),
        Check::new("prop 3: gamma, h and f fractions", prop3()),
        Check::new("transfer maps associahedron to permutahedron", transfer()),
        Check::new("h-fractions are y-shifts of gamma-fractions", y_shifts()),
        Check::new("Narayana generalized array", narayana()),
        Check::new("aerated double factorials", double_factorials()),
    ]
}

const PROP1_ORDER: usize = 12;

fn ordinary_f_array() -> Result<RiordanArray> {
    family_array(&FamilySpec::symbolic(Flavor::Ordinary), PROP1_ORDER).mul(&RiordanArray::binomial(PROP1_ORDER))
}

fn prop1_bgf() -> Result<Option<String>> {
    let bgf = ordinary_f_array()?.bgf(PROP1_ORDER)?;
    let closed = GenFn::quadratic(parse_poly("y+2")?, parse_poly("r(y+1)")?).expand(PROP1_ORDER);
    Ok(expect("series", &bgf, &closed))
}

fn prop1_reversed() -> Result<Option<String>> {
    let reversed = ordinary_f_array()?.matrix(PROP1_ORDER + 1)?.reversed();
    let closed = gf_chain(&FamilySpec::symbolic(Flavor::Ordinary)).f_reversed.expand(PROP1_ORDER);
    Ok(expect("series", &triangle_series(&reversed), &closed))
}

fn closed_forms() -> Result<Option<String>> {
    const SIZE: usize = 13;
    let mut specs = vec![FamilySpec::symbolic(Flavor::Ordinary)];
    specs.extend((0..=5).map(|r| FamilySpec::with_r(Flavor::Ordinary, r)));
    first_failure(specs.iter().map(|spec| {
        let triple = family_triple(spec, SIZE)?;
        let r = &spec.r;
        for n in 0..SIZE {
            for k in 0..=n {
                let label = |m: &str| Some(format!("{m}({n},{k}) at r = {r}"));
                if &gamma_closed(n, k, r) != triple.gamma.get(n, k) {
                    return Ok(label("gamma"));
                }
                if &h_closed(n, k, r) != triple.h.get(n, k) {
                    return Ok(label("h"));
                }
                if &f_closed(n, k, r) != triple.f.get(n, k) {
                    return Ok(label("f"));
                }
            }
        }
        Ok(None)
    }))
}

const EXP_SIZE: usize = 11;

fn exponential_triple(r: &MultiPoly) -> Result<crate::families::GammaHFTriple> {
    family_triple(&FamilySpec::new(Flavor::Exponential, r.clone()), EXP_SIZE)
}

fn prop2() -> Result<Option<String>> {
    let fraction = JFraction::parse("2y+1", "i r y (y+1)")?;
    first_failure(parameters().into_iter().map(|(label, r)| {
        let expected = exponential_triple(&r)?.f.reversed();
        let specialized = match r.as_integer() {
            Some(v) => fraction.eval_r(i64::try_from(v).expect("small r")),
            None => fraction.clone(),
        };
        Ok(expect(&format!("rows at r = {label}"), &specialized.rows(EXP_SIZE)?, &expected))
    }))
}

fn prop3() -> Result<Option<String>> {
    let triple = exponential_triple(&MultiPoly::r())?;
    let chain = gf_chain(&FamilySpec::symbolic(Flavor::Exponential));
    let rows = |gf: &GenFn| gf_rows(gf, EXP_SIZE);
    let (gamma, h, f) = (rows(&chain.gamma)?, rows(&chain.h)?, rows(&chain.f_reversed)?);
    Ok(expect("gamma rows", &gamma, &triple.gamma)
        .or_else(|| expect("h rows", &h, &triple.h))
        .or_else(|| expect("reversed f rows", &f, &triple.f.reversed())))
}

fn fractions(p: Polytope) -> [JFraction; 3] {
    match named_triple(p, 0) {
        NamedTriple::Fractions { gamma, h, f } => [gamma, h, f],
        NamedTriple::Arrays { .. } => unreachable!("{} is given by fractions", p.name()),
    }
}

fn transfer() -> Result<Option<String>> {
    let assoc = fractions(Polytope::AssociahedronA);
    let perm = fractions(Polytope::Permutahedron);
    Ok(assoc.iter().zip(&perm).zip(["gamma", "h", "f"]).find_map(|((a, p), which)| {
        (a.transfer() != *p).then(|| format!("{which}: {} maps to {}", a, a.transfer()))
    }))
}

/// The h-fraction equals the γ-fraction with every `α` shifted by `y`, and the
/// expansions are related by the binomial transform with parameter `y`.
fn y_shifts() -> Result<Option<String>> {
    const ORDER: usize = 10;
    let y = MultiPoly::y();
    let chain = gf_chain(&FamilySpec::symbolic(Flavor::Exponential));
    let (GenFn::Fraction(exp_gamma), GenFn::Fraction(exp_h)) = (chain.gamma, chain.h) else {
        unreachable!("exponential chains are fractions")
    };
    let [assoc_gamma, assoc_h, _] = fractions(Polytope::AssociahedronA);
    let pairs = [(exp_gamma, exp_h, "exponential family"), (assoc_gamma, assoc_h, "associahedron")];
    Ok(pairs.into_iter().find_map(|(gamma, h, name)| {
        if gamma.binomial_shift(&y) != h {
            return Some(format!("{name}: shifted fraction differs"));
        }
        let moments = gamma.expand(ORDER).into_coeffs();
        let shifted = TruncatedSeries::new(binomial_transform(&moments, &y), ORDER);
        expect(name, &shifted, &h.expand(ORDER))
    }))
}

fn narayana() -> Result<Option<String>> {
    const SIZE: usize = 11;
    let m = narayana_array(SIZE).matrix(SIZE)?;
    let closed = LowerTriMatrix::from_fn(SIZE, |n, k| {
        let (n, k) = (n as i64, k as i64);
        MultiPoly::constant(Rational::new(binomial(n, k) * binomial(n + 1, k), BigInt::from(k + 1)))
    });
    if let Some(why) = expect("entries", &m, &closed) {
        return Ok(Some(why));
    }
    Ok(report_failure(check_triangle(&m, fixture("A001263")?)?))
}

fn double_factorials() -> Result<Option<String>> {
    const ORDER: usize = 10;
    let j = JFraction::parse("0", "i")?.expand(ORDER);
    let x = TruncatedSeries::<Rational>::x(ORDER);
    let egf = x.pow(2).scale(&rational(1, 2)).exp()?.ogf_from_egf()?;
    let egf: BivariateSeries = egf.map(|c| MultiPoly::constant(c.clone()));
    Ok(expect("series", &j, &egf))
}

fn report_failure(report: TriangleReport) -> Option<String> {
    (!report.is_match()).then(|| report.to_string())
}

/// One check per embedded fixture, each against the construction that
/// produces the triangle.
pub fn oeis_checks() -> Vec<(&'static str, Result<TriangleReport>)> {
    const SIZE: usize = 12;
    let named = |p: Polytope| named_triple(p, SIZE).matrices(SIZE);
    let hypercube_f = || named(Polytope::Hypercube).map(|t| t.f);
    let simplex_f = || named(Polytope::Simplex).map(|t| t.f);
    let with = |anumber: &'static str, m: Result<LowerTriMatrix<MultiPoly>>| {
        (anumber, m.and_then(|m| check_triangle(&m, fixture(anumber)?)))
    };
    let double_factorials = || -> Result<TriangleReport> {
        let series = JFraction::parse("0", "i")?.expand(2 * SIZE);
        let values: Vec<BigInt> = series
            .coeffs()
            .iter()
            .step_by(2)
            .map(|c| c.as_integer().unwrap_or_default())
            .collect();
        Ok(check_sequence(&values, fixture("A001147")?))
    };
    vec![
        ("A001147", double_factorials()),
        with("A001263", named(Polytope::AssociahedronA).map(|t| t.h)),
        with("A007318", RiordanArray::binomial(SIZE).matrix(SIZE)),
        with("A008292", named(Polytope::Permutahedron).map(|t| t.h)),
        with("A013609", hypercube_f().map(|m| m.reversed())),
        with("A019538", named(Polytope::Permutahedron).map(|t| t.f)),
        with("A033282", named(Polytope::AssociahedronA).map(|t| t.f)),
        with("A038207", hypercube_f()),
        with("A055151", named(Polytope::AssociahedronA).map(|t| t.gamma)),
        with("A074909", simplex_f().map(|m| m.reversed())),
        with("A101280", named(Polytope::Permutahedron).map(|t| t.gamma)),
        with("A135278", simplex_f()),
    ]
}

fn oeis() -> Vec<Check> {
    oeis_checks()
        .into_iter()
        .map(|(anumber, report)| {
            let outcome = report.map(|r| if r.is_match() { None } else { Some(r.to_string()) });
            let mut check = Check::new(format!("OEIS {anumber}"), outcome);
            if check.passed {
                if let Ok(r) = fixture(anumber) {
                    check.detail = format!("{} (offset {})", r.title, r.offset);
                }
            }
            check
        })
        .collect()
}

pub const GROUP_SAMPLES: usize = 50;
pub const GROUP_ORDER: usize = 10;
const GROUP_SEED: u64 = 0x0052_494f_5244_414e;

/// A random array with small integer coefficients, `g_0 = 1`, `f_0 = 0` and
/// `f_1 = ±1`.
pub fn random_array(rng: &mut impl Rng, kind: ArrayKind, order: usize) -> RiordanArray {
    let mut coeff = |lo: i64, hi: i64| MultiPoly::int(rng.gen_range(lo..=hi));
    let g: Vec<MultiPoly> = (0..=order).map(|n| if n == 0 { MultiPoly::one() } else { coeff(-3, 3) }).collect();
    let f: Vec<MultiPoly> = (0..=order)
        .map(|n| match n {
            0 => MultiPoly::zero(),
            1 => {
                if coeff(0, 1).is_zero() {
                    -MultiPoly::one()
                } else {
                    MultiPoly::one()
                }
            }
            _ => coeff(-3, 3),
        })
        .collect();
    RiordanArray::new(kind, TruncatedSeries::new(g, order), TruncatedSeries::new(f, order)).expect("valid array")
}

fn group() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(GROUP_SEED);
    let size = GROUP_ORDER + 1;
    let arrays: Vec<RiordanArray> = (0..GROUP_SAMPLES)
        .map(|i| {
            let kind = if i % 2 == 0 { ArrayKind::Ordinary } else { ArrayKind::Exponential };
            random_array(&mut rng, kind, GROUP_ORDER)
        })
        .collect();
    // Pair each array with the next one of the same kind.
    let triples = (0..GROUP_SAMPLES).map(|i| {
        let pick = |j: usize| &arrays[(i + 2 * j) % GROUP_SAMPLES];
        (pick(0), pick(1), pick(2))
    });
    let triples: Vec<_> = triples.collect();

    let product = first_failure(triples.iter().enumerate().map(|(i, (a, b, _))| {
        let lhs = a.mul(b)?.matrix(size)?;
        let rhs = a.matrix(size)?.mul(&b.matrix(size)?);
        Ok(expect(&format!("sample {i}"), &lhs, &rhs))
    }));
    let inverse = first_failure(arrays.iter().enumerate().map(|(i, a)| {
        let inv = a.inverse()?;
        let identity = LowerTriMatrix::identity(size);
        Ok(expect(&format!("sample {i}: A * A^-1"), &a.mul(&inv)?.matrix(size)?, &identity)
            .or_else(|| expect(&format!("sample {i}: matrix inverse"), &a.matrix(size).ok()?.mul(&inv.matrix(size).ok()?), &identity)))
    }));
    let associativity = first_failure(triples.iter().enumerate().map(|(i, (a, b, c))| {
        let left = a.mul(b)?.mul(c)?;
        let right = a.mul(&b.mul(c)?)?;
        Ok(expect(&format!("sample {i}"), &left, &right))
    }));
    vec![
        Check::new(format!("product matches matrix product ({GROUP_SAMPLES} samples)"), product),
        Check::new(format!("inverse ({GROUP_SAMPLES} samples)"), inverse),
        Check::new(format!("associativity ({GROUP_SAMPLES} samples)"), associativity),
    ]
}

//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so every line is printed. The process
//! exits with status 1 if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use riordan_core::algebra::{binomial, factorial, rational};
use riordan_core::expr::{parse_index_poly, parse_poly};
use riordan_core::families::{
    f_closed, family_array, gamma_closed, gamma_from_h, h_closed, named_triple, narayana_array, FamilySpec, Flavor,
    NamedTriple, Polytope,
};
use riordan_core::oeis::fixture_source;
use riordan_core::{
    binomial_transform, f_matrix, ArrayKind, BivariateSeries, JFraction, LowerTriMatrix, MultiPoly, Rational,
    RiordanArray, TruncatedSeries,
};

type Matrix = LowerTriMatrix<MultiPoly>;

/// Outcome of one sub-check: a label and, on failure, what went wrong.
struct Sub {
    label: String,
    failure: Option<String>,
}

#[derive(Default)]
struct Report {
    subs: Vec<Sub>,
}

impl Report {
    fn check(&mut self, label: impl Into<String>, ok: bool, why: impl FnOnce() -> String) {
        let failure = if ok { None } else { Some(why()) };
        self.subs.push(Sub { label: label.into(), failure });
    }

    fn same(&mut self, label: impl Into<String>, computed: &Matrix, expected: &Matrix) {
        let label = label.into();
        let diff = first_difference(computed, expected);
        self.subs.push(Sub { label, failure: diff });
    }

    fn equal<T: PartialEq>(&mut self, label: impl Into<String>, a: &T, b: &T) {
        self.check(label, a == b, || "values differ".into());
    }
}

fn first_difference(computed: &Matrix, expected: &Matrix) -> Option<String> {
    if computed.size() != expected.size() {
        return Some(format!("{} rows computed, {} expected", computed.size(), expected.size()));
    }
    for n in 0..computed.size() {
        for k in 0..=n {
            if computed.get(n, k) != expected.get(n, k) {
                return Some(format!(
                    "entry ({n}, {k}): computed {}, expected {}",
                    computed.get(n, k),
                    expected.get(n, k)
                ));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Oracles

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/displayed").join(format!("{name}.tex"))
}

/// Reads a LaTeX `array` transcription. Entries above the diagonal must be
/// zero; the lower triangle is returned.
fn displayed(name: &str) -> Matrix {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    let mut rows = Vec::new();
    for line in text.lines().filter(|l| l.contains('&')) {
        let line = line.trim().trim_end_matches("\\\\");
        let cells: Vec<MultiPoly> = line
            .split('&')
            .map(|c| {
                let c = c.trim().replace("\\left(", "(").replace("\\right)", ")");
                parse_poly(&c).unwrap_or_else(|e| panic!("{name}: cannot parse '{c}': {e}"))
            })
            .collect();
        let n = rows.len();
        assert!(cells[n + 1..].iter().all(Zero::is_zero), "{name}: row {n} has entries above the diagonal");
        rows.push(cells[..=n].to_vec());
    }
    LowerTriMatrix::from_rows(rows).expect("square array")
}

fn int_series(coeffs: impl IntoIterator<Item = i64>, order: usize) -> BivariateSeries {
    TruncatedSeries::new(coeffs.into_iter().take(order + 1).map(MultiPoly::int).collect(), order)
}

fn int_matrix(size: usize, entry: impl Fn(i64, i64) -> BigInt) -> Matrix {
    LowerTriMatrix::from_fn(size, |n, k| MultiPoly::from(entry(n as i64, k as i64)))
}

/// `[x^n]` of `1 / (1 - a x - b x^2)` by the recurrence `c_n = a c_{n-1} + b c_{n-2}`.
fn quadratic_oracle(a: &MultiPoly, b: &MultiPoly, order: usize) -> Vec<MultiPoly> {
    let mut c: Vec<MultiPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let value = match n {
            0 => MultiPoly::one(),
            1 => a.clone(),
            _ => &(a * &c[n - 1]) + &(b * &c[n - 2]),
        };
        c.push(value);
    }
    c
}

/// Moments of a J-fraction by weighted Motzkin paths:
/// `T(n, k) = T(n-1, k-1) + α_k T(n-1, k) + β_{k+1} T(n-1, k+1)`.
fn motzkin_moments(alpha: impl Fn(usize) -> MultiPoly, beta: impl Fn(usize) -> MultiPoly, order: usize) -> Vec<MultiPoly> {
    let mut heights = vec![MultiPoly::one()];
    let mut moments = vec![MultiPoly::one()];
    for _ in 0..order {
        let mut next = vec![MultiPoly::zero(); heights.len() + 1];
        for (k, t) in heights.iter().enumerate() {
            next[k + 1] = &next[k + 1] + t;
            next[k] = &next[k] + &(&alpha(k) * t);
            if k > 0 {
                next[k - 1] = &next[k - 1] + &(&beta(k) * t);
            }
        }
        moments.push(next[0].clone());
        heights = next;
    }
    moments
}

fn jf_oracle(alpha: &str, beta: &str, order: usize) -> Vec<MultiPoly> {
    let (a, b) = (parse_index_poly(alpha).unwrap(), parse_index_poly(beta).unwrap());
    motzkin_moments(|k| a.eval(k), |k| b.eval(k), order)
}

fn rows_of(moments: &[MultiPoly]) -> Matrix {
    LowerTriMatrix::from_partial_rows(moments.iter().map(|m| m.y_coefficients(0)).collect()).unwrap()
}

fn row_polys(m: &Matrix) -> Vec<MultiPoly> {
    m.rows().iter().map(|r| MultiPoly::from_y_coefficients(r)).collect()
}

/// Row polynomials of an exponential array with bivariate EGF
/// `exp(a x + b x^2 / 2)`: `n! Σ_j a^{n-2j} b^j / ((n-2j)! j! 2^j)`.
fn egf_rows(a: &MultiPoly, b: &MultiPoly, size: usize) -> Vec<MultiPoly> {
    (0..size)
        .map(|n| {
            (0..=n / 2).fold(MultiPoly::zero(), |acc, j| {
                let scale = Rational::new(
                    factorial(n),
                    factorial(n - 2 * j) * factorial(j) * BigInt::from(2).pow(j as u32),
                );
                &acc + &(&a.pow((n - 2 * j) as u32) * &b.pow(j as u32)).scale_rational(&scale)
            })
        })
        .collect()
}

trait ScaleRational {
    fn scale_rational(&self, q: &Rational) -> MultiPoly;
}

impl ScaleRational for MultiPoly {
    fn scale_rational(&self, q: &Rational) -> MultiPoly {
        self * &MultiPoly::constant(q.clone())
    }
}

/// OEIS rows read straight from the embedded b-file text.
fn oeis_rows(anumber: &str, half: bool) -> (i64, Vec<Vec<BigInt>>) {
    let text = fixture_source(anumber).unwrap();
    let pairs: Vec<(i64, BigInt)> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (i, v) = l.trim().split_once(' ').unwrap();
            (i.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    let offset = pairs[0].0;
    let mut values = pairs.into_iter().map(|(_, v)| v);
    let mut rows = Vec::new();
    loop {
        let len = if half { rows.len() / 2 + 1 } else { rows.len() + 1 };
        let row: Vec<BigInt> = values.by_ref().take(len).collect();
        if row.len() < len {
            return (offset, rows);
        }
        rows.push(row);
    }
}

/// Compares matrix rows with OEIS rows; missing fixture entries must be zero.
fn against_oeis(report: &mut Report, m: &Matrix, anumber: &str, offset: i64, half: bool, min_rows: usize) {
    let (found_offset, rows) = oeis_rows(anumber, half);
    report.equal(format!("{anumber} offset is {offset}"), &found_offset, &offset);
    let count = rows.len().min(m.size());
    report.check(format!("{anumber}: at least {min_rows} rows compared"), count >= min_rows, || {
        format!("only {count} rows")
    });
    let mismatch = (0..count).find_map(|n| {
        (0..=n).find_map(|k| {
            let want = rows[n].get(k).cloned().unwrap_or_default();
            (MultiPoly::from(want.clone()) != *m.get(n, k))
                .then(|| format!("row {n} (OEIS row {}) col {k}: expected {want}, found {}", offset + n as i64, m.get(n, k)))
        })
    });
    report.subs.push(Sub { label: format!("{anumber} entries"), failure: mismatch });
}

fn pascal_inverse(size: usize) -> Matrix {
    int_matrix(size, |n, k| if (n - k) % 2 == 0 { binomial(n, k) } else { -binomial(n, k) })
}

// ---------------------------------------------------------------------------
// Criteria

const ORDER: usize = 16;

fn simplex_f(order: usize) -> RiordanArray {
    RiordanArray::ordinary(int_series(1.., order), int_series((0..).map(|n| i64::from(n > 0)), order)).unwrap()
}

fn c1_golden_matrices(r: &mut Report) {
    let size = 7;
    let simplex = simplex_f(size).matrix(size).unwrap();
    r.same("simplex f-matrix (1/(1-x)^2, x/(1-x))", &simplex, &displayed("simplex_f"));
    r.same("simplex f-matrix reversed", &simplex.reversed(), &displayed("simplex_f_reversed"));
    against_oeis(r, &simplex, "A135278", 0, false, size);
    against_oeis(r, &simplex.reversed(), "A074909", 0, false, size);

    let powers_of_two = || (0..).map(|n: u32| 2_i64.pow(n));
    let cube = RiordanArray::ordinary(
        int_series(powers_of_two(), size),
        int_series(std::iter::once(0).chain(powers_of_two()), size),
    )
    .unwrap()
    .matrix(size)
    .unwrap();
    r.same("hypercube f-matrix (1/(1-2x), x/(1-2x))", &cube, &displayed("hypercube_f"));
    r.same("hypercube f-matrix reversed", &cube.reversed(), &displayed("hypercube_f_reversed"));
    against_oeis(r, &cube, "A038207", 0, false, size);
    against_oeis(r, &cube.reversed(), "A013609", 0, false, size);

    let ones = RiordanArray::ordinary(int_series(std::iter::repeat(1), size), TruncatedSeries::x(size)).unwrap();
    r.same("(1/(1-x), x)", &ones.matrix(size).unwrap(), &displayed("ones"));

    let exp_x = TruncatedSeries::x(size).exp().unwrap();
    let pascal = RiordanArray::exponential(exp_x, TruncatedSeries::x(size)).unwrap();
    r.same("[e^x, x]", &pascal.matrix(size).unwrap(), &displayed("pascal"));
}

fn c2_factorizations(r: &mut Report) {
    let size = ORDER + 1;
    let x = TruncatedSeries::x(ORDER);

    let left = simplex_f(ORDER).mul(&RiordanArray::binomial(ORDER).inverse().unwrap()).unwrap();
    let ones = int_series(std::iter::repeat(1), ORDER);
    r.equal("ordinary: g of (1/(1-x)^2, x/(1-x)) B^-1 is 1/(1-x)", left.g(), &ones);
    r.equal("ordinary: f of (1/(1-x)^2, x/(1-x)) B^-1 is x", left.f(), &x);
    let product = simplex_f(ORDER).matrix(size).unwrap().mul(&pascal_inverse(size));
    r.same("ordinary: matrix product", &product, &int_matrix(size, |_, _| BigInt::one()));

    let e2x = x.scale(&MultiPoly::int(2)).exp().unwrap();
    let cube = RiordanArray::exponential(e2x, x.clone()).unwrap();
    let left = cube.mul(&RiordanArray::binomial_exponential(ORDER).inverse().unwrap()).unwrap();
    r.equal("exponential: g of [e^2x, x] B^-1 is e^x", left.g(), &x.exp().unwrap());
    r.equal("exponential: f of [e^2x, x] B^-1 is x", left.f(), &x);
    let product = cube.matrix(size).unwrap().mul(&pascal_inverse(size));
    r.same("exponential: matrix product", &product, &int_matrix(size, binomial));
}

fn ordinary_f(order: usize) -> RiordanArray {
    family_array(&FamilySpec::symbolic(Flavor::Ordinary), order).mul(&RiordanArray::binomial(order)).unwrap()
}

fn exponential_f(order: usize) -> RiordanArray {
    family_array(&FamilySpec::symbolic(Flavor::Exponential), order)
        .mul(&RiordanArray::binomial_exponential(order))
        .unwrap()
}

fn c3_symbolic_f(r: &mut Report) {
    let m = ordinary_f(8).matrix(6).unwrap();
    r.same("symbolic F_r", &m, &displayed("ordinary_f_symbolic"));
    r.equal("f(5,3) = 12r^2+72r+80", m.get(5, 2), &parse_poly("12r^2+72r+80").unwrap());
    r.same("symbolic F_r reversed", &m.reversed(), &displayed("ordinary_f_symbolic_reversed"));
    for v in 0..=2 {
        let name = format!("ordinary_f_r{v}_reversed");
        r.same(format!("F_{v} reversed against its display"), &m.eval_r(v).reversed(), &displayed(&name));
    }
}

fn c4_prop1(r: &mut Report) {
    const N: usize = 12;
    let f = ordinary_f(N);
    let y = MultiPoly::y();
    let bgf = f.bgf(N).unwrap().into_coeffs();
    let expected = quadratic_oracle(&(&y + &MultiPoly::int(2)), &(&MultiPoly::r() * &(&y + &MultiPoly::one())), N);
    r.equal("g/(1-yf) = 1/(1-(y+2)x-r(y+1)x^2)", &bgf, &expected);

    let reversed = row_polys(&f.matrix(N + 1).unwrap().reversed());
    let a = parse_poly("2y+1").unwrap();
    let b = parse_poly("r y (y+1)").unwrap();
    r.equal("reversed rows = 1/(1-(2y+1)x-ry(y+1)x^2)", &reversed, &quadratic_oracle(&a, &b, N));
}

fn c5_closed_forms(r: &mut Report) {
    const SIZE: usize = 13;
    let rr = MultiPoly::r();
    let family = family_array(&FamilySpec::symbolic(Flavor::Ordinary), SIZE);
    let h = family.matrix(SIZE).unwrap();
    let gamma = gamma_from_h(&h).unwrap();
    let f = f_matrix(&h, SIZE).unwrap();
    let mut bad = Vec::new();
    for n in 0..SIZE {
        for k in 0..=n {
            if &gamma_closed(n, k, &rr) != gamma.get(n, k) {
                bad.push(format!("gamma({n},{k})"));
            }
            if h_closed(n, k, &rr) != family.entry(n, k).unwrap() {
                bad.push(format!("h({n},{k})"));
            }
            if &f_closed(n, k, &rr) != f.get(n, k) {
                bad.push(format!("f({n},{k})"));
            }
        }
    }
    r.check("gamma, h and f closed forms for n <= 12", bad.is_empty(), || bad.join(", "));
}

fn c6_symbolic_ef(r: &mut Report) {
    let m = exponential_f(8).matrix(5).unwrap();
    r.same("symbolic eF_r", &m, &displayed("exponential_f_symbolic"));
    r.equal("eF(4,0) = 3r^2+24r+16", m.get(4, 0), &parse_poly("3r^2+24r+16").unwrap());
    r.equal("eF(4,1) = 2(3r^2+24r+16)", m.get(4, 1), &parse_poly("2(3r^2+24r+16)").unwrap());
    r.same("symbolic eF_r reversed", &m.reversed(), &displayed("exponential_f_symbolic_reversed"));
    for v in 0..=2 {
        let name = format!("exponential_f_r{v}_reversed");
        r.same(format!("eF_{v} reversed against its display"), &m.eval_r(v).reversed(), &displayed(&name));
    }
    against_oeis(r, &m.eval_r(0).reversed(), "A013609", 0, false, 5);
}

fn c7_prop2(r: &mut Report) {
    const N: usize = 10;
    let fraction = JFraction::parse("2y+1", "i r y (y+1)").unwrap();
    let reversed = exponential_f(N).matrix(N + 1).unwrap().reversed();
    let a = parse_poly("2y+1").unwrap();
    let b = parse_poly("r y (y+1)").unwrap();
    let by_egf = egf_rows(&a, &b, N + 1);
    r.equal("EGF exp((2y+1)x + ry(y+1)x^2/2) gives the reversed rows", &row_polys(&reversed), &by_egf);
    r.equal("J-fraction moments by path counting", &jf_oracle("2y+1", "i r y (y+1)", N), &by_egf);
    r.equal("expansion, symbolic r", &fraction.expand(N).into_coeffs(), &by_egf);
    for v in 0..=3 {
        let specialized = fraction.eval_r(v).expand(N).into_coeffs();
        let expected: Vec<MultiPoly> = row_polys(&reversed.eval_r(v));
        r.equal(format!("expansion, r = {v}"), &specialized, &expected);
    }
}

fn c8_prop3(r: &mut Report) {
    const SIZE: usize = 11;
    let h = family_array(&FamilySpec::symbolic(Flavor::Exponential), SIZE).matrix(SIZE).unwrap();
    let gamma = gamma_from_h(&h).unwrap();
    let f = f_matrix(&h, SIZE).unwrap();
    let rows = |alpha: &str, beta: &str| JFraction::parse(alpha, beta).unwrap().rows(SIZE).unwrap();
    r.same("J(1; iry) gives gamma", &rows("1", "i r y"), &gamma);
    r.same("J(y+1; iry) gives h", &rows("y+1", "i r y"), &h);
    r.same("J(2y+1; iry(y+1)) gives reversed f", &rows("2y+1", "i r y (y+1)"), &f.reversed());
    let by_egf = rows_of(&egf_rows(&parse_poly("y+1").unwrap(), &parse_poly("r y").unwrap(), SIZE));
    r.same("h rows from exp((y+1)x + ryx^2/2)", &h, &by_egf);
    r.same("gamma moments by path counting", &rows_of(&jf_oracle("1", "i r y", SIZE - 1)), &gamma);
}

fn c9_double_factorials(r: &mut Report) {
    const N: usize = 10;
    let expected: Vec<MultiPoly> = [1, 0, 1, 0, 3, 0, 15, 0, 105, 0, 945].into_iter().map(MultiPoly::int).collect();
    let j = JFraction::parse("0", "i").unwrap().expand(N).into_coeffs();
    r.equal("J(0; i) = 1,0,1,0,3,0,15,0,105,0,945", &j, &expected);
    let x = TruncatedSeries::<Rational>::x(N);
    let egf = x.pow(2).scale(&rational(1, 2)).exp().unwrap().ogf_from_egf().unwrap();
    let as_polys: Vec<MultiPoly> = egf.coeffs().iter().map(|c| MultiPoly::constant(c.clone())).collect();
    r.equal("equals n![x^n] exp(x^2/2)", &j, &as_polys);
}

fn polytope_rows(p: Polytope, size: usize) -> [Matrix; 3] {
    let t = named_triple(p, size).matrices(size).unwrap();
    [t.gamma, t.h, t.f]
}

fn c10_polytopes(r: &mut Report) {
    const SIZE: usize = 12;
    let [gamma, h, f] = polytope_rows(Polytope::AssociahedronA, SIZE);
    against_oeis(r, &gamma, "A055151", 0, true, 8);
    against_oeis(r, &h, "A001263", 1, false, 8);
    against_oeis(r, &f, "A033282", 3, false, 8);
    let [gamma, h, f] = polytope_rows(Polytope::Permutahedron, SIZE);
    against_oeis(r, &gamma, "A101280", 1, true, 8);
    against_oeis(r, &h, "A008292", 1, false, 8);
    against_oeis(r, &f, "A019538", 1, false, 8);
}

fn c11_transfer(r: &mut Report) {
    let fractions = |p| match named_triple(p, 0) {
        NamedTriple::Fractions { gamma, h, f } => [gamma, h, f],
        NamedTriple::Arrays { .. } => panic!("expected fractions"),
    };
    // Leading levels as listed for the permutahedron.
    let listed: [(&str, [&str; 3], [&str; 3]); 3] = [
        ("gamma", ["1", "2", "3"], ["2y", "6y", "12y"]),
        ("h", ["y+1", "2(y+1)", "3(y+1)"], ["2y", "6y", "12y"]),
        ("f", ["2y+1", "2(2y+1)", "3(2y+1)"], ["2y(y+1)", "6y(y+1)", "12y(y+1)"]),
    ];
    let expected = [
        JFraction::parse("i+1", "i(i+1) y").unwrap(),
        JFraction::parse("(i+1)(y+1)", "i(i+1) y").unwrap(),
        JFraction::parse("(i+1)(2y+1)", "i(i+1) y(y+1)").unwrap(),
    ];
    for ((assoc, (which, alphas, betas)), want) in fractions(Polytope::AssociahedronA).iter().zip(listed).zip(expected) {
        let moved = assoc.transfer();
        r.equal(format!("{which}: transfer gives the permutahedron fraction"), &moved, &want);
        let levels_ok = (0..3).all(|l| {
            moved.alpha_at(l) == parse_poly(alphas[l]).unwrap() && moved.beta_at(l + 1) == parse_poly(betas[l]).unwrap()
        });
        r.check(format!("{which}: leading levels"), levels_ok, || moved.to_string());
        let (a, b) = (assoc.alpha().clone(), assoc.beta().clone());
        let i = parse_index_poly("i").unwrap();
        let one = parse_index_poly("1").unwrap();
        r.equal(
            format!("{which}: alpha_i -> (i+1) alpha_i, beta_i -> i(i+1) beta_i"),
            &(moved.alpha().clone(), moved.beta().clone()),
            &(&a * &(&i + &one), &b * &(&i * &(&i + &one))),
        );
    }
}

fn c12_narayana(r: &mut Report) {
    const SIZE: usize = 11;
    let m = narayana_array(SIZE).matrix(SIZE).unwrap();
    let closed = LowerTriMatrix::from_fn(SIZE, |n, k| {
        let (n, k) = (n as i64, k as i64);
        MultiPoly::constant(Rational::new(binomial(n, k) * binomial(n + 1, k), BigInt::from(k + 1)))
    });
    r.same("N(n,k) = C(n,k) C(n+1,k) / (k+1)", &m, &closed);
    against_oeis(r, &m, "A001263", 1, false, 10);
}

// Property suites with a fixed seed.

fn random_series(rng: &mut ChaCha8Rng, order: usize, constant: i64, linear: Option<i64>) -> BivariateSeries {
    int_series(
        (0..=order).map(|n| match (n, linear) {
            (0, _) => constant,
            (1, Some(l)) => l,
            _ => rng.gen_range(-4..=4),
        }),
        order,
    )
}

fn random_array(rng: &mut ChaCha8Rng, kind: ArrayKind, order: usize) -> RiordanArray {
    let f1 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let g = random_series(rng, order, 1, None);
    let f = random_series(rng, order, 0, Some(f1));
    RiordanArray::new(kind, g, f).unwrap()
}

fn c13_properties(r: &mut Report) {
    const SAMPLES: usize = 50;
    const N: usize = 10;
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_501);
    let size = N + 1;
    let identity = LowerTriMatrix::identity(size);

    let mut failures: Vec<String> = Vec::new();
    for s in 0..SAMPLES {
        let kind = if s % 2 == 0 { ArrayKind::Ordinary } else { ArrayKind::Exponential };
        let [a, b, c] = [(); 3].map(|_| random_array(&mut rng, kind.clone(), N));
        let (ma, mb) = (a.matrix(size).unwrap(), b.matrix(size).unwrap());
        if a.mul(&b).unwrap().matrix(size).unwrap() != ma.mul(&mb) {
            failures.push(format!("sample {s}: product"));
        }
        let inv = a.inverse().unwrap();
        if a.mul(&inv).unwrap().matrix(size).unwrap() != identity || ma.mul(&inv.matrix(size).unwrap()) != identity {
            failures.push(format!("sample {s}: inverse"));
        }
        if a.mul(&b).unwrap().mul(&c).unwrap() != a.mul(&b.mul(&c).unwrap()).unwrap() {
            failures.push(format!("sample {s}: associativity"));
        }
    }
    r.check(format!("Riordan group laws on {SAMPLES} random arrays"), failures.is_empty(), || failures.join(", "));

    let x = TruncatedSeries::x(N);
    let mut failures: Vec<String> = Vec::new();
    for s in 0..SAMPLES {
        let f1 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let f = random_series(&mut rng, N, 0, Some(f1));
        let g = random_series(&mut rng, N, 0, None);
        let h0 = rng.gen_range(-3..=3);
        let h = random_series(&mut rng, N, h0, None);
        let fbar = f.revert().unwrap();
        if f.compose(&fbar).unwrap() != x || fbar.compose(&f).unwrap() != x {
            failures.push(format!("sample {s}: reversion"));
        }
        if h.compose(&g).unwrap().compose(&f).unwrap() != h.compose(&g.compose(&f).unwrap()).unwrap() {
            failures.push(format!("sample {s}: composition"));
        }
        if (&g + &f).exp().unwrap() != &g.exp().unwrap() * &f.exp().unwrap() {
            failures.push(format!("sample {s}: exp"));
        }
    }
    r.check("series reversion, composition and exp identities", failures.is_empty(), || failures.join(", "));

    let mut failures: Vec<String> = Vec::new();
    let y = MultiPoly::y();
    for s in 0..SAMPLES {
        let mut small = || rng.gen_range(-3..=3_i64);
        let alpha = format!("{} + ({})*i + ({})*y", small(), small(), small());
        let beta = format!("{} + ({})*i + ({})*i^2*y", small(), small(), small());
        let j = JFraction::parse(&alpha, &beta).unwrap();
        let moments = j.expand(N).into_coeffs();
        if moments != jf_oracle(&alpha, &beta, N) {
            failures.push(format!("sample {s}: expansion against path counting"));
        }
        for k in [MultiPoly::int(small()), y.clone()] {
            let shifted = j.binomial_shift(&k).expand(N).into_coeffs();
            if shifted != binomial_transform(&moments, &k) {
                failures.push(format!("sample {s}: binomial shift by {k}"));
            }
        }
        let depth = JFraction::depth_for(N);
        if (depth..depth + 4).any(|d| j.expand_with_depth(N, d).into_coeffs() != moments) {
            failures.push(format!("sample {s}: depth"));
        }
    }
    r.check("J-fraction expansion, binomial-shift law and depth sufficiency", failures.is_empty(), || {
        failures.join(", ")
    });
}

type Criterion = (u32, &'static str, fn(&mut Report));

const CRITERIA: [Criterion; 13] = [
    (1, "golden face matrices of simplex and hypercube", c1_golden_matrices),
    (2, "factorizations through B^-1", c2_factorizations),
    (3, "symbolic F_r, reversal and r = 0, 1, 2", c3_symbolic_f),
    (4, "bivariate GFs of F_r and its reversal", c4_prop1),
    (5, "closed forms for gamma, h and f", c5_closed_forms),
    (6, "symbolic eF_r, reversal and r = 0, 1, 2", c6_symbolic_ef),
    (7, "J-fraction of the reversed eF_r", c7_prop2),
    (8, "gamma, h and f fractions of [e^x, x(1+rx/2)]", c8_prop3),
    (9, "aerated double factorials", c9_double_factorials),
    (10, "associahedron and permutahedron against OEIS", c10_polytopes),
    (11, "transfer from associahedron to permutahedron", c11_transfer),
    (12, "Narayana triangle as a generalized array", c12_narayana),
    (13, "property suites", c13_properties),
];

fn main() {
    let mut failed = 0;
    for (id, title, run) in CRITERIA {
        let mut report = Report::default();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut report)));
        let panicked = outcome.is_err();
        let bad: Vec<&Sub> = report.subs.iter().filter(|s| s.failure.is_some()).collect();
        if panicked || bad.is_empty() && report.subs.is_empty() || !bad.is_empty() {
            failed += 1;
            println!("FAIL criterion {id:>2}: {title}");
            if panicked {
                println!("       panicked");
            }
            for s in bad {
                println!("       {}: {}", s.label, s.failure.as_deref().unwrap_or(""));
            }
        } else {
            println!("PASS criterion {id:>2}: {title} ({} checks)", report.subs.len());
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

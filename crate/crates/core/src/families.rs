//! The two parameterized Pascal-like families and the named polytopes.
//!
//! * ordinary:    `(1/(1-x), x(1+rx)/(1-x))`
//! * exponential: `[e^x, x(1+rx/2)]`
//!
//! For each family the h-matrix is the array itself, the f-matrix is
//! `h * B` and the γ-matrix is read off the h-rows through
//! `h_n(y) = Σ_k γ(n,k) y^k (1+y)^(n-2k)`.

use num_traits::{One, Zero};

use crate::algebra::{binomial, rational, MultiPoly, RationalAlgebra};
use crate::error::{Error, Result};
use crate::jfraction::JFraction;
use crate::riordan::{f_matrix, one_minus, LowerTriMatrix, RiordanArray, WeightSequence};
use crate::series::{BivariateSeries, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Ordinary,
    Exponential,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Ordinary => "ordinary",
            Flavor::Exponential => "exponential",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub flavor: Flavor,
    pub r: MultiPoly,
}

impl FamilySpec {
    pub fn new(flavor: Flavor, r: MultiPoly) -> Self {
        FamilySpec { flavor, r }
    }

    pub fn symbolic(flavor: Flavor) -> Self {
        Self::new(flavor, MultiPoly::r())
    }

    pub fn with_r(flavor: Flavor, r: i64) -> Self {
        Self::new(flavor, MultiPoly::int(r))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaHFTriple {
    pub gamma: LowerTriMatrix<MultiPoly>,
    pub h: LowerTriMatrix<MultiPoly>,
    pub f: LowerTriMatrix<MultiPoly>,
}

/// The Riordan array of a family member, truncated at `order`.
pub fn family_array(spec: &FamilySpec, order: usize) -> RiordanArray {
    let x = TruncatedSeries::x(order);
    let built = match spec.flavor {
        Flavor::Ordinary => {
            let geometric = one_minus(&x).inverse().expect("unit constant term");
            let numerator = &x + &x.pow(2).scale(&spec.r);
            RiordanArray::ordinary(geometric.clone(), &numerator * &geometric)
        }
        Flavor::Exponential => {
            let half_r = spec.r.scale(&rational(1, 2));
            let f = &x + &x.pow(2).scale(&half_r);
            RiordanArray::exponential(x.exp().expect("zero constant term"), f)
        }
    };
    built.expect("family arrays are well formed")
}

/// The Narayana triangle as `[Σ x^m / (m!(m+1)!), x]` with weights `n!(n+1)!`.
pub fn narayana_array(order: usize) -> RiordanArray {
    let g = (0..=order)
        .map(|m| {
            let w = WeightSequence::FactorialPair.weight(m).expect("built-in weight");
            MultiPoly::constant(w.recip())
        })
        .collect();
    RiordanArray::generalized(WeightSequence::FactorialPair, TruncatedSeries::new(g, order), TruncatedSeries::x(order))
        .expect("Narayana array is well formed")
}

/// `γ(n,k) = C(n-k, n-2k) r^k`, zero when `2k > n`.
pub fn gamma_closed(n: usize, k: usize, r: &MultiPoly) -> MultiPoly {
    if 2 * k > n {
        return MultiPoly::zero();
    }
    let c = binomial((n - k) as i64, (n - 2 * k) as i64);
    &MultiPoly::from(c) * &r.pow(k as u32)
}

/// `h(n,k) = Σ_j C(k,j) C(n-j, n-k-j) r^j`.
pub fn h_closed(n: usize, k: usize, r: &MultiPoly) -> MultiPoly {
    let (n, k) = (n as i64, k as i64);
    (0..=k).fold(MultiPoly::zero(), |acc, j| {
        let c = binomial(k, j) * binomial(n - j, n - k - j);
        &acc + &(&MultiPoly::from(c) * &r.pow(j as u32))
    })
}

/// `f(n,k) = Σ_i Σ_j C(i,j) C(n-j, n-i-j) r^j C(i,k)`.
pub fn f_closed(n: usize, k: usize, r: &MultiPoly) -> MultiPoly {
    (0..=n).fold(MultiPoly::zero(), |acc, i| {
        let weight = binomial(i as i64, k as i64);
        if weight.is_zero() {
            return acc;
        }
        &acc + &(&h_closed(n, i, r) * &MultiPoly::from(weight))
    })
}

/// Solves `h_n(y) = Σ_k γ(n,k) y^k (1+y)^(n-2k)` row by row. The result is
/// stored lower-triangularly with zeros for `k > n/2`.
pub fn gamma_from_h(h: &LowerTriMatrix<MultiPoly>) -> Result<LowerTriMatrix<MultiPoly>> {
    let mut rows = Vec::with_capacity(h.size());
    for (n, row) in h.rows().iter().enumerate() {
        if !row.iter().eq(row.iter().rev()) {
            return Err(Error::NotPalindromic { row: n });
        }
        let mut residual = row.clone();
        let mut gamma = vec![MultiPoly::zero(); n + 1];
        // γ(n,k) is the lowest surviving coefficient once γ(n,0..k) are removed.
        for k in 0..=n / 2 {
            let g = residual[k].clone();
            let width = n - 2 * k;
            for j in 0..=width {
                let c = MultiPoly::from(binomial(width as i64, j as i64));
                residual[k + j] = &residual[k + j] - &(&g * &c);
            }
            gamma[k] = g;
        }
        if residual.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotPalindromic { row: n });
        }
        rows.push(gamma);
    }
    LowerTriMatrix::from_rows(rows)
}

/// γ-, h- and f-matrices of a family member on `size` rows.
pub fn family_triple(spec: &FamilySpec, size: usize) -> Result<GammaHFTriple> {
    let array = family_array(spec, size.max(2) - 1);
    let h = array.matrix(size)?;
    let f = f_matrix(&h, size)?;
    let gamma = gamma_from_h(&h)?;
    Ok(GammaHFTriple { gamma, h, f })
}

/// The f-matrix computed at the level of arrays, `h * B` as a group product.
pub fn family_f_array(spec: &FamilySpec, order: usize) -> Result<RiordanArray> {
    let h = family_array(spec, order);
    let b = match spec.flavor {
        Flavor::Ordinary => RiordanArray::binomial(order),
        Flavor::Exponential => RiordanArray::binomial_exponential(order),
    };
    h.mul(&b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polytope {
    Simplex,
    Hypercube,
    AssociahedronA,
    Permutahedron,
}

impl Polytope {
    pub const ALL: [Polytope; 4] =
        [Polytope::Simplex, Polytope::Hypercube, Polytope::AssociahedronA, Polytope::Permutahedron];

    pub fn name(self) -> &'static str {
        match self {
            Polytope::Simplex => "simplex",
            Polytope::Hypercube => "hypercube",
            Polytope::AssociahedronA => "associahedron",
            Polytope::Permutahedron => "permutahedron",
        }
    }
}

/// How the γ/h/f data of a named polytope is given.
#[derive(Debug, Clone, PartialEq)]
pub enum NamedTriple {
    /// Ordinary generating functions of the three triangles as J-fractions.
    Fractions { gamma: JFraction, h: JFraction, f: JFraction },
    /// h- and f-matrices as ordinary Riordan arrays; γ follows from h.
    Arrays { h: RiordanArray, f: RiordanArray },
}

impl NamedTriple {
    pub fn matrices(&self, size: usize) -> Result<GammaHFTriple> {
        match self {
            NamedTriple::Fractions { gamma, h, f } => {
                Ok(GammaHFTriple { gamma: gamma.rows(size)?, h: h.rows(size)?, f: f.rows(size)? })
            }
            NamedTriple::Arrays { h, f } => {
                let h = h.matrix(size)?;
                Ok(GammaHFTriple { gamma: gamma_from_h(&h)?, h, f: f.matrix(size)? })
            }
        }
    }
}

fn fraction(alpha: &str, beta: &str) -> JFraction {
    JFraction::parse(alpha, beta).expect("built-in fraction")
}

pub fn named_triple(polytope: Polytope, order: usize) -> NamedTriple {
    let x: BivariateSeries = TruncatedSeries::x(order);
    let geometric = |step: i64| one_minus(&x.scale(&MultiPoly::int(step))).inverse().expect("unit constant term");
    let array = |g, f| RiordanArray::ordinary(g, f).expect("well formed");
    match polytope {
        Polytope::Simplex => NamedTriple::Arrays {
            h: array(geometric(1), x.clone()),
            f: array(&geometric(1) * &geometric(1), &x * &geometric(1)),
        },
        Polytope::Hypercube => NamedTriple::Arrays {
            h: RiordanArray::binomial(order),
            f: array(geometric(2), &x * &geometric(2)),
        },
        Polytope::AssociahedronA => NamedTriple::Fractions {
            gamma: fraction("1", "y"),
            h: fraction("y+1", "y"),
            f: fraction("2y+1", "y(y+1)"),
        },
        Polytope::Permutahedron => NamedTriple::Fractions {
            gamma: fraction("i+1", "i(i+1) y"),
            h: fraction("(i+1)(y+1)", "i(i+1) y"),
            f: fraction("(i+1)(2y+1)", "i(i+1) y(y+1)"),
        },
    }
}

/// A generating function given in closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum GenFn {
    /// `numerator(x) / denominator(x)` with polynomial coefficients.
    Rational { numerator: Vec<MultiPoly>, denominator: Vec<MultiPoly> },
    Fraction(JFraction),
}

impl GenFn {
    /// `1 / (1 - a x - b x²)`.
    pub fn quadratic(a: MultiPoly, b: MultiPoly) -> Self {
        GenFn::Rational { numerator: vec![MultiPoly::one()], denominator: vec![MultiPoly::one(), -a, -b] }
    }

    pub fn expand(&self, order: usize) -> BivariateSeries {
        match self {
            GenFn::Rational { numerator, denominator } => {
                let num = TruncatedSeries::new(numerator.clone(), order);
                let den = TruncatedSeries::new(denominator.clone(), order);
                &num * &den.inverse().expect("denominator has constant term 1")
            }
            GenFn::Fraction(j) => j.expand(order),
        }
    }
}

fn parenthesize(p: &MultiPoly) -> String {
    if p.len() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

fn power_of_x(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{k}"),
    }
}

fn render_polynomial_in_x(coeffs: &[MultiPoly]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (sign, magnitude) = match c.terms().next_back() {
            Some((_, lead)) if lead < &num_traits::Zero::zero() => ("-", -c),
            _ => ("+", c.clone()),
        };
        let body = match (k, magnitude.is_one()) {
            (0, _) => magnitude.to_string(),
            (_, true) => power_of_x(k),
            _ => format!("{}*{}", parenthesize(&magnitude), power_of_x(k)),
        };
        if out.is_empty() {
            out = if sign == "-" { format!("-{body}") } else { body };
        } else {
            out = format!("{out} {sign} {body}");
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl std::fmt::Display for GenFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenFn::Rational { numerator, denominator } => {
                let num = render_polynomial_in_x(numerator);
                let num = if numerator.iter().filter(|c| !c.is_zero()).count() > 1 { format!("({num})") } else { num };
                write!(f, "{num}/({})", render_polynomial_in_x(denominator))
            }
            GenFn::Fraction(j) => write!(f, "{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GfChain {
    pub gamma: GenFn,
    pub h: GenFn,
    /// Generating function of the reversed f-matrix.
    pub f_reversed: GenFn,
}

/// Ordinary generating functions of the γ-, h- and reversed f-matrices.
pub fn gf_chain(spec: &FamilySpec) -> GfChain {
    let y = MultiPoly::y();
    let one = MultiPoly::one();
    let r = spec.r.clone();
    let ry = &r * &y;
    let y1 = &y + &one;
    let two_y1 = &(&y * &MultiPoly::int(2)) + &one;
    match spec.flavor {
        Flavor::Ordinary => GfChain {
            gamma: GenFn::quadratic(one.clone(), ry.clone()),
            h: GenFn::quadratic(y1.clone(), ry.clone()),
            f_reversed: GenFn::quadratic(two_y1, &ry * &y1),
        },
        Flavor::Exponential => {
            use crate::jfraction::IndexPoly;
            let i = IndexPoly::index();
            let level = |c: &MultiPoly| &i * &IndexPoly::constant(c.clone());
            GfChain {
                gamma: GenFn::Fraction(JFraction::new(IndexPoly::constant(one), level(&ry))),
                h: GenFn::Fraction(JFraction::new(IndexPoly::constant(y1.clone()), level(&ry))),
                f_reversed: GenFn::Fraction(JFraction::new(IndexPoly::constant(two_y1), level(&(&ry * &y1)))),
            }
        }
    }
}

/// Row polynomials of a triangle as a series: `[x^n] = Σ_k m(n,k) y^k`.
pub fn triangle_series(m: &LowerTriMatrix<MultiPoly>) -> BivariateSeries {
    let coeffs = m.rows().iter().map(|row| MultiPoly::from_y_coefficients(row)).collect();
    TruncatedSeries::new(coeffs, m.size().saturating_sub(1))
}

/// The first `size` rows of a generating function's row polynomials.
pub fn gf_rows(gf: &GenFn, size: usize) -> Result<LowerTriMatrix<MultiPoly>> {
    if size == 0 {
        return LowerTriMatrix::from_rows(Vec::new());
    }
    let series = gf.expand(size - 1);
    LowerTriMatrix::from_partial_rows(series.coeffs().iter().map(|c| c.y_coefficients(0)).collect())
}

//! Jacobi continued fractions
//!
//! ```text
//!                 1
//!   ---------------------------------
//!   1 - α_0 x -        β_1 x²
//!               ---------------------
//!               1 - α_1 x -   β_2 x²
//!                           ---------
//!                             ...
//! ```
//!
//! written `J(α_0, α_1, ...; β_1, β_2, ...)`. Both coefficient sequences are
//! polynomials in the level index `i` with coefficients in `Q[r, y]`;
//! `α` is read at `i = 0, 1, ..` and `β` at `i = 1, 2, ..`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{binomial, MultiPoly, Rational, RationalAlgebra, Ring};
use crate::error::Result;
use crate::riordan::LowerTriMatrix;
use crate::series::{BivariateSeries, TruncatedSeries};

/// Polynomial in the level index `i`; `coeffs[d]` multiplies `i^d`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexPoly {
    coeffs: Vec<MultiPoly>,
}

impl IndexPoly {
    fn trimmed(mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IndexPoly { coeffs }
    }

    pub fn new(coeffs: Vec<MultiPoly>) -> Self {
        Self::trimmed(coeffs)
    }

    pub fn constant(c: MultiPoly) -> Self {
        Self::trimmed(vec![c])
    }

    /// The index `i` itself.
    pub fn index() -> Self {
        Self::trimmed(vec![MultiPoly::zero(), MultiPoly::one()])
    }

    /// `(i + a)(i + b)...` for the given integer shifts.
    pub fn index_product(shifts: &[i64]) -> Self {
        shifts
            .iter()
            .fold(IndexPoly::constant(MultiPoly::one()), |acc, &s| &acc * &(&IndexPoly::index() + &IndexPoly::constant(MultiPoly::int(s))))
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Degree in `i`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<MultiPoly> {
        match self.coeffs.len() {
            0 => Some(MultiPoly::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, i: usize) -> MultiPoly {
        let i = MultiPoly::int(i as i64);
        self.coeffs.iter().rev().fold(MultiPoly::zero(), |acc, c| &(&acc * &i) + c)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::trimmed(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(IndexPoly::constant(MultiPoly::one()), |acc, _| &acc * self)
    }

    pub fn eval_r(&self, r: i64) -> Self {
        Self::trimmed(self.coeffs.iter().map(|c| c.eval_r(r)).collect())
    }
}

impl<'a> Add<&'a IndexPoly> for &IndexPoly {
    type Output = IndexPoly;

    fn add(self, rhs: &'a IndexPoly) -> IndexPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = MultiPoly::zero();
        let coeffs = (0..len)
            .map(|d| {
                let a = self.coeffs.get(d).unwrap_or(&zero);
                let b = rhs.coeffs.get(d).unwrap_or(&zero);
                a + b
            })
            .collect();
        IndexPoly::trimmed(coeffs)
    }
}

impl Neg for &IndexPoly {
    type Output = IndexPoly;

    fn neg(self) -> IndexPoly {
        IndexPoly::trimmed(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Sub<&'a IndexPoly> for &IndexPoly {
    type Output = IndexPoly;

    fn sub(self, rhs: &'a IndexPoly) -> IndexPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a IndexPoly> for &IndexPoly {
    type Output = IndexPoly;

    fn mul(self, rhs: &'a IndexPoly) -> IndexPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IndexPoly::default();
        }
        let mut coeffs = vec![MultiPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        IndexPoly::trimmed(coeffs)
    }
}

/// `c_d*i^d + ... + c_0`, with compound coefficients in parentheses.
impl fmt::Display for IndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let power = match d {
                0 => String::new(),
                1 => "i".to_string(),
                _ => format!("i^{d}"),
            };
            if d == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&power)?;
            } else if c.len() == 1 && !c.to_string().starts_with('-') {
                write!(f, "{c}*{power}")?;
            } else {
                write!(f, "({c})*{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JFraction {
    alpha: IndexPoly,
    beta: IndexPoly,
}

impl JFraction {
    pub fn new(alpha: IndexPoly, beta: IndexPoly) -> Self {
        JFraction { alpha, beta }
    }

    /// Parses `alpha` and `beta` as polynomials in `i`, `r`, `y`.
    pub fn parse(alpha: &str, beta: &str) -> Result<Self> {
        Ok(JFraction::new(crate::expr::parse_index_poly(alpha)?, crate::expr::parse_index_poly(beta)?))
    }

    pub fn alpha(&self) -> &IndexPoly {
        &self.alpha
    }

    pub fn beta(&self) -> &IndexPoly {
        &self.beta
    }

    /// `α_level`, `level >= 0`.
    pub fn alpha_at(&self, level: usize) -> MultiPoly {
        self.alpha.eval(level)
    }

    /// `β_level`, `level >= 1`.
    pub fn beta_at(&self, level: usize) -> MultiPoly {
        self.beta.eval(level)
    }

    pub fn eval_r(&self, r: i64) -> Self {
        JFraction { alpha: self.alpha.eval_r(r), beta: self.beta.eval_r(r) }
    }

    /// Number of levels needed for an expansion exact through `x^order`.
    pub fn depth_for(order: usize) -> usize {
        order / 2 + 1
    }

    /// The power series of the fraction through `x^order`.
    pub fn expand(&self, order: usize) -> BivariateSeries {
        self.expand_with_depth(order, Self::depth_for(order))
    }

    /// Bottom-up evaluation with `depth` levels: `S_depth = 1`,
    /// `S_j = 1 / (1 - α_j x - β_{j+1} x² S_{j+1})`.
    pub fn expand_with_depth(&self, order: usize, depth: usize) -> BivariateSeries {
        let one = TruncatedSeries::one(order);
        let mut tail = one.clone();
        for level in (0..depth).rev() {
            let linear = TruncatedSeries::monomial(self.alpha_at(level), 1, order);
            let quadratic = tail.shift_up().shift_up().scale(&self.beta_at(level + 1));
            let den = &(&one - &linear) - &quadratic;
            tail = den.inverse().expect("constant term is 1");
        }
        tail
    }

    /// The expansion read as a triangle: row `n` holds the `y`-coefficients
    /// of `[x^n]`.
    pub fn rows(&self, size: usize) -> Result<LowerTriMatrix<MultiPoly>> {
        if size == 0 {
            return LowerTriMatrix::from_rows(Vec::new());
        }
        let series = self.expand(size - 1);
        LowerTriMatrix::from_partial_rows(series.coeffs().iter().map(|c| c.y_coefficients(0)).collect())
    }

    /// The fraction of the `k`-th binomial transform: every `α` shifted by `k`.
    pub fn binomial_shift(&self, k: &MultiPoly) -> Self {
        JFraction { alpha: &self.alpha + &IndexPoly::constant(k.clone()), beta: self.beta.clone() }
    }

    /// `J(α_0, α_1, α_2, ..; β_1, β_2, ..) ↦ J(α_0, 2α_1, 3α_2, ..; 2β_1, 6β_2, 12β_3, ..)`,
    /// i.e. `α_i ↦ (i+1) α_i` and `β_i ↦ i(i+1) β_i`.
    pub fn transfer(&self) -> Self {
        JFraction {
            alpha: &self.alpha * &IndexPoly::index_product(&[1]),
            beta: &self.beta * &IndexPoly::index_product(&[0, 1]),
        }
    }
}

impl fmt::Display for JFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J(alpha_i = {}; beta_i = {})", self.alpha, self.beta)
    }
}

/// `b_n = Σ_i C(n, i) k^{n-i} a_i`.
pub fn binomial_transform<C: Ring>(a: &[C], k: &C) -> Vec<C> {
    let powers: Vec<C> = std::iter::successors(Some(C::one()), |p| Some(p.clone() * k)).take(a.len()).collect();
    (0..a.len())
        .map(|n| {
            (0..=n).fold(C::zero(), |acc, i| {
                let c = C::from_integer(binomial(n as i64, i as i64));
                acc + &(c * &powers[n - i] * &a[i])
            })
        })
        .collect()
}

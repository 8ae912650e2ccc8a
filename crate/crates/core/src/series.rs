//! Truncated formal power series in `x`.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`. Binary
//! operations on series of different orders truncate to the smaller one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{factorial, MultiPoly, Rational, RationalAlgebra, Ring, Var};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

/// Series in `x` whose coefficients are polynomials in `y` (and `r`).
pub type BivariateSeries = TruncatedSeries<MultiPoly>;

impl<C: Ring> TruncatedSeries<C> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past `x^order`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// `c * x^power`.
    pub fn monomial(c: C, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// `x * self`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(C::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        TruncatedSeries { coeffs }
    }

    /// Formal derivative, padded back to the same order.
    pub fn derivative(&self) -> Self {
        let coeffs = (1..=self.order())
            .map(|n| self.coeffs[n].clone() * &C::from_i64(n as i64))
            .collect();
        Self::new(coeffs, self.order())
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// Multiplicative inverse. The constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NonUnitConstantTerm)?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + &(self.coeffs[k].clone() * &out[n - k]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self(inner(x))`, by Horner's rule over truncated series.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c;
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `u` with `u(0) = 0` and
    /// `self(u(x)) = x`, found by Newton iteration.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let lead_inv = self.coeffs[1].try_inverse().ok_or(Error::ZeroLinearTerm)?;
        let x = Self::x(order);
        let slope = self.derivative();
        let mut u = x.scale(&lead_inv);
        // Each step at least doubles the number of correct coefficients.
        for _ in 0..=usize::BITS - order.leading_zeros() + 1 {
            let residual = &self.compose(&u)? - &x;
            if residual.coeffs.iter().all(Zero::is_zero) {
                break;
            }
            let step = &residual * &slope.compose(&u)?.inverse()?;
            u = &u - &step;
        }
        Ok(u)
    }
}

impl<C: RationalAlgebra> TruncatedSeries<C> {
    /// `exp(self)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // n e_n = sum_k k a_k e_{n-k}
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::one());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + &(self.coeffs[k].clone() * &out[n - k] * &C::from_i64(k as i64));
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(n))));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplies coefficient `n` by `n!` without any integrality check.
    pub fn scale_by_factorials(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::from_integer(factorial(n))))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Divides coefficient `n` by `n!`.
    pub fn divide_by_factorials(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::new(BigInt::one(), factorial(n))))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Turns an exponential generating function into the ordinary one for
    /// the same sequence, requiring every resulting coefficient to be
    /// integral.
    pub fn ogf_from_egf(&self) -> Result<Self> {
        let out = self.scale_by_factorials();
        match out.coeffs.iter().position(|c| !c.is_integral()) {
            Some(index) => Err(Error::NonIntegralResult { index }),
            None => Ok(out),
        }
    }
}

impl TruncatedSeries<MultiPoly> {
    /// Checks that the coefficient of `x^n` has `y`-degree at most `n`.
    pub fn y_degree_bounded(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, c)| c.degree_in(Var::Y).is_none_or(|d| d as usize <= n))
    }

    /// Row `n` of the triangle encoded by the series: the `y`-coefficients
    /// of `[x^n]`, padded to `n + 1` entries.
    pub fn row(&self, n: usize) -> Vec<MultiPoly> {
        self.coeffs[n].y_coefficients(n + 1)
    }

    pub fn eval_r(&self, r: i64) -> Self {
        self.map(|c| c.eval_r(r))
    }
}

impl<C: Ring> PartialEq for TruncatedSeries<C> {
    /// Equal when every coefficient up to the smaller order agrees.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl<C: Ring> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

impl<C: Ring> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl<'a, C: Ring> Add<&'a TruncatedSeries<C>> for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn add(self, rhs: &'a TruncatedSeries<C>) -> TruncatedSeries<C> {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b).collect();
        TruncatedSeries { coeffs }
    }
}

impl<'a, C: Ring> Sub<&'a TruncatedSeries<C>> for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn sub(self, rhs: &'a TruncatedSeries<C>) -> TruncatedSeries<C> {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b).collect();
        TruncatedSeries { coeffs }
    }
}

impl<'a, C: Ring> Mul<&'a TruncatedSeries<C>> for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn mul(self, rhs: &'a TruncatedSeries<C>) -> TruncatedSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + &(a.clone() * b);
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl<C: Ring> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn neg(self) -> TruncatedSeries<C> {
        self.map(|c| -c.clone())
    }
}

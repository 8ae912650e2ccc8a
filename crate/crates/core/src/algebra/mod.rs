//! Exact coefficient rings.
//!
//! Everything in this crate is computed without floating point. Integers and
//! rationals come from `num-bigint`/`num-rational`; [`MultiPoly`] is the
//! polynomial ring over the rationals in the two symbols `r` (family
//! parameter) and `y` (row marker of a bivariate generating function).

mod poly;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use poly::{Monomial, MultiPoly, Var};

pub type Rational = BigRational;

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_integer(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }

    /// Multiplicative inverse, if `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;
}

/// A ring containing the rationals.
pub trait RationalAlgebra: Ring {
    fn from_rational(q: Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * &Self::from_rational(q.clone())
    }

    /// True when every rational number inside the element is an integer.
    fn is_integral(&self) -> bool;
}

impl Ring for BigInt {
    fn from_integer(n: BigInt) -> Self {
        n
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for Rational {
    fn from_integer(n: BigInt) -> Self {
        Rational::from_integer(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl RationalAlgebra for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

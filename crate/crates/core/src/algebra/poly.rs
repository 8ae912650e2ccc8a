use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Rational, RationalAlgebra, Ring};

/// The two symbols every polynomial in this crate may mention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    R,
    Y,
}

/// `r^r * y^y`.
///
/// Ordered graded-lexicographically with `r < y`: total degree first, then
/// the exponent of `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub r: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { r: 0, y: 0 };

    pub fn new(r: u32, y: u32) -> Self {
        Monomial { r, y }
    }

    pub fn degree(self) -> u32 {
        self.r + self.y
    }

    pub fn exponent(self, var: Var) -> u32 {
        match var {
            Var::R => self.r,
            Var::Y => self.y,
        }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial { r: self.r + other.r, y: self.y + other.y }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.y.cmp(&other.y))
            .then(self.r.cmp(&other.r))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `r` and `y` with rational coefficients, kept canonical:
/// no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn term(c: Rational, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MultiPoly { terms }
    }

    pub fn var(var: Var) -> Self {
        let mono = match var {
            Var::R => Monomial::new(1, 0),
            Var::Y => Monomial::new(0, 1),
        };
        Self::term(Rational::one(), mono)
    }

    pub fn r() -> Self {
        Self::var(Var::R)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: Monomial) -> Rational {
        self.terms.get(&mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of a polynomial without symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes exact values for some of the symbols.
    pub fn eval(&self, assignments: &[(Var, Rational)]) -> Self {
        let value_of = |var: Var| assignments.iter().find(|(v, _)| *v == var).map(|(_, q)| q);
        let r_val = value_of(Var::R);
        let y_val = value_of(Var::Y);
        let mut out = MultiPoly::zero();
        for (mono, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *mono;
            if let Some(q) = r_val {
                coeff *= pow_rational(q, mono.r);
                rest.r = 0;
            }
            if let Some(q) = y_val {
                coeff *= pow_rational(q, mono.y);
                rest.y = 0;
            }
            out.add_term(rest, coeff);
        }
        out
    }

    pub fn eval_r(&self, r: i64) -> Self {
        self.eval(&[(Var::R, Rational::from_integer(BigInt::from(r)))])
    }

    /// Coefficient of `y^k`, as a polynomial in `r`.
    pub fn coeff_y(&self, k: u32) -> Self {
        let mut out = MultiPoly::zero();
        for (mono, c) in &self.terms {
            if mono.y == k {
                out.add_term(Monomial::new(mono.r, 0), c.clone());
            }
        }
        out
    }

    /// Splits a polynomial into its `y`-coefficients `[c_0, c_1, ..]`,
    /// padded with zeros to at least `len` entries.
    pub fn y_coefficients(&self, len: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(Var::Y).map_or(0, |d| d as usize + 1);
        (0..deg.max(len)).map(|k| self.coeff_y(k as u32)).collect()
    }

    /// `Σ c_k y^k`.
    pub fn from_y_coefficients(coeffs: &[MultiPoly]) -> Self {
        let y = MultiPoly::y();
        coeffs
            .iter()
            .enumerate()
            .fold(MultiPoly::zero(), |acc, (k, c)| acc + &(c * &y.pow(k as u32)))
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    fn scaled(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect() }
    }
}

fn pow_rational(q: &Rational, exp: u32) -> Rational {
    num_traits::pow(q.clone(), exp as usize)
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(n: BigInt) -> Self {
        MultiPoly::constant(Rational::from_integer(n))
    }
}

impl From<Rational> for MultiPoly {
    fn from(q: Rational) -> Self {
        MultiPoly::constant(q)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::int(1)
    }
}

impl<'a> Add<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Ring for MultiPoly {
    fn from_integer(n: BigInt) -> Self {
        MultiPoly::from(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(MultiPoly::constant(c.recip())),
            _ => None,
        }
    }
}

impl RationalAlgebra for MultiPoly {
    fn from_rational(q: Rational) -> Self {
        MultiPoly::constant(q)
    }

    fn scale(&self, q: &Rational) -> Self {
        self.scaled(q)
    }

    fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, mono: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, exp) in [("r", mono.r), ("y", mono.y)] {
        if exp == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if exp > 1 {
            write!(f, "^{exp}")?;
        }
    }
    Ok(())
}

/// Canonical rendering, highest monomial first: `3*r^2 + 24*r + 16`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *mono == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, *mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

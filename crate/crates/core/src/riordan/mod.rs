//! Riordan arrays: ordinary `(g, f)`, exponential `[g, f]`, and generalized
//! `[g, f]_c` arrays over symbolic coefficients.
//!
//! Entry `(n, k)` of an array is `c_n / c_k * [x^n] g(x) f(x)^k`, where the
//! weights `c_n` are all ones (ordinary), `n!` (exponential) or a supplied
//! sequence (generalized). The group product and inverse are defined for
//! ordinary and exponential arrays, each within its own kind.

mod matrix;

pub use matrix::{f_matrix, is_zero_matrix, LowerTriMatrix};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{factorial, MultiPoly, Rational, RationalAlgebra, Ring};
use crate::error::{Error, Result};
use crate::series::{BivariateSeries, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSequence {
    /// `c_n = 1`
    Ones,
    /// `c_n = n!`
    Factorial,
    /// `c_n = n! (n+1)!`
    FactorialPair,
    /// Explicit weights, normalized so that `c_0 = 1`.
    Custom(Vec<Rational>),
}

impl WeightSequence {
    pub fn custom(weights: Vec<Rational>) -> Result<Self> {
        let Some(first) = weights.first().cloned() else {
            return Err(Error::InvalidArray("empty weight sequence"));
        };
        if weights.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArray("weights must be nonzero"));
        }
        Ok(WeightSequence::Custom(weights.into_iter().map(|w| w / &first).collect()))
    }

    /// `c_n`, or `None` past the end of a custom sequence.
    pub fn weight(&self, n: usize) -> Option<Rational> {
        match self {
            WeightSequence::Ones => Some(Rational::one()),
            WeightSequence::Factorial => Some(Rational::from_integer(factorial(n))),
            WeightSequence::FactorialPair => Some(Rational::from_integer(factorial(n) * factorial(n + 1))),
            WeightSequence::Custom(c) => c.get(n).cloned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrayKind {
    Ordinary,
    Exponential,
    Generalized(WeightSequence),
}

impl ArrayKind {
    pub fn name(&self) -> &'static str {
        match self {
            ArrayKind::Ordinary => "ordinary",
            ArrayKind::Exponential => "exponential",
            ArrayKind::Generalized(_) => "generalized",
        }
    }

    fn weights(&self) -> WeightSequence {
        match self {
            ArrayKind::Ordinary => WeightSequence::Ones,
            ArrayKind::Exponential => WeightSequence::Factorial,
            ArrayKind::Generalized(w) => w.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RiordanArray {
    kind: ArrayKind,
    g: BivariateSeries,
    f: BivariateSeries,
}

impl RiordanArray {
    /// Checks `g(0) = 1`, `f(0) = 0` and `f'(0) != 0`; both series are cut to
    /// the smaller order.
    pub fn new(kind: ArrayKind, g: BivariateSeries, f: BivariateSeries) -> Result<Self> {
        let order = g.order().min(f.order());
        if order == 0 {
            return Err(Error::InvalidArray("order must be at least 1"));
        }
        if !g.coeff(0).is_one() {
            return Err(Error::InvalidArray("g(0) must be 1"));
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::InvalidArray("f(0) must be 0"));
        }
        if f.coeff(1).is_zero() {
            return Err(Error::InvalidArray("f'(0) must be nonzero"));
        }
        Ok(RiordanArray { kind, g: g.truncate(order), f: f.truncate(order) })
    }

    pub fn ordinary(g: BivariateSeries, f: BivariateSeries) -> Result<Self> {
        Self::new(ArrayKind::Ordinary, g, f)
    }

    pub fn exponential(g: BivariateSeries, f: BivariateSeries) -> Result<Self> {
        Self::new(ArrayKind::Exponential, g, f)
    }

    pub fn generalized(weights: WeightSequence, g: BivariateSeries, f: BivariateSeries) -> Result<Self> {
        Self::new(ArrayKind::Generalized(weights), g, f)
    }

    /// `(1, x)` of the given kind.
    pub fn identity(kind: ArrayKind, order: usize) -> Self {
        RiordanArray { kind, g: TruncatedSeries::one(order), f: TruncatedSeries::x(order) }
    }

    /// Pascal's triangle as the ordinary array `(1/(1-x), x/(1-x))`.
    pub fn binomial(order: usize) -> Self {
        let geometric = one_minus(&TruncatedSeries::x(order)).inverse().expect("unit constant term");
        let f = &TruncatedSeries::x(order) * &geometric;
        RiordanArray { kind: ArrayKind::Ordinary, g: geometric, f }
    }

    /// Pascal's triangle as the exponential array `[e^x, x]`.
    pub fn binomial_exponential(order: usize) -> Self {
        let x = TruncatedSeries::x(order);
        RiordanArray { kind: ArrayKind::Exponential, g: x.exp().expect("zero constant term"), f: x }
    }

    pub fn kind(&self) -> &ArrayKind {
        &self.kind
    }

    pub fn g(&self) -> &BivariateSeries {
        &self.g
    }

    pub fn f(&self) -> &BivariateSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn eval_r(&self, r: i64) -> Self {
        RiordanArray { kind: self.kind.clone(), g: self.g.eval_r(r), f: self.f.eval_r(r) }
    }

    fn prefactor(&self, n: usize, k: usize) -> Result<Rational> {
        let weights = self.kind.weights();
        let missing = || Error::IndexBeyondTruncation { n, k, order: self.order() };
        let cn = weights.weight(n).ok_or_else(missing)?;
        let ck = weights.weight(k).ok_or_else(missing)?;
        Ok(cn / ck)
    }

    /// Entry `(n, k)`, computed directly by coefficient extraction.
    pub fn entry(&self, n: usize, k: usize) -> Result<MultiPoly> {
        if n > self.order() || k > n {
            return Err(Error::IndexBeyondTruncation { n, k, order: self.order() });
        }
        let column = &self.g * &self.f.pow(k);
        Ok(column.coeff(n).scale(&self.prefactor(n, k)?))
    }

    /// The top-left `size` rows of the array.
    pub fn matrix(&self, size: usize) -> Result<LowerTriMatrix<MultiPoly>> {
        if size == 0 {
            return Ok(LowerTriMatrix::from_fn(0, |_, _| MultiPoly::zero()));
        }
        if size - 1 > self.order() {
            return Err(Error::IndexBeyondTruncation { n: size - 1, k: 0, order: self.order() });
        }
        let mut rows: Vec<Vec<MultiPoly>> = (0..size).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut column = self.g.clone();
        for k in 0..size {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(column.coeff(n).scale(&self.prefactor(n, k)?));
            }
            column = &column * &self.f;
        }
        LowerTriMatrix::from_rows(rows)
    }

    /// Entries as integers; fails on symbolic or fractional entries.
    pub fn integer_matrix(&self, size: usize) -> Result<LowerTriMatrix<BigInt>> {
        self.matrix(size)?.to_integers()
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch { left: self.kind.name(), right: other.kind.name() });
        }
        if let ArrayKind::Generalized(_) = self.kind {
            return Err(Error::UnsupportedKind(self.kind.name()));
        }
        Ok(())
    }

    /// Group product `(g, f) * (u, v) = (g * u(f), v(f))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        let g = &self.g * &other.g.compose(&self.f)?;
        let f = other.f.compose(&self.f)?;
        Ok(RiordanArray { kind: self.kind.clone(), g, f })
    }

    /// Group inverse `(1 / g(f̄), f̄)` with `f̄` the compositional inverse of `f`.
    pub fn inverse(&self) -> Result<Self> {
        if let ArrayKind::Generalized(_) = self.kind {
            return Err(Error::UnsupportedKind(self.kind.name()));
        }
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.inverse()?;
        Ok(RiordanArray { kind: self.kind.clone(), g, f: fbar })
    }

    /// Bivariate generating function to order `order`: `g / (1 - y f)` for
    /// ordinary arrays and `g e^{y f}` for exponential ones (an EGF in `x`).
    pub fn bgf(&self, order: usize) -> Result<BivariateSeries> {
        let order = order.min(self.order());
        let g = self.g.truncate(order);
        let yf = self.f.truncate(order).scale(&MultiPoly::y());
        match self.kind {
            ArrayKind::Ordinary => Ok(&g * &one_minus(&yf).inverse()?),
            ArrayKind::Exponential => Ok(&g * &yf.exp()?),
            ArrayKind::Generalized(_) => Err(Error::UnsupportedKind(self.kind.name())),
        }
    }

    /// Ordinary generating function of the row polynomials: the coefficient
    /// of `x^n` is `Σ_k a(n,k) y^k`.
    pub fn row_gf(&self, order: usize) -> Result<BivariateSeries> {
        let bgf = self.bgf(order)?;
        Ok(match self.kind {
            ArrayKind::Exponential => bgf.scale_by_factorials(),
            _ => bgf,
        })
    }
}

/// `1 - s`.
pub(crate) fn one_minus<C: Ring>(s: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    &TruncatedSeries::one(s.order()) - s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;

    const N: usize = 10;

    fn x() -> BivariateSeries {
        TruncatedSeries::x(N)
    }

    fn inv_one_minus(s: &BivariateSeries) -> BivariateSeries {
        one_minus(s).inverse().unwrap()
    }

    fn int_row(m: &LowerTriMatrix<MultiPoly>, n: usize) -> Vec<i64> {
        m.row(n).iter().map(|c| i64::try_from(c.as_integer().unwrap()).unwrap()).collect()
    }

    fn simplex() -> RiordanArray {
        let g = inv_one_minus(&x());
        RiordanArray::ordinary(&g * &g, &x() * &g).unwrap()
    }

    fn hypercube_exponential() -> RiordanArray {
        RiordanArray::exponential(x().scale(&MultiPoly::int(2)).exp().unwrap(), x()).unwrap()
    }

    #[test]
    fn entries() {
        let s = simplex();
        assert_eq!(int_row(&s.matrix(4).unwrap(), 3), vec![4, 6, 4, 1]);
        assert_eq!(s.entry(3, 1).unwrap(), MultiPoly::int(6));
        let h = hypercube_exponential();
        assert_eq!(int_row(&h.matrix(4).unwrap(), 3), vec![8, 12, 6, 1]);
    }

    #[test]
    fn narayana_generalized_array() {
        let g = TruncatedSeries::new(
            (0..=N).map(|m| MultiPoly::constant(Rational::new(BigInt::one(), factorial(m) * factorial(m + 1)))).collect(),
            N,
        );
        let a = RiordanArray::generalized(WeightSequence::FactorialPair, g, x()).unwrap();
        let m = a.matrix(N + 1).unwrap();
        assert_eq!(int_row(&m, 3), vec![1, 6, 6, 1]);
        for n in 0..=N {
            for k in 0..=n {
                let (n_, k_) = (n as i64, k as i64);
                let expected = binomial(n_, k_) * binomial(n_ + 1, k_) / BigInt::from(k_ + 1);
                assert_eq!(m.get(n, k).as_integer().unwrap(), expected);
            }
        }
        assert_eq!(a.mul(&a), Err(Error::UnsupportedKind("generalized")));
        assert_eq!(a.bgf(4), Err(Error::UnsupportedKind("generalized")));
    }

    #[test]
    fn matrices() {
        let b = RiordanArray::binomial_exponential(N);
        assert_eq!(b.integer_matrix(7).unwrap(), LowerTriMatrix::binomial(7));
        assert_eq!(RiordanArray::binomial(N).integer_matrix(7).unwrap(), LowerTriMatrix::binomial(7));
        let ones = RiordanArray::ordinary(inv_one_minus(&x()), x()).unwrap();
        assert_eq!(ones.integer_matrix(7).unwrap(), LowerTriMatrix::from_fn(7, |_, _| BigInt::one()));
        let id = RiordanArray::identity(ArrayKind::Ordinary, N);
        assert_eq!(id.integer_matrix(5).unwrap(), LowerTriMatrix::identity(5));
        assert!(matches!(id.matrix(N + 2), Err(Error::IndexBeyondTruncation { .. })));
        assert!(matches!(id.entry(2, 3), Err(Error::IndexBeyondTruncation { .. })));
    }

    #[test]
    fn group_product_ordinary_family() {
        let r = MultiPoly::r();
        let geometric = inv_one_minus(&x());
        let one_plus_rx = &TruncatedSeries::one(N) + &x().scale(&r);
        let h = RiordanArray::ordinary(geometric.clone(), &(&x() * &one_plus_rx) * &geometric).unwrap();
        let prod = h.mul(&RiordanArray::binomial(N)).unwrap();
        let den = &one_minus(&x().scale(&MultiPoly::int(2))) - &x().pow(2).scale(&r);
        let den_inv = den.inverse().unwrap();
        assert_eq!(prod.g(), &den_inv);
        assert_eq!(prod.f(), &(&(&x() * &one_plus_rx) * &den_inv));
    }

    #[test]
    fn group_product_exponential_family() {
        let r = MultiPoly::r();
        let half_r = r.scale(&Rational::new(1.into(), 2.into()));
        let f = &x() + &x().pow(2).scale(&half_r);
        let h = RiordanArray::exponential(x().exp().unwrap(), f.clone()).unwrap();
        let prod = h.mul(&RiordanArray::binomial_exponential(N)).unwrap();
        let expected_g = (&x().scale(&MultiPoly::int(2)) + &x().pow(2).scale(&half_r)).exp().unwrap();
        assert_eq!(prod.g(), &expected_g);
        assert_eq!(prod.f(), &f);
        let id = RiordanArray::identity(ArrayKind::Exponential, N);
        assert_eq!(h.mul(&id).unwrap(), h);
    }

    #[test]
    fn kinds_do_not_mix() {
        let err = RiordanArray::binomial(N).mul(&RiordanArray::binomial_exponential(N));
        assert_eq!(err, Err(Error::KindMismatch { left: "ordinary", right: "exponential" }));
    }

    #[test]
    fn inverses() {
        let binv = RiordanArray::binomial(N).inverse().unwrap();
        let reduced = simplex().mul(&binv).unwrap();
        assert_eq!(reduced, RiordanArray::ordinary(inv_one_minus(&x()), x()).unwrap());

        let bexp_inv = RiordanArray::binomial_exponential(N).inverse().unwrap();
        assert_eq!(hypercube_exponential().mul(&bexp_inv).unwrap(), RiordanArray::binomial_exponential(N));

        let id = RiordanArray::identity(ArrayKind::Ordinary, N);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn bivariate_generating_functions() {
        let gf = RiordanArray::binomial(N).bgf(N).unwrap();
        let expected = inv_one_minus(&x().scale(&(&MultiPoly::one() + &MultiPoly::y())));
        assert_eq!(gf, expected);

        let b = RiordanArray::binomial_exponential(N);
        let rows = b.row_gf(N).unwrap();
        assert_eq!(rows, expected);
    }

    #[test]
    fn invalid_arrays() {
        assert!(RiordanArray::ordinary(x(), x()).is_err());
        assert!(RiordanArray::ordinary(TruncatedSeries::one(N), TruncatedSeries::one(N)).is_err());
        assert!(RiordanArray::ordinary(TruncatedSeries::one(N), x().pow(2)).is_err());
        assert!(WeightSequence::custom(vec![Rational::one(), Rational::zero()]).is_err());
        let w = WeightSequence::custom(vec![Rational::from_integer(2.into()), Rational::from_integer(6.into())]).unwrap();
        assert_eq!(w.weight(1), Some(Rational::from_integer(3.into())));
        assert_eq!(w.weight(2), None);
    }
}

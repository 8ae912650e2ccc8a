use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{binomial, MultiPoly, Ring};
use crate::error::{Error, Result};

/// Dense lower-triangular matrix; row `n` holds the entries `k = 0..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct LowerTriMatrix<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Ring> LowerTriMatrix<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        if let Some((row, _)) = rows.iter().enumerate().find(|(n, r)| r.len() != n + 1) {
            return Err(Error::RaggedRow { row });
        }
        Ok(LowerTriMatrix { rows })
    }

    /// Builds rows of any length `<= n + 1`, padding with zeros.
    pub fn from_partial_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let mut padded = Vec::with_capacity(rows.len());
        for (n, mut row) in rows.into_iter().enumerate() {
            if row.len() > n + 1 {
                return Err(Error::RaggedRow { row: n });
            }
            row.resize(n + 1, C::zero());
            padded.push(row);
        }
        Ok(LowerTriMatrix { rows: padded })
    }

    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> C) -> Self {
        let rows = (0..size).map(|n| (0..=n).map(|k| entry(n, k)).collect()).collect();
        LowerTriMatrix { rows }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |n, k| if n == k { C::one() } else { C::zero() })
    }

    /// Pascal's triangle with `size` rows.
    pub fn binomial(size: usize) -> Self {
        Self::from_fn(size, |n, k| C::from_integer(binomial(n as i64, k as i64)))
    }

    /// Number of rows.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, n: usize, k: usize) -> &C {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[C] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<C>> {
        self.rows
    }

    pub fn truncate(&self, size: usize) -> Self {
        LowerTriMatrix { rows: self.rows.iter().take(size).cloned().collect() }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LowerTriMatrix<D> {
        LowerTriMatrix { rows: self.rows.iter().map(|row| row.iter().map(&f).collect()).collect() }
    }

    /// Matrix product, over the rows both factors have.
    pub fn mul(&self, other: &Self) -> Self {
        let size = self.size().min(other.size());
        Self::from_fn(size, |n, k| {
            (k..=n).fold(C::zero(), |acc, j| acc + &(self.rows[n][j].clone() * &other.rows[j][k]))
        })
    }

    /// `rev(M)[n][k] = M[n][n - k]`.
    pub fn reversed(&self) -> Self {
        LowerTriMatrix {
            rows: self.rows.iter().map(|row| row.iter().rev().cloned().collect()).collect(),
        }
    }

    /// Ones on both borders and palindromic rows.
    pub fn is_pascal_like(&self) -> bool {
        self.rows.iter().all(|row| {
            row[0].is_one() && row[row.len() - 1].is_one() && row.iter().eq(row.iter().rev())
        })
    }
}

impl LowerTriMatrix<MultiPoly> {
    pub fn eval_r(&self, r: i64) -> Self {
        self.map(|c| c.eval_r(r))
    }

    /// Converts to integers, failing on symbolic or fractional entries.
    pub fn to_integers(&self) -> Result<LowerTriMatrix<BigInt>> {
        let mut rows = Vec::with_capacity(self.size());
        for (n, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (k, c) in row.iter().enumerate() {
                let value = c.as_constant().ok_or(Error::SymbolicEntries { n, k })?;
                if !value.is_integer() {
                    return Err(Error::NonIntegralEntry { n, k });
                }
                out.push(value.to_integer());
            }
            rows.push(out);
        }
        Ok(LowerTriMatrix { rows })
    }
}

impl From<LowerTriMatrix<BigInt>> for LowerTriMatrix<MultiPoly> {
    fn from(m: LowerTriMatrix<BigInt>) -> Self {
        m.map(|c| MultiPoly::from(c.clone()))
    }
}

/// The face matrix `M * B`, where `B` is Pascal's triangle, on the first
/// `size` rows.
pub fn f_matrix<C: Ring>(m: &LowerTriMatrix<C>, size: usize) -> Result<LowerTriMatrix<C>> {
    if m.size() < size {
        return Err(Error::IndexBeyondTruncation { n: size - 1, k: 0, order: m.size().saturating_sub(1) });
    }
    Ok(m.truncate(size).mul(&LowerTriMatrix::binomial(size)))
}

impl<C: Ring> fmt::Debug for LowerTriMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LowerTriMatrix [")?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Zero test on a whole matrix; handy for difference checks.
pub fn is_zero_matrix<C: Ring>(m: &LowerTriMatrix<C>) -> bool {
    m.rows.iter().flatten().all(Zero::is_zero)
}

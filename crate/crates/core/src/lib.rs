//! Exact Riordan-array calculus for Pascal-like triangles.
//!
//! Builds the gamma-, h- and f-matrices of the ordinary family
//! `(1/(1-x), x(1+rx)/(1-x))` and the exponential family
//! `[e^x, x(1+rx/2)]`, expands Jacobi continued fractions, and checks the
//! results against embedded OEIS triangles. All arithmetic is exact.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod families;
pub mod jfraction;
pub mod oeis;
pub mod output;
pub mod riordan;
pub mod series;
pub mod verify;

pub use algebra::{MultiPoly, Rational, RationalAlgebra, Ring, Var};
pub use error::{Error, Result};
pub use families::{family_array, family_triple, FamilySpec, Flavor, GammaHFTriple, Polytope};
pub use jfraction::{binomial_transform, IndexPoly, JFraction};
pub use riordan::{f_matrix, ArrayKind, LowerTriMatrix, RiordanArray, WeightSequence};
pub use series::{BivariateSeries, TruncatedSeries, DEFAULT_ORDER};

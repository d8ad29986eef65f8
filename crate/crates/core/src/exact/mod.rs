//! Exact scalars together with univariate polynomial and truncated power
//! series arithmetic over the integers and rationals.
//!
//! The scalar types are thin aliases over `num-bigint`, `num-rational` and
//! `num-complex`; everything in this crate that claims exactness goes
//! through them.

mod linalg;
mod poly;
mod series;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use thiserror::Error;

pub use linalg::{integer_rank, rational_rank};
pub use poly::{Degree, Factor, UniPoly};
pub use series::UniSeries;

/// Arbitrary precision signed integer.
pub type ExactInt = BigInt;
/// Rational number in lowest terms with a positive denominator.
pub type ExactRational = BigRational;
/// Complex number with rational real and imaginary parts.
pub type GaussianRational = Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("denominator has zero constant term; the quotient has no power series expansion")]
    NotExpandable,
    #[error("polynomial of degree {degree} cannot be palindromic about degree {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
}

/// Builds the rational `num/den`. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

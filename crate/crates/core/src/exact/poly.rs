use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, UniSeries};

/// Degree of a univariate polynomial. The zero polynomial has degree
/// `NegInfinity`, which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A binomial factor `(1 - t^e)^m` or `(1 + t^e)^m` of a product
/// expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    OneMinus { exponent: u32, multiplicity: u32 },
    OnePlus { exponent: u32, multiplicity: u32 },
}

impl Factor {
    pub fn one_minus(exponent: u32, multiplicity: u32) -> Self {
        Factor::OneMinus { exponent, multiplicity }
    }

    pub fn one_plus(exponent: u32, multiplicity: u32) -> Self {
        Factor::OnePlus { exponent, multiplicity }
    }

    pub fn exponent(&self) -> u32 {
        match *self {
            Factor::OneMinus { exponent, .. } | Factor::OnePlus { exponent, .. } => exponent,
        }
    }

    pub fn multiplicity(&self) -> u32 {
        match *self {
            Factor::OneMinus { multiplicity, .. } | Factor::OnePlus { multiplicity, .. } => {
                multiplicity
            }
        }
    }
}

/// Dense univariate polynomial with integer coefficients, indexed by
/// degree. Trailing zeros are always trimmed, so the zero polynomial has an
/// empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = UniPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    /// `c * t^degree`
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Expands a product of binomial factors. The empty product is 1.
    pub fn from_factored(factors: &[Factor]) -> Self {
        let mut p = UniPoly::one();
        for f in factors {
            for _ in 0..f.multiplicity() {
                p = match f {
                    Factor::OneMinus { exponent, .. } => p.mul_binomial(*exponent as usize, false),
                    Factor::OnePlus { exponent, .. } => p.mul_binomial(*exponent as usize, true),
                };
            }
        }
        p
    }

    // p * (1 +- t^e)
    fn mul_binomial(&self, e: usize, plus: bool) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = self.coeffs.clone();
        out.resize(self.coeffs.len() + e, BigInt::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            if plus {
                out[k + e] += c;
            } else {
                out[k + e] -= c;
            }
        }
        Self::from_coeffs(out)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// True iff `coeff(k) == coeff(d - k)` for every `0 <= k <= d`.
    pub fn is_palindromic(&self, d: usize) -> Result<bool, AlgebraError> {
        if let Degree::Finite(deg) = self.degree() {
            if deg > d {
                return Err(AlgebraError::DegreeExceedsBound { degree: deg, bound: d });
            }
        }
        Ok((0..=d / 2).all(|k| self.coeff(k) == self.coeff(d - k)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The first `order + 1` coefficients as a truncated series.
    pub fn to_series(&self, order: usize) -> UniSeries<BigInt> {
        UniSeries::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Lowest degree at which `self` and `other` differ.
    pub fn first_difference(&self, other: &UniPoly) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&k| self.coeff(k) != other.coeff(k))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;

            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Zero};

use super::{AlgebraError, UniPoly};

/// Power series truncated at `order` (inclusive): always holds exactly
/// `order + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> UniSeries<T> {
    /// Takes up to `order + 1` coefficients from `coeffs`, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut coeffs: Vec<T> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, T::zero());
        UniSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, std::iter::empty())
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(order, std::iter::once(T::one()))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Sum truncated to the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(
            order,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()),
        )
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniSeries { coeffs: out }
    }
}

impl UniSeries<BigRational> {
    /// Taylor coefficients of `num / den` through `t^order`.
    pub fn from_rational(num: &UniPoly, den: &UniPoly, order: usize) -> Result<Self, AlgebraError> {
        let lead = den.coeff(0);
        if lead.is_zero() {
            return Err(AlgebraError::NotExpandable);
        }
        let lead = BigRational::from_integer(lead);
        let den = den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = BigRational::from_integer(num.coeff(n));
            for (k, d) in den.iter().enumerate().take(n + 1).skip(1) {
                if !d.is_zero() {
                    acc -= &out[n - k] * d;
                }
            }
            out.push(acc / &lead);
        }
        Ok(UniSeries { coeffs: out })
    }

    /// The same series over the integers, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<UniSeries<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| UniSeries { coeffs })
    }
}

impl From<UniSeries<BigInt>> for UniSeries<BigRational> {
    fn from(s: UniSeries<BigInt>) -> Self {
        UniSeries { coeffs: s.coeffs.into_iter().map(BigRational::from_integer).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn geometric_series() {
        let s = UniSeries::from_rational(&p(&[1]), &p(&[1, -1]), 3).unwrap().to_integer().unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 1].map(BigInt::from));
    }

    #[test]
    fn non_integral_expansion() {
        // 1 / (2 - t) = 1/2 + t/4 + ...
        let s = UniSeries::from_rational(&p(&[1]), &p(&[2, -1]), 2).unwrap();
        assert_eq!(s.coeff(1), BigRational::new(1.into(), 4.into()));
        assert!(s.to_integer().is_none());
    }

    #[test]
    fn zero_constant_term_rejected() {
        assert_eq!(
            UniSeries::from_rational(&p(&[1]), &p(&[0, 1]), 3),
            Err(AlgebraError::NotExpandable)
        );
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = UniSeries::<BigInt>::from_coeffs(5, [1, 1].map(BigInt::from));
        let b = UniSeries::<BigInt>::from_coeffs(2, [1, 1].map(BigInt::from));
        let c = a.mul(&b);
        assert_eq!(c.order(), 2);
        assert_eq!(c.coeffs(), &[1, 2, 1].map(BigInt::from));
    }
}

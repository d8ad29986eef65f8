//! Reference polynomials and series loaded from the shipped fixture.

use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::exact::{Factor, UniPoly};

const PUBLISHED: &str = include_str!("../../fixtures/golden.toml");

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("cannot read fixture: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed fixture: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("{polynomial}: {reason}")]
    Shape { polynomial: &'static str, reason: String },
    #[error(
        "{polynomial}: printed coefficient of t^{degree} is {printed}, palindromic completion gives {mirrored}"
    )]
    Transcription { polynomial: &'static str, degree: usize, printed: i64, mirrored: BigInt },
}

impl GoldenError {
    /// Degree named by a transcription mismatch.
    pub fn degree(&self) -> Option<usize> {
        match self {
            GoldenError::Transcription { degree, .. } => Some(*degree),
            _ => None,
        }
    }
}

#[derive(Deserialize)]
struct RawFixture {
    structure: RawStructure,
    taylor: RawTaylor,
    numerator: RawPalindrome,
    denominator: RawFactored,
    transform: RawTransform,
    numerator_star: RawPalindrome,
    denominator_star: RawFactored,
}

#[derive(Deserialize)]
struct RawStructure {
    module_dimension: u32,
    group_dimension: u32,
}

#[derive(Deserialize)]
struct RawTaylor {
    coefficients: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPalindrome {
    mirror_degree: usize,
    low: Vec<i64>,
    printed_tail: Vec<(usize, i64)>,
}

#[derive(Deserialize)]
struct RawFactored {
    one_plus: Vec<(u32, u32)>,
    one_minus: Vec<(u32, u32)>,
}

#[derive(Deserialize)]
struct RawTransform {
    factors: Vec<Vec<i64>>,
}

impl RawPalindrome {
    fn complete(&self, name: &'static str) -> Result<UniPoly, GoldenError> {
        let d = self.mirror_degree;
        if self.low.len() > d + 1 || 2 * self.low.len() < d + 1 {
            return Err(GoldenError::Shape {
                polynomial: name,
                reason: format!(
                    "{} listed coefficients cannot be mirrored about degree {d}",
                    self.low.len()
                ),
            });
        }
        let mut coeffs = vec![BigInt::default(); d + 1];
        for (k, &c) in self.low.iter().enumerate() {
            coeffs[k] = c.into();
            coeffs[d - k] = c.into();
        }
        for &(degree, printed) in &self.printed_tail {
            let mirrored = coeffs.get(degree).cloned().unwrap_or_default();
            if mirrored != BigInt::from(printed) {
                return Err(GoldenError::Transcription { polynomial: name, degree, printed, mirrored });
            }
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl RawFactored {
    fn factors(&self) -> Vec<Factor> {
        self.one_plus
            .iter()
            .map(|&(e, m)| Factor::one_plus(e, m))
            .chain(self.one_minus.iter().map(|&(e, m)| Factor::one_minus(e, m)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub module_dimension: u32,
    pub group_dimension: u32,
    pub taylor: Vec<BigInt>,
    pub numerator: UniPoly,
    pub numerator_mirror_degree: usize,
    pub denominator_factors: Vec<Factor>,
    pub denominator: UniPoly,
    pub transform: UniPoly,
    pub numerator_star: UniPoly,
    pub numerator_star_mirror_degree: usize,
    pub denominator_star_factors: Vec<Factor>,
    pub denominator_star: UniPoly,
}

impl Golden {
    /// The fixture compiled into the crate.
    pub fn published() -> Self {
        Self::from_toml_str(PUBLISHED).expect("shipped fixture is valid")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, GoldenError> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    pub fn from_toml_str(s: &str) -> Result<Self, GoldenError> {
        let raw: RawFixture = toml::from_str(s)?;
        let denominator_factors = raw.denominator.factors();
        let denominator_star_factors = raw.denominator_star.factors();
        let transform = raw
            .transform
            .factors
            .iter()
            .fold(UniPoly::one(), |acc, f| &acc * &UniPoly::from_coeffs(f.iter().copied()));
        Ok(Golden {
            module_dimension: raw.structure.module_dimension,
            group_dimension: raw.structure.group_dimension,
            taylor: raw.taylor.coefficients.iter().map(|&c| c.into()).collect(),
            numerator: raw.numerator.complete("N")?,
            numerator_mirror_degree: raw.numerator.mirror_degree,
            denominator: UniPoly::from_factored(&denominator_factors),
            denominator_factors,
            transform,
            numerator_star: raw.numerator_star.complete("N*")?,
            numerator_star_mirror_degree: raw.numerator_star.mirror_degree,
            denominator_star: UniPoly::from_factored(&denominator_star_factors),
            denominator_star_factors,
        })
    }

    /// Degrees of a would-be homogeneous system of parameters: each
    /// `(1 - t^e)^m` factor of D* contributes `m` copies of `e`.
    pub fn hsop_degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .denominator_star_factors
            .iter()
            .filter(|f| matches!(f, Factor::OneMinus { .. }))
            .flat_map(|f| std::iter::repeat_n(f.exponent(), f.multiplicity() as usize))
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Degree;

    #[test]
    fn published_fixture_loads() {
        let g = Golden::published();
        assert_eq!(g.numerator.degree(), Degree::Finite(70));
        assert_eq!(g.denominator.degree(), Degree::Finite(105));
        assert_eq!(g.numerator_star.degree(), Degree::Finite(75));
        assert_eq!(g.denominator_star.degree(), Degree::Finite(110));
        assert_eq!(g.numerator.coeff(68), BigInt::from(0));
        assert_eq!(g.taylor.len(), 20);
    }

    #[test]
    fn factored_degree_sums() {
        let g = Golden::published();
        let sum = |fs: &[Factor]| fs.iter().map(|f| f.exponent() * f.multiplicity()).sum::<u32>();
        assert_eq!(sum(&g.denominator_factors), 1 + 6 + 18 + 20 + 20 + 18 + 14 + 8);
        assert_eq!(sum(&g.denominator_star_factors), 6 + 12 + 20 + 20 + 30 + 14 + 8);
    }

    #[test]
    fn tail_mismatch_names_degree() {
        let corrupted = PUBLISHED.replace("[67, -2]", "[67, -3]");
        let err = Golden::from_toml_str(&corrupted).unwrap_err();
        assert_eq!(err.degree(), Some(67));
        assert!(err.to_string().contains("t^67"));
    }
}

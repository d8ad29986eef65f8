//! Floating-point torus quadrature for the Molien-Weyl integral, used as an
//! oracle independent of the exact constant-term path.
//!
//! At each point of an `M x M x M` grid of roots of unity the product of
//! geometric series `prod_w (1 - t w)^-mult(w)` is expanded numerically in
//! `t`, multiplied by the Weyl factor evaluated at that point, and the
//! results are averaged. The degree-`d` integrand is a Laurent polynomial
//! with exponents in `-(d+2) ..= d`, so the trapezoid rule is exact up to
//! rounding once `M` exceeds that span.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::weights::{WeightSystem, POSITIVE_ROOTS};
use super::EngineError;
use crate::laurent::ExponentTriple;

/// Largest tolerated imaginary part of an averaged coefficient.
pub const IMAGINARY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureEstimate {
    pub grid_size: usize,
    /// Real parts of the averaged coefficients, degree 0 first.
    pub coefficients: Vec<f64>,
    /// Imaginary parts, all below `IMAGINARY_TOLERANCE` in magnitude.
    pub imaginary: Vec<f64>,
}

impl QuadratureEstimate {
    /// `|c_d - round(c_d)|` per degree.
    pub fn rounding_residuals(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| (c - c.round()).abs()).collect()
    }
}

/// Smallest admissible grid size for `max_degree`.
pub fn minimum_grid_size(max_degree: usize) -> usize {
    2 * max_degree + 5
}

pub fn default_grid_size(max_degree: usize) -> usize {
    2 * max_degree + 7
}

fn monomial_at(e: ExponentTriple, roots: &[Complex64], m: usize, (i, j, k): (usize, usize, usize)) -> Complex64 {
    let idx = |n: usize, p: i32| (n as i64 * p as i64).rem_euclid(m as i64) as usize;
    roots[idx(i, e.ex)] * roots[idx(j, e.ey)] * roots[idx(k, e.ez)]
}

pub fn quadrature_coefficients(
    weights: &WeightSystem,
    max_degree: usize,
    grid_size: usize,
) -> Result<QuadratureEstimate, EngineError> {
    let minimum = minimum_grid_size(max_degree);
    if grid_size < minimum {
        return Err(EngineError::GridTooSmall { grid_size, max_degree, minimum });
    }
    let m = grid_size;
    let roots: Vec<Complex64> = (0..m).map(|j| Complex64::from_polar(1.0, TAU * j as f64 / m as f64)).collect();

    let slices: Vec<Vec<Complex64>> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut sum = vec![Complex64::new(0.0, 0.0); max_degree + 1];
            let mut series = vec![Complex64::new(0.0, 0.0); max_degree + 1];
            for j in 0..m {
                for k in 0..m {
                    let at = (i, j, k);
                    let weyl: Complex64 = POSITIVE_ROOTS
                        .iter()
                        .map(|&r| 1.0 - monomial_at(-r, &roots, m, at))
                        .product();
                    if weyl.norm_sqr() == 0.0 {
                        continue;
                    }
                    series.fill(Complex64::new(0.0, 0.0));
                    series[0] = Complex64::new(1.0, 0.0);
                    for entry in weights.entries() {
                        let w = monomial_at(entry.weight, &roots, m, at);
                        for _ in 0..entry.multiplicity {
                            for d in 1..=max_degree {
                                let prev = series[d - 1];
                                series[d] += w * prev;
                            }
                        }
                    }
                    for (s, c) in sum.iter_mut().zip(&series) {
                        *s += weyl * c;
                    }
                }
            }
            sum
        })
        .collect();

    let scale = 1.0 / (m as f64).powi(3);
    let mut total = vec![Complex64::new(0.0, 0.0); max_degree + 1];
    for slice in &slices {
        for (t, s) in total.iter_mut().zip(slice) {
            *t += s;
        }
    }
    let total: Vec<Complex64> = total.into_iter().map(|c| c * scale).collect();
    if let Some((degree, c)) = total.iter().enumerate().find(|(_, c)| c.im.abs() > IMAGINARY_TOLERANCE) {
        return Err(EngineError::NonRealQuadrature { degree, imaginary: c.im });
    }
    Ok(QuadratureEstimate {
        grid_size: m,
        coefficients: total.iter().map(|c| c.re).collect(),
        imaginary: total.iter().map(|c| c.im).collect(),
    })
}

//! Poincare series of the SU(2) x SU(3) invariants on traceless hermitian
//! 6x6 matrices, by exact constant-term extraction and by floating torus
//! quadrature, plus verification against the reference closed form.

mod engine;
mod golden;
mod quadrature;
mod verify;
mod weights;

use thiserror::Error;

use crate::laurent::{ExponentTriple, LaurentError};

pub use engine::{CharacterCache, MolienEngine, Multidegree, MultigradedTable};
pub use golden::{Golden, GoldenError};
pub use quadrature::{
    default_grid_size, minimum_grid_size, quadrature_coefficients, QuadratureEstimate,
    IMAGINARY_TOLERANCE,
};
pub use verify::{verify_theorem, Check, SeriesReport};
pub use weights::{
    weyl_factor, Subspace, WeightEntry, WeightSystem, GROUP_DIMENSION, POSITIVE_ROOTS, SU3_ROOTS,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(
        "degree {max_degree} needs an estimated {estimate} bytes, over the budget of {budget}; the largest feasible degree under this budget is {feasible}"
    )]
    DegreeInfeasible { max_degree: usize, estimate: u64, budget: u64, feasible: usize },
    #[error("Newton recurrence left a non-integral coefficient at degree {degree}, exponent {exponent}; the weight system is inconsistent")]
    NewtonNotIntegral { degree: usize, exponent: ExponentTriple },
    #[error("grid size {grid_size} is below the exactness bound {minimum} for degree {max_degree}")]
    GridTooSmall { grid_size: usize, max_degree: usize, minimum: usize },
    #[error("quadrature coefficient at degree {degree} has imaginary part {imaginary:e}")]
    NonRealQuadrature { degree: usize, imaginary: f64 },
}

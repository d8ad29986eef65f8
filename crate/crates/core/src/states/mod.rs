//! Qubit-qutrit density operators: matrices over the exact and float
//! paths, the fixed su(2) and su(3) bases, the decomposition
//! `rho = I/6 + X (x) I + I (x) Y + Z`, random sampling, and the local
//! unitary action.

mod basis;
mod decomposition;
pub mod json;
mod matrix;
mod random;

use thiserror::Error;

pub use basis::{gellmann_basis, gellmann_coordinates, pauli_basis};
pub use decomposition::{
    correlation_from_components, decompose_state, validate_state, StateDecomposition, FLOAT_TOLERANCE,
};
pub use matrix::{
    partial_trace_qubit, partial_trace_qutrit, tensor_product, ExactMatrix, FloatMatrix, Matrix, RealScalar,
};
pub use random::{
    apply_local_unitary, random_local_unitary, random_state, LocalUnitaryPair, RandomState, Sampler, StateKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("expected a 6x6 matrix, got {rows}x{cols}")]
    Shape { rows: usize, cols: usize },
    #[error("matrix is not hermitian at entry ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
    #[error("trace must be 1, got {trace}")]
    Trace { trace: String },
    #[error("malformed matrix entry {0}")]
    Entry(String),
    #[error("malformed state file: {0}")]
    Json(String),
}

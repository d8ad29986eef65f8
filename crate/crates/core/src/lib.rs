//! Exact computation of the Poincare series of local-unitary invariants of
//! qubit-qutrit mixed states, and evaluation of the seven invariants of
//! degree two and three.

pub mod cli;
pub mod exact;
pub mod invariants;
pub mod laurent;
pub mod molien;
pub mod states;

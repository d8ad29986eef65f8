use super::basis::pauli_basis;
use super::matrix::{cr, partial_trace_qubit, partial_trace_qutrit, Matrix, RealScalar};
use super::StateError;

/// Largest tolerated hermiticity or trace defect on the float path.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// `rho = I_6/6 + X (x) I_3 + I_2 (x) Y + Z` with `Z = sum_k E_k (x) Y_k`
/// over the Pauli basis `E_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateDecomposition<R> {
    pub x: Matrix<R>,
    pub y: Matrix<R>,
    pub z: Matrix<R>,
    pub yk: [Matrix<R>; 3],
}

/// Checks the shape, hermiticity and unit trace of a candidate state.
pub fn validate_state<R: RealScalar>(rho: &Matrix<R>) -> Result<(), StateError> {
    if rho.rows() != 6 || rho.cols() != 6 {
        return Err(StateError::Shape { rows: rho.rows(), cols: rho.cols() });
    }
    if let Some((row, col)) = rho.hermiticity_defect(FLOAT_TOLERANCE) {
        return Err(StateError::NotHermitian { row, col });
    }
    let t = rho.trace();
    let defect = t.re.clone() - R::one();
    if !(defect.is_negligible(FLOAT_TOLERANCE) && t.im.is_negligible(FLOAT_TOLERANCE)) {
        return Err(StateError::Trace { trace: format!("{:?}", t.re) });
    }
    Ok(())
}

impl<R: RealScalar> StateDecomposition<R> {
    pub fn zero() -> Self {
        StateDecomposition {
            x: Matrix::zeros(2, 2),
            y: Matrix::zeros(3, 3),
            z: Matrix::zeros(6, 6),
            yk: std::array::from_fn(|_| Matrix::zeros(3, 3)),
        }
    }

    /// Builds the decomposition from `X`, `Y` and the three `Y_k`.
    pub fn from_components(x: Matrix<R>, y: Matrix<R>, yk: [Matrix<R>; 3]) -> Self {
        let z = correlation_from_components(&yk);
        StateDecomposition { x, y, z, yk }
    }

    /// `rho = I_6/6 + X (x) I_3 + I_2 (x) Y + Z`.
    pub fn recompose(&self) -> Matrix<R> {
        let i2 = Matrix::identity(2);
        let i3 = Matrix::identity(3);
        let base = Matrix::<R>::identity(6).scale(&cr(1, 6));
        &(&(&base + &self.x.kron(&i3)) + &i2.kron(&self.y)) + &self.z
    }

    /// `X -> aX`, `Y -> bY`, `Y_k -> cY_k` (so `Z -> cZ`).
    pub fn scale_components(&self, a: &R, b: &R, c: &R) -> Self {
        StateDecomposition {
            x: self.x.scale_real(a),
            y: self.y.scale_real(b),
            z: self.z.scale_real(c),
            yk: std::array::from_fn(|k| self.yk[k].scale_real(c)),
        }
    }
}

/// `sum_k E_k (x) Y_k`.
pub fn correlation_from_components<R: RealScalar>(yk: &[Matrix<R>; 3]) -> Matrix<R> {
    pauli_basis::<R>()
        .iter()
        .zip(yk)
        .fold(Matrix::zeros(6, 6), |acc, (e, y)| &acc + &e.kron(y))
}

/// Splits a trace-one hermitian 6x6 matrix into its identity, qubit,
/// qutrit and correlation parts.
pub fn decompose_state<R: RealScalar>(rho: &Matrix<R>) -> Result<StateDecomposition<R>, StateError> {
    validate_state(rho)?;
    let i2 = Matrix::<R>::identity(2);
    let i3 = Matrix::<R>::identity(3);

    let x = (&partial_trace_qutrit(rho) - &i2.scale(&cr(1, 2))).scale(&cr(1, 3));
    let y = (&partial_trace_qubit(rho) - &i3.scale(&cr(1, 3))).scale(&cr(1, 2));
    let z = &(&(rho - &Matrix::identity(6).scale(&cr(1, 6))) - &x.kron(&i3)) - &i2.kron(&y);
    let yk = pauli_basis::<R>().map(|e| partial_trace_qubit(&(&e.kron(&i3) * &z)).scale(&cr(1, 2)));
    Ok(StateDecomposition { x, y, z, yk })
}

impl<R: RealScalar> Default for StateDecomposition<R> {
    fn default() -> Self {
        Self::zero()
    }
}

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::{c, cr, FloatMatrix, Matrix, RealScalar};

/// `sigma_x, sigma_y, sigma_z`; the fixed basis `E_1, E_2, E_3` of the
/// traceless hermitian 2x2 matrices, with `tr(E_k E_l) = 2 delta_kl`.
pub fn pauli_basis<R: RealScalar>() -> [Matrix<R>; 3] {
    let o = || Complex::<R>::zero();
    let one = || cr::<R>(1, 1);
    let i = || c(R::zero(), R::one());
    let mi = || c(R::zero(), -R::one());
    [
        Matrix::from_rows(vec![vec![o(), one()], vec![one(), o()]]),
        Matrix::from_rows(vec![vec![o(), mi()], vec![i(), o()]]),
        Matrix::from_rows(vec![vec![one(), o()], vec![o(), -one()]]),
    ]
}

/// The eight Gell-Mann matrices, `tr(l_a l_b) = 2 delta_ab`. `l_8` carries
/// a factor `1/sqrt(3)`, so this basis exists on the float path only.
pub fn gellmann_basis() -> [FloatMatrix; 8] {
    let z = Complex::new(0.0, 0.0);
    let one = Complex::new(1.0, 0.0);
    let i = Complex::new(0.0, 1.0);
    let s = 1.0 / 3f64.sqrt();
    let m = |entries: [(usize, usize, Complex<f64>); 3]| {
        let mut out = FloatMatrix::zeros(3, 3);
        for (r, col, v) in entries {
            if v != z {
                out.set(r, col, v);
            }
        }
        out
    };
    [
        m([(0, 1, one), (1, 0, one), (2, 2, z)]),
        m([(0, 1, -i), (1, 0, i), (2, 2, z)]),
        m([(0, 0, one), (1, 1, -one), (2, 2, z)]),
        m([(0, 2, one), (2, 0, one), (1, 1, z)]),
        m([(0, 2, -i), (2, 0, i), (1, 1, z)]),
        m([(1, 2, one), (2, 1, one), (0, 0, z)]),
        m([(1, 2, -i), (2, 1, i), (0, 0, z)]),
        m([(0, 0, one * s), (1, 1, one * s), (2, 2, one * (-2.0 * s))]),
    ]
}

/// Coordinates of a traceless hermitian 3x3 matrix in the Gell-Mann basis:
/// `c_a = tr(l_a Y) / 2`.
pub fn gellmann_coordinates(y: &FloatMatrix) -> [f64; 8] {
    let basis = gellmann_basis();
    std::array::from_fn(|a| (&basis[a] * y).trace().re / 2.0)
}

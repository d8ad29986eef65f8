use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Real field underlying a matrix path: `BigRational` for exact
/// arithmetic, `f64` for the floating path.
pub trait RealScalar:
    Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    const EXACT: bool;

    fn ratio(num: i64, den: i64) -> Self;

    /// Exactly zero on the exact path; `|self| <= tol` on the float path.
    fn is_negligible(&self, tol: f64) -> bool;
}

impl RealScalar for f64 {
    const EXACT: bool = false;

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
}

impl RealScalar for BigRational {
    const EXACT: bool = true;

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

pub(crate) fn c<R: RealScalar>(re: R, im: R) -> Complex<R> {
    Complex::new(re, im)
}

pub(crate) fn cr<R: RealScalar>(n: i64, d: i64) -> Complex<R> {
    Complex::new(R::ratio(n, d), R::zero())
}

/// Dense row-major complex matrix over the real field `R`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<R>>,
}

pub type ExactMatrix = Matrix<BigRational>;
pub type FloatMatrix = Matrix<f64>;

impl<R: RealScalar> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Complex::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Complex::one() } else { Complex::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<R>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Complex<R>>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
    }

    pub fn diagonal(entries: &[Complex<R>]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Complex::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex<R> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<R>) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Complex<R>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex<R> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, s: &Complex<R>) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn scale_real(&self, s: &R) -> Self {
        self.scale(&Complex::new(s.clone(), R::zero()))
    }

    /// Hilbert-Schmidt inner product `tr(A^dagger B)`.
    pub fn inner(&self, other: &Self) -> Complex<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
    }

    /// Kronecker product with `self` as the outer (first) factor: entry
    /// `((a, i), (b, j))` is `self[a, b] * other[i, j]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |r, s| {
            self.get(r / p, s / q).clone() * other.get(r % p, s % q).clone()
        })
    }

    /// Traces out the second factor of a `(da*db) x (da*db)` operator.
    pub fn partial_trace_second(&self, da: usize, db: usize) -> Self {
        assert!(self.rows == da * db && self.cols == da * db, "dimension mismatch");
        Self::from_fn(da, da, |a, b| {
            (0..db).fold(Complex::zero(), |acc, i| acc + self.get(a * db + i, b * db + i).clone())
        })
    }

    /// Traces out the first factor of a `(da*db) x (da*db)` operator.
    pub fn partial_trace_first(&self, da: usize, db: usize) -> Self {
        assert!(self.rows == da * db && self.cols == da * db, "dimension mismatch");
        Self::from_fn(db, db, |i, j| {
            (0..da).fold(Complex::zero(), |acc, a| acc + self.get(a * db + i, a * db + j).clone())
        })
    }

    /// Cofactor expansion; intended for the 2x2 and 3x3 blocks used here.
    pub fn determinant(&self) -> Complex<R> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match self.rows {
            0 => Complex::one(),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0).clone() * self.get(1, 1).clone() - self.get(0, 1).clone() * self.get(1, 0).clone(),
            n => (0..n).fold(Complex::zero(), |acc, j| {
                let minor = Self::from_fn(n - 1, n - 1, |r, s| self.get(r + 1, if s < j { s } else { s + 1 }).clone());
                let term = self.get(0, j).clone() * minor.determinant();
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            }),
        }
    }

    /// First `(row, col)` where `self[i, j] != conj(self[j, i])` beyond `tol`.
    pub fn hermiticity_defect(&self, tol: f64) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = self.get(i, j).clone() - self.get(j, i).conj();
                if !(d.re.is_negligible(tol) && d.im.is_negligible(tol)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect(tol).is_none()
    }

    /// Largest entrywise modulus of `self - other`, as `f64`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let d = a.clone() - b.clone();
                d.re.to_f64().unwrap_or(f64::INFINITY).hypot(d.im.to_f64().unwrap_or(f64::INFINITY))
            })
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn to_float(&self) -> FloatMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| Complex::new(x.re.to_f64().unwrap_or(f64::NAN), x.im.to_f64().unwrap_or(f64::NAN)))
                .collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Complex<R>, &Complex<R>) -> Complex<R>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
    }
}

impl<R: RealScalar> Add for &Matrix<R> {
    type Output = Matrix<R>;

    fn add(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }
}

impl<R: RealScalar> Sub for &Matrix<R> {
    type Output = Matrix<R>;

    fn sub(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }
}

impl<R: RealScalar> Neg for &Matrix<R> {
    type Output = Matrix<R>;

    fn neg(self) -> Matrix<R> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

impl<R: RealScalar> Mul for &Matrix<R> {
    type Output = Matrix<R>;

    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Complex::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc + a.clone() * rhs.get(k, j).clone()
                }
            })
        })
    }
}

/// `a (x) b` with the qubit factor outermost.
pub fn tensor_product<R: RealScalar>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    a.kron(b)
}

/// `tr_B rho` for `rho` on C^2 (x) C^3.
pub fn partial_trace_qutrit<R: RealScalar>(rho: &Matrix<R>) -> Matrix<R> {
    rho.partial_trace_second(2, 3)
}

/// `tr_A rho` for `rho` on C^2 (x) C^3.
pub fn partial_trace_qubit<R: RealScalar>(rho: &Matrix<R>) -> Matrix<R> {
    rho.partial_trace_first(2, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Complex<Q> {
        cr(n, d)
    }

    #[test]
    fn identity_kron() {
        let i6: ExactMatrix = Matrix::identity(6);
        assert_eq!(tensor_product(&Matrix::identity(2), &Matrix::identity(3)), i6);
    }

    #[test]
    fn kron_index_order() {
        let a = ExactMatrix::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]]);
        let b = ExactMatrix::from_fn(3, 3, |i, j| q((i * 3 + j) as i64, 1));
        let k = a.kron(&b);
        assert_eq!(k.get(3 + 1, 2), &(q(3, 1) * q(5, 1)));
        assert_eq!(k.get(2, 3 + 1), &(q(2, 1) * q(7, 1)));
    }

    #[test]
    fn partial_traces_of_products() {
        let a = ExactMatrix::from_rows(vec![vec![q(1, 2), c(Q::ratio(1, 3), Q::ratio(1, 1))], vec![q(0, 1), q(-2, 1)]]);
        let b = ExactMatrix::from_fn(3, 3, |i, j| q(i as i64 - 2 * j as i64, 3));
        let ab = a.kron(&b);
        assert_eq!(partial_trace_qutrit(&ab), a.scale(&b.trace()));
        assert_eq!(partial_trace_qubit(&ab), b.scale(&a.trace()));
        assert_eq!(partial_trace_qubit(&ExactMatrix::identity(6)), ExactMatrix::identity(3).scale(&q(2, 1)));
        assert_eq!(partial_trace_qubit(&ab).trace(), ab.trace());
        assert_eq!(partial_trace_qutrit(&ab).trace(), ab.trace());
    }

    #[test]
    fn determinants() {
        let m = ExactMatrix::from_fn(3, 3, |i, j| q([[2, 0, 1], [1, 3, 2], [1, 1, 2]][i][j], 1));
        assert_eq!(m.determinant(), q(6, 1));
        let d = ExactMatrix::diagonal(&[q(1, 3), q(-1, 6), q(-1, 6)]);
        assert_eq!(d.determinant(), q(1, 108));
    }

    #[test]
    fn hermiticity() {
        let h = ExactMatrix::from_rows(vec![vec![q(1, 1), c(Q::ratio(1, 1), Q::ratio(2, 1))], vec![c(Q::ratio(1, 1), Q::ratio(-2, 1)), q(0, 1)]]);
        assert!(h.is_hermitian(0.0));
        let mut g = h.clone();
        g.set(1, 0, q(1, 1));
        assert_eq!(g.hermiticity_defect(0.0), Some((0, 1)));
    }
}

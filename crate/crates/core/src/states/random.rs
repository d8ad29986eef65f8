use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::matrix::{ExactMatrix, FloatMatrix, Matrix};

/// `U_2 (x) U_3` factors of a local unitary, each special unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalUnitaryPair {
    pub u2: FloatMatrix,
    pub u3: FloatMatrix,
}

impl LocalUnitaryPair {
    pub fn identity() -> Self {
        LocalUnitaryPair { u2: Matrix::identity(2), u3: Matrix::identity(3) }
    }

    /// `U_2 (x) U_3`.
    pub fn combined(&self) -> FloatMatrix {
        self.u2.kron(&self.u3)
    }
}

/// `(U_2 (x) U_3) rho (U_2 (x) U_3)^dagger`.
pub fn apply_local_unitary(rho: &FloatMatrix, g: &LocalUnitaryPair) -> FloatMatrix {
    let u = g.combined();
    &(&u * rho) * &u.adjoint()
}

/// Which sampling path a random state comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateKind {
    /// Exact hermitian trace-one matrix with small rational entries; not
    /// necessarily positive.
    Rational,
    /// `A A^dagger / tr(A A^dagger)` for complex Gaussian `A`.
    PsdFloat,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RandomState {
    Rational(ExactMatrix),
    PsdFloat(FloatMatrix),
}

/// Seeded source of random states and local unitaries. Owns its generator;
/// identical seeds give bit-identical output.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream `stream` of the generator seeded by `seed`.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn small_rational(&mut self) -> BigRational {
        let n: i64 = self.rng.gen_range(-4..=4);
        let d: i64 = self.rng.gen_range(1..=4);
        BigRational::new(n.into(), d.into())
    }

    /// Hermitian part of a random small-rational matrix, shifted along the
    /// identity to trace one.
    pub fn rational_state(&mut self) -> ExactMatrix {
        let a = ExactMatrix::from_fn(6, 6, |_, _| Complex::new(self.small_rational(), self.small_rational()));
        let half = Complex::new(BigRational::new(1.into(), 2.into()), BigRational::from_integer(0.into()));
        let h = (&a + &a.adjoint()).scale(&half);
        let shift = (Complex::new(BigRational::from_integer(1.into()), BigRational::from_integer(0.into())) - h.trace())
            * Complex::new(BigRational::new(1.into(), 6.into()), BigRational::from_integer(0.into()));
        &h + &ExactMatrix::identity(6).scale(&shift)
    }

    fn gaussian(&mut self) -> Complex64 {
        let re: f64 = self.rng.sample(StandardNormal);
        let im: f64 = self.rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    }

    pub fn psd_state(&mut self) -> FloatMatrix {
        let a = FloatMatrix::from_fn(6, 6, |_, _| self.gaussian());
        let p = &a * &a.adjoint();
        let t = p.trace().re;
        p.scale_real(&(1.0 / t))
    }

    pub fn state(&mut self, kind: StateKind) -> RandomState {
        match kind {
            StateKind::Rational => RandomState::Rational(self.rational_state()),
            StateKind::PsdFloat => RandomState::PsdFloat(self.psd_state()),
        }
    }

    /// Haar-distributed element of SU(n): orthonormalize the columns of a
    /// complex Gaussian matrix (Gram-Schmidt leaves R with a positive
    /// diagonal, which fixes the phase ambiguity), then rotate the
    /// determinant to 1.
    pub fn special_unitary(&mut self, n: usize) -> FloatMatrix {
        let mut cols: Vec<Vec<Complex64>> = (0..n).map(|_| (0..n).map(|_| self.gaussian()).collect()).collect();
        for j in 0..n {
            for i in 0..j {
                let proj: Complex64 = (0..n).map(|r| cols[i][r].conj() * cols[j][r]).sum();
                for r in 0..n {
                    let v = cols[i][r];
                    cols[j][r] -= proj * v;
                }
            }
            let norm = cols[j].iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            cols[j].iter_mut().for_each(|v| *v /= norm);
        }
        let u = FloatMatrix::from_fn(n, n, |r, c| cols[c][r]);
        let phase = Complex64::from_polar(1.0, -u.determinant().arg() / n as f64);
        u.scale(&phase)
    }

    pub fn local_unitary(&mut self) -> LocalUnitaryPair {
        LocalUnitaryPair { u2: self.special_unitary(2), u3: self.special_unitary(3) }
    }
}

pub fn random_state(seed: u64, kind: StateKind) -> RandomState {
    Sampler::new(seed).state(kind)
}

pub fn random_local_unitary(seed: u64) -> LocalUnitaryPair {
    Sampler::new(seed).local_unitary()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn max_unitarity_defect(u: &FloatMatrix) -> f64 {
        (&u.adjoint() * u).max_abs_diff(&Matrix::identity(u.rows()))
    }

    #[test]
    fn special_unitaries() {
        let mut s = Sampler::new(11);
        for _ in 0..20 {
            let g = s.local_unitary();
            assert!(max_unitarity_defect(&g.u2) < 1e-12);
            assert!(max_unitarity_defect(&g.u3) < 1e-12);
            assert!((g.u2.determinant() - 1.0).norm() < 1e-12);
            assert!((g.u3.determinant() - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn action_preserves_trace_and_hermiticity() {
        let mut s = Sampler::new(3);
        let rho = s.psd_state();
        let g = s.local_unitary();
        let out = apply_local_unitary(&rho, &g);
        assert!((out.trace().re - 1.0).abs() < 1e-12);
        assert!(out.is_hermitian(1e-12));
        assert_eq!(apply_local_unitary(&rho, &LocalUnitaryPair::identity()), rho);
    }

    #[test]
    fn rational_states_are_exact() {
        let mut s = Sampler::new(5);
        for _ in 0..10 {
            let rho = s.rational_state();
            assert!(rho.is_hermitian(0.0));
            assert!(rho.trace().re.is_one());
        }
    }

    // Cholesky pivots of a hermitian matrix are all positive iff it is
    // positive definite.
    fn cholesky_pivots(m: &FloatMatrix) -> Vec<f64> {
        let n = m.rows();
        let mut l = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        let mut pivots = Vec::new();
        for j in 0..n {
            let d = m.get(j, j).re - (0..j).map(|k| l[j][k].norm_sqr()).sum::<f64>();
            pivots.push(d);
            if d <= 0.0 {
                break;
            }
            l[j][j] = Complex64::new(d.sqrt(), 0.0);
            for i in j + 1..n {
                let s: Complex64 = (0..j).map(|k| l[i][k] * l[j][k].conj()).sum();
                l[i][j] = (m.get(i, j) - s) / l[j][j];
            }
        }
        pivots
    }

    #[test]
    fn psd_states() {
        let mut s = Sampler::new(9);
        for _ in 0..10 {
            let rho = s.psd_state();
            assert!((rho.trace().re - 1.0).abs() < 1e-12);
            assert!(rho.is_hermitian(1e-12));
            let pivots = cholesky_pivots(&rho);
            assert_eq!(pivots.len(), 6);
            assert!(pivots.iter().all(|&p| p > 0.0), "{pivots:?}");
        }
    }

    #[test]
    fn seeding_is_deterministic() {
        assert_eq!(random_state(42, StateKind::PsdFloat), random_state(42, StateKind::PsdFloat));
        assert_eq!(random_state(42, StateKind::Rational), random_state(42, StateKind::Rational));
        assert_ne!(random_state(42, StateKind::PsdFloat), random_state(43, StateKind::PsdFloat));
        assert_eq!(random_local_unitary(1), random_local_unitary(1));
        let mut a = Sampler::with_stream(1, 0);
        let mut b = Sampler::with_stream(1, 1);
        assert_ne!(a.psd_state(), b.psd_state());
    }
}

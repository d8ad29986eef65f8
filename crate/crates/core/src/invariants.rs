//! The seven invariants of degree two and three, each evaluated in two
//! independent ways:
//!
//! | invariant | matrix form            | multidegree |
//! |-----------|------------------------|-------------|
//! | I1        | det X                  | (2,0,0)     |
//! | I2        | tr Y^2                 | (0,2,0)     |
//! | I3        | tr Z^2                 | (0,0,2)     |
//! | I4        | det Y                  | (0,3,0)     |
//! | I5        | tr Z^3                 | (0,0,3)     |
//! | I6        | tr((X (x) Y) Z)        | (1,1,1)     |
//! | I7        | tr((I_2 (x) Y) Z^2)    | (0,1,2)     |
//!
//! The basis form rewrites I3, I5, I6, I7 through the Pauli structure
//! constants `tr(E_k E_l)` and `tr(E_k E_l E_m)` acting on the components
//! `Y_k` of `Z = sum_k E_k (x) Y_k`.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact::rational_rank;
use crate::molien::Multidegree;
use crate::states::{
    apply_local_unitary, decompose_state, pauli_basis, ExactMatrix, LocalUnitaryPair, Matrix, RealScalar, Sampler,
    StateDecomposition, StateError, FLOAT_TOLERANCE,
};

pub const NUM_INVARIANTS: usize = 7;

/// Multidegree of `I_{j+1}` in the coordinates of V1, V2, V3.
pub const MULTIDEGREES: [Multidegree; NUM_INVARIANTS] = [
    Multidegree(2, 0, 0),
    Multidegree(0, 2, 0),
    Multidegree(0, 0, 2),
    Multidegree(0, 3, 0),
    Multidegree(0, 0, 3),
    Multidegree(1, 1, 1),
    Multidegree(0, 1, 2),
];

/// Indices (0-based) of the invariants of total degree `degree`.
pub fn invariants_of_degree(degree: u32) -> Vec<usize> {
    (0..NUM_INVARIANTS).filter(|&j| MULTIDEGREES[j].total() == degree).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error("I{index} has imaginary part {imaginary} on a hermitian input")]
    NonReal { index: usize, imaginary: String },
    #[error("need at least {needed} states for the degree-{degree} rank test, got {got}")]
    TooFewStates { degree: u32, needed: usize, got: usize },
    #[error("no listed invariants of degree {0}; expected 2 or 3")]
    UnsupportedDegree(u32),
}

/// `I1 ..= I7`, stored 0-based.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantVector<R> {
    pub values: [R; NUM_INVARIANTS],
}

impl<R> InvariantVector<R> {
    /// `I_j` for `j` in `1 ..= 7`.
    pub fn get(&self, j: usize) -> &R {
        &self.values[j - 1]
    }
}

fn real_part<R: RealScalar>(values: [Complex<R>; NUM_INVARIANTS]) -> Result<InvariantVector<R>, InvariantError> {
    for (j, v) in values.iter().enumerate() {
        if !v.im.is_negligible(FLOAT_TOLERANCE) {
            return Err(InvariantError::NonReal { index: j + 1, imaginary: format!("{:?}", v.im) });
        }
    }
    Ok(InvariantVector { values: values.map(|v| v.re) })
}

fn tr<R: RealScalar>(ms: &[&Matrix<R>]) -> Complex<R> {
    let (first, rest) = ms.split_first().expect("empty product");
    rest.iter().fold((*first).clone(), |acc, m| &acc * m).trace()
}

/// Direct matrix algebra on `X`, `Y`, `Z`.
pub fn eval_matrix_form<R: RealScalar>(dec: &StateDecomposition<R>) -> Result<InvariantVector<R>, InvariantError> {
    let (x, y, z) = (&dec.x, &dec.y, &dec.z);
    let z2 = z * z;
    let i2y = Matrix::identity(2).kron(y);
    real_part([
        x.determinant(),
        tr(&[y, y]),
        z2.trace(),
        y.determinant(),
        (&z2 * z).trace(),
        tr(&[&x.kron(y), z]),
        tr(&[&i2y, &z2]),
    ])
}

/// Pauli structure constants `tr(E_k E_l)` and `tr(E_k E_l E_m)`.
struct Structure<R> {
    g: [[Complex<R>; 3]; 3],
    f: [[[Complex<R>; 3]; 3]; 3],
}

impl<R: RealScalar> Structure<R> {
    fn pauli() -> Self {
        let e = pauli_basis::<R>();
        Structure {
            g: std::array::from_fn(|k| std::array::from_fn(|l| tr(&[&e[k], &e[l]]))),
            f: std::array::from_fn(|k| {
                std::array::from_fn(|l| std::array::from_fn(|m| tr(&[&e[k], &e[l], &e[m]])))
            }),
        }
    }
}

/// I3, I5, I6, I7 through the structure-constant sums over the `Y_k`;
/// I1, I2, I4 as in the matrix form.
pub fn eval_basis_form<R: RealScalar>(dec: &StateDecomposition<R>) -> Result<InvariantVector<R>, InvariantError> {
    let s = Structure::<R>::pauli();
    let e = pauli_basis::<R>();
    let (x, y, yk) = (&dec.x, &dec.y, &dec.yk);
    let mut i3 = Complex::zero();
    let mut i5 = Complex::zero();
    let mut i6 = Complex::zero();
    let mut i7 = Complex::zero();
    for k in 0..3 {
        i6 = i6 + tr(&[x, &e[k]]) * tr(&[y, &yk[k]]);
        for l in 0..3 {
            if !s.g[k][l].is_zero() {
                i3 = i3 + s.g[k][l].clone() * tr(&[&yk[k], &yk[l]]);
                i7 = i7 + s.g[k][l].clone() * tr(&[y, &yk[k], &yk[l]]);
            }
            for m in 0..3 {
                if !s.f[k][l][m].is_zero() {
                    i5 = i5 + s.f[k][l][m].clone() * tr(&[&yk[k], &yk[l], &yk[m]]);
                }
            }
        }
    }
    real_part([x.determinant(), tr(&[y, y]), i3, y.determinant(), i5, i6, i7])
}

/// Relative deviations of one local-unitary trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialDeviation {
    pub trial: u64,
    pub deviations: [f64; NUM_INVARIANTS],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BatteryReport {
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
    /// Worst relative deviation per invariant over all trials.
    pub max_deviation: [f64; NUM_INVARIANTS],
    pub worst_trial: u64,
    pub passed: bool,
}

impl BatteryReport {
    pub fn overall_max(&self) -> f64 {
        self.max_deviation.iter().copied().fold(0.0, f64::max)
    }
}

/// `|I_j(g rho g^dagger) - I_j(rho)| / max(1, |I_j(rho)|)` per invariant.
pub fn relative_deviation(rho: &Matrix<f64>, g: &LocalUnitaryPair) -> Result<[f64; NUM_INVARIANTS], InvariantError> {
    let before = eval_matrix_form(&decompose_state(rho)?)?;
    let after = eval_matrix_form(&decompose_state(&apply_local_unitary(rho, g))?)?;
    Ok(std::array::from_fn(|j| {
        (after.values[j] - before.values[j]).abs() / before.values[j].abs().max(1.0)
    }))
}

/// Random PSD states under random Haar local unitaries. Trial `i` draws
/// from stream `i` of the generator seeded by `seed`, so results do not
/// depend on scheduling.
pub fn invariance_battery(trials: u64, seed: u64, tolerance: f64) -> Result<BatteryReport, InvariantError> {
    assert!(trials >= 1, "need at least one trial");
    let per_trial: Vec<TrialDeviation> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut sampler = Sampler::with_stream(seed, trial);
            let rho = sampler.psd_state();
            let g = sampler.local_unitary();
            relative_deviation(&rho, &g).map(|deviations| TrialDeviation { trial, deviations })
        })
        .collect::<Result<_, _>>()?;
    let mut max_deviation = [0.0f64; NUM_INVARIANTS];
    let mut worst = (0.0f64, 0u64);
    for t in &per_trial {
        for j in 0..NUM_INVARIANTS {
            max_deviation[j] = max_deviation[j].max(t.deviations[j]);
            if t.deviations[j] > worst.0 {
                worst = (t.deviations[j], t.trial);
            }
        }
    }
    Ok(BatteryReport {
        trials,
        seed,
        tolerance,
        max_deviation,
        worst_trial: worst.1,
        passed: max_deviation.iter().all(|&d| d <= tolerance),
    })
}

/// Exact rank of the matrix whose rows are states and whose columns are
/// the invariants of total degree `degree`.
pub fn independence_rank(states: &[ExactMatrix], degree: u32) -> Result<usize, InvariantError> {
    let columns = invariants_of_degree(degree);
    if columns.is_empty() {
        return Err(InvariantError::UnsupportedDegree(degree));
    }
    if states.len() < columns.len() {
        return Err(InvariantError::TooFewStates { degree, needed: columns.len(), got: states.len() });
    }
    let rows: Vec<Vec<BigRational>> = states
        .iter()
        .map(|rho| {
            let v = eval_matrix_form(&decompose_state(rho)?)?;
            Ok(columns.iter().map(|&j| v.values[j].clone()).collect())
        })
        .collect::<Result<_, InvariantError>>()?;
    Ok(rational_rank(&rows))
}

/// Float copy of an exact invariant vector.
pub fn to_float(v: &InvariantVector<BigRational>) -> InvariantVector<f64> {
    InvariantVector { values: std::array::from_fn(|j| v.values[j].to_f64().unwrap_or(f64::NAN)) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn diag_state() -> ExactMatrix {
        let mut rho = ExactMatrix::zeros(6, 6);
        rho.set(0, 0, Complex::new(ratio(1, 1), ratio(0, 1)));
        rho
    }

    fn expected_diag() -> [BigRational; 7] {
        [ratio(-1, 36), ratio(1, 6), ratio(1, 3), ratio(1, 108), ratio(0, 1), ratio(1, 18), ratio(1, 18)]
    }

    #[test]
    fn diagonal_state_values() {
        let dec = decompose_state(&diag_state()).unwrap();
        assert_eq!(eval_matrix_form(&dec).unwrap().values, expected_diag());
        assert_eq!(eval_basis_form(&dec).unwrap().values, expected_diag());
    }

    #[test]
    fn maximally_mixed_vanishes() {
        let rho = ExactMatrix::identity(6).scale(&Complex::new(ratio(1, 6), ratio(0, 1)));
        let v = eval_matrix_form(&decompose_state(&rho).unwrap()).unwrap();
        assert!(v.values.iter().all(Zero::is_zero));
    }

    #[test]
    fn single_correlation_component() {
        let mut s = Sampler::new(4);
        let dec = decompose_state(&s.rational_state()).unwrap();
        let y1 = dec.yk[0].clone();
        let zero = Matrix::zeros(3, 3);
        let only = StateDecomposition::from_components(dec.x.clone(), dec.y.clone(), [y1.clone(), zero.clone(), zero]);
        let v = eval_basis_form(&only).unwrap();
        assert_eq!(v.get(3), &(tr(&[&y1, &y1]).re * ratio(2, 1)));
        assert_eq!(v, eval_matrix_form(&only).unwrap());
    }

    #[test]
    fn uncorrelated_states_lose_z_invariants() {
        let mut s = Sampler::new(8);
        let dec = decompose_state(&s.rational_state()).unwrap();
        let zero = || Matrix::zeros(3, 3);
        let nz = StateDecomposition::from_components(dec.x, dec.y, [zero(), zero(), zero()]);
        let v = eval_matrix_form(&nz).unwrap();
        for j in [3, 5, 6, 7] {
            assert!(v.get(j).is_zero(), "I{j}");
        }
    }

    #[test]
    fn identity_trial_has_zero_deviation() {
        let rho = Sampler::new(2).psd_state();
        assert_eq!(relative_deviation(&rho, &LocalUnitaryPair::identity()).unwrap(), [0.0; 7]);
    }

    #[test]
    fn diagonal_unitaries_on_diagonal_state() {
        use num_complex::Complex64;
        let rho = Matrix::<f64>::diagonal(&[0.3, 0.1, 0.2, 0.15, 0.05, 0.2].map(|x| Complex64::new(x, 0.0)));
        let (a, b, c) = (0.7f64, 1.3f64, -0.4f64);
        let g = LocalUnitaryPair {
            u2: Matrix::diagonal(&[Complex64::from_polar(1.0, a), Complex64::from_polar(1.0, -a)]),
            u3: Matrix::diagonal(&[
                Complex64::from_polar(1.0, b),
                Complex64::from_polar(1.0, c),
                Complex64::from_polar(1.0, -b - c),
            ]),
        };
        let dev = relative_deviation(&rho, &g).unwrap();
        assert!(dev.iter().all(|&d| d < 1e-15), "{dev:?}");
    }

    #[test]
    fn rank_errors() {
        let states: Vec<ExactMatrix> = (0..2).map(|i| Sampler::new(i).rational_state()).collect();
        assert_eq!(
            independence_rank(&states, 3),
            Err(InvariantError::TooFewStates { degree: 3, needed: 4, got: 2 })
        );
        assert_eq!(independence_rank(&states, 4), Err(InvariantError::UnsupportedDegree(4)));
    }

    #[test]
    fn rank_of_random_states() {
        let mut s = Sampler::new(21);
        let states: Vec<ExactMatrix> = (0..6).map(|_| s.rational_state()).collect();
        assert_eq!(independence_rank(&states, 2).unwrap(), 3);
        assert_eq!(independence_rank(&states, 3).unwrap(), 4);
    }

    #[test]
    fn rank_collapses_without_qutrit_parts() {
        // states I/6 + X (x) I_3: only the V1 coordinates are nonzero
        let mut s = Sampler::new(2);
        let states: Vec<ExactMatrix> = (0..6)
            .map(|_| {
                let d = decompose_state(&s.rational_state()).unwrap();
                let zero = || Matrix::zeros(3, 3);
                StateDecomposition::from_components(d.x, zero(), [zero(), zero(), zero()]).recompose()
            })
            .collect();
        assert!(independence_rank(&states, 3).unwrap() <= 1);
        assert_eq!(independence_rank(&states, 2).unwrap(), 1);
    }

    #[test]
    fn battery_small() {
        let r = invariance_battery(8, 7, 1e-9).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r, invariance_battery(8, 7, 1e-9).unwrap());
    }
}

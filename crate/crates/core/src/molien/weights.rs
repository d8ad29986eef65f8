use serde::Serialize;

use crate::laurent::{ExponentTriple, LaurentPoly3};

/// Irreducible summand of the traceless hermitian operators on C^2 (x) C^3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Subspace {
    /// Traceless qubit part tensored with the qutrit identity.
    V1,
    /// Qubit identity tensored with the traceless qutrit part.
    V2,
    /// Traceless (x) traceless correlation part.
    V3,
}

impl Subspace {
    pub const ALL: [Subspace; 3] = [Subspace::V1, Subspace::V2, Subspace::V3];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightEntry {
    pub weight: ExponentTriple,
    pub multiplicity: u32,
    pub subspace: Subspace,
}

/// Roots of SU(3) in the coordinates `(y, z)`: simple roots `y`, `z`, their
/// sum `yz`, and the negatives.
pub const SU3_ROOTS: [ExponentTriple; 6] = [
    ExponentTriple::new(0, 1, 0),
    ExponentTriple::new(0, 0, 1),
    ExponentTriple::new(0, 1, 1),
    ExponentTriple::new(0, -1, 0),
    ExponentTriple::new(0, 0, -1),
    ExponentTriple::new(0, -1, -1),
];

/// Positive roots: `x` for SU(2), `y`, `z`, `yz` for SU(3).
pub const POSITIVE_ROOTS: [ExponentTriple; 4] = [
    ExponentTriple::new(1, 0, 0),
    ExponentTriple::new(0, 1, 0),
    ExponentTriple::new(0, 0, 1),
    ExponentTriple::new(0, 1, 1),
];

/// dim SU(2) + dim SU(3).
pub const GROUP_DIMENSION: u32 = 3 + 8;

/// Torus weights of a representation, with multiplicities and the summand
/// each weight space belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    entries: Vec<WeightEntry>,
}

impl WeightSystem {
    pub fn new(entries: Vec<WeightEntry>) -> Self {
        WeightSystem { entries }
    }

    /// The 35 weights of `V1 + V2 + V3` under SU(2) x SU(3).
    pub fn qubit_qutrit() -> Self {
        let x = ExponentTriple::new(1, 0, 0);
        let qubit_adjoint = [(x, 1), (-x, 1), (ExponentTriple::ZERO, 1)];
        let qutrit_adjoint: Vec<(ExponentTriple, u32)> = SU3_ROOTS
            .iter()
            .map(|&r| (r, 1))
            .chain([(ExponentTriple::ZERO, 2)])
            .collect();

        let mut entries = Vec::new();
        for &(w, m) in &qubit_adjoint {
            entries.push(WeightEntry { weight: w, multiplicity: m, subspace: Subspace::V1 });
        }
        for &(w, m) in &qutrit_adjoint {
            entries.push(WeightEntry { weight: w, multiplicity: m, subspace: Subspace::V2 });
        }
        for &(a, ma) in &qubit_adjoint {
            for &(b, mb) in &qutrit_adjoint {
                entries.push(WeightEntry {
                    weight: a + b,
                    multiplicity: ma * mb,
                    subspace: Subspace::V3,
                });
            }
        }
        WeightSystem { entries }
    }

    pub fn entries(&self) -> &[WeightEntry] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Multiplicity of `w` summed over all subspaces.
    pub fn multiplicity_of(&self, w: ExponentTriple) -> u32 {
        self.entries.iter().filter(|e| e.weight == w).map(|e| e.multiplicity).sum()
    }

    /// The weights of a single summand.
    pub fn restricted(&self, subspace: Subspace) -> WeightSystem {
        WeightSystem {
            entries: self.entries.iter().filter(|e| e.subspace == subspace).copied().collect(),
        }
    }

    /// True iff every weight has the same multiplicity as its negative.
    pub fn is_self_dual(&self) -> bool {
        self.entries.iter().all(|e| self.multiplicity_of(-e.weight) == self.multiplicity_of(e.weight))
    }

    /// The character `sum_w mult(w) * w`.
    pub fn character(&self) -> LaurentPoly3 {
        LaurentPoly3::from_terms(self.entries.iter().map(|e| (e.weight, e.multiplicity)))
    }

    /// `p_k = sum_w mult(w) * w^k`.
    pub fn power_sum(&self, k: u32) -> LaurentPoly3 {
        self.character().substitute_power(k)
    }
}

/// `(1 - x^-1)(1 - y^-1)(1 - z^-1)(1 - y^-1 z^-1)`: one factor per positive
/// root. Its product with a class function has the group average as its
/// constant term.
pub fn weyl_factor() -> LaurentPoly3 {
    POSITIVE_ROOTS.iter().fold(LaurentPoly3::one(), |acc, &r| {
        &acc * &LaurentPoly3::from_terms([(ExponentTriple::ZERO, 1), (-r, -1)])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn e(ex: i32, ey: i32, ez: i32) -> ExponentTriple {
        ExponentTriple::new(ex, ey, ez)
    }

    #[test]
    fn multiplicities_match_molien_denominator() {
        let ws = WeightSystem::qubit_qutrit();
        assert_eq!(ws.total_multiplicity(), 35);
        assert_eq!(ws.multiplicity_of(ExponentTriple::ZERO), 5);
        assert_eq!(ws.multiplicity_of(e(1, 0, 0)), 3);
        assert_eq!(ws.multiplicity_of(e(-1, 0, 0)), 3);
        for r in SU3_ROOTS {
            assert_eq!(ws.multiplicity_of(r), 2, "root {r}");
            assert_eq!(ws.multiplicity_of(r + e(1, 0, 0)), 1);
            assert_eq!(ws.multiplicity_of(r + e(-1, 0, 0)), 1);
        }
        assert_eq!(ws.multiplicity_of(e(1, 1, 0)), 1);
        assert!(ws.is_self_dual());
    }

    #[test]
    fn subspace_dimensions() {
        let ws = WeightSystem::qubit_qutrit();
        let dims: Vec<u32> =
            Subspace::ALL.iter().map(|&s| ws.restricted(s).total_multiplicity()).collect();
        assert_eq!(dims, [3, 8, 24]);
        assert_eq!(ws.total_multiplicity() - GROUP_DIMENSION, 24);
    }

    #[test]
    fn power_sums() {
        let ws = WeightSystem::qubit_qutrit();
        let p1 = ws.power_sum(1);
        assert_eq!(p1.sum_coefficients(), BigInt::from(35));
        assert_eq!(p1.constant_term(), BigInt::from(5));
        // one zero weight, x^+-1, six roots and twelve shifted roots
        assert_eq!(p1.num_terms(), 21);
        assert_eq!(ws.power_sum(2), p1.substitute_power(2));
        for k in 1..6 {
            assert_eq!(ws.power_sum(k).sum_coefficients(), BigInt::from(35));
        }
    }

    #[test]
    fn weyl_factor_expansion() {
        let w = weyl_factor();
        assert_eq!(w.constant_term(), BigInt::from(1));
        assert_eq!(w.sum_coefficients(), BigInt::from(0));
        assert_eq!(w.coeff(e(-1, 0, 0)), BigInt::from(-1));
        // 16 signed products, 4 of which cancel in pairs
        assert_eq!(w.num_terms(), 12);
    }
}

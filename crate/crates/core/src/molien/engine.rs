use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::weights::{weyl_factor, Subspace, WeightSystem};
use super::EngineError;
use crate::laurent::{LaurentError, LaurentPoly3, MemoryBudget, Window};

/// Characters `h_0, h_1, ...` of the symmetric powers of a representation,
/// grown one degree at a time by the Newton recurrence
/// `d * h_d = sum_{k=1..d} p_k * h_{d-k}`.
#[derive(Clone, Debug)]
pub struct CharacterCache {
    character: LaurentPoly3,
    power_sums: Vec<LaurentPoly3>,
    chars: Vec<LaurentPoly3>,
}

impl CharacterCache {
    pub fn new(weights: &WeightSystem) -> Self {
        CharacterCache {
            character: weights.character(),
            power_sums: Vec::new(),
            chars: vec![LaurentPoly3::one()],
        }
    }

    /// Highest degree computed so far.
    pub fn degree(&self) -> usize {
        self.chars.len() - 1
    }

    pub fn get(&self, d: usize) -> Option<&LaurentPoly3> {
        self.chars.get(d)
    }

    /// `p_k`, cached.
    pub fn power_sum(&mut self, k: usize) -> &LaurentPoly3 {
        while self.power_sums.len() < k {
            let next = self.power_sums.len() as u32 + 1;
            self.power_sums.push(self.character.substitute_power(next));
        }
        &self.power_sums[k - 1]
    }

    /// `sum_{k=1..d} p_k * h_{d-k}`; requires `h_0 ..= h_{d-1}`.
    pub fn newton_sum(&mut self, d: usize, budget: &MemoryBudget) -> Result<LaurentPoly3, EngineError> {
        assert!(d >= 1 && d <= self.chars.len(), "h_0..h_{{d-1}} must be cached");
        self.power_sum(d);
        let window = (1..=d)
            .filter_map(|k| {
                let (p, h) = (&self.power_sums[k - 1], &self.chars[d - k]);
                Some(p.window()?.minkowski_sum(&h.window()?))
            })
            .reduce(|a, b| a.union(&b));
        let Some(window) = window else {
            return Ok(LaurentPoly3::zero());
        };
        budget.check(&window)?;
        let mut acc = LaurentPoly3::zero();
        acc.widen_to(window);
        for k in 1..=d {
            acc.accumulate_product(&self.power_sums[k - 1], &self.chars[d - k]);
        }
        acc.normalize();
        Ok(acc)
    }

    /// Returns `h_d`, extending the cache as needed.
    pub fn homogeneous_character(
        &mut self,
        d: usize,
        budget: &MemoryBudget,
    ) -> Result<&LaurentPoly3, EngineError> {
        while self.chars.len() <= d {
            let n = self.chars.len();
            let sum = self.newton_sum(n, budget)?;
            let h = sum.div_exact(&BigInt::from(n)).map_err(|e| match e {
                LaurentError::NotDivisible { exponent, .. } => {
                    EngineError::NewtonNotIntegral { degree: n, exponent }
                }
                other => other.into(),
            })?;
            self.chars.push(h);
        }
        Ok(&self.chars[d])
    }
}

/// Exact Molien-Weyl constant-term engine for a compact group with the
/// SU(2) x SU(3) Weyl factor.
#[derive(Clone, Debug)]
pub struct MolienEngine {
    weights: WeightSystem,
    weyl: LaurentPoly3,
    budget: MemoryBudget,
}

impl Default for MolienEngine {
    fn default() -> Self {
        MolienEngine::new(WeightSystem::qubit_qutrit(), MemoryBudget::default())
    }
}

impl MolienEngine {
    pub fn new(weights: WeightSystem, budget: MemoryBudget) -> Self {
        MolienEngine { weights, weyl: weyl_factor(), budget }
    }

    pub fn with_budget(budget: MemoryBudget) -> Self {
        MolienEngine::new(WeightSystem::qubit_qutrit(), budget)
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn budget(&self) -> &MemoryBudget {
        &self.budget
    }

    /// Bytes held by `h_0 ..= h_max` plus one accumulator, assuming every
    /// weight exponent lies in `{-1, 0, 1}`.
    pub fn estimated_bytes(max_degree: usize) -> u64 {
        let cube = |j: usize| Window::symmetric(j as i32).len();
        let stored: u64 = (0..=max_degree).map(cube).sum();
        MemoryBudget::estimate(stored + cube(max_degree))
    }

    /// Largest degree whose estimated footprint fits `budget`.
    pub fn feasible_degree(budget: &MemoryBudget) -> usize {
        let mut d = 0;
        while Self::estimated_bytes(d + 1) <= budget.limit() && d < 10_000 {
            d += 1;
        }
        d
    }

    fn check_feasible(&self, max_degree: usize) -> Result<(), EngineError> {
        let estimate = Self::estimated_bytes(max_degree);
        if estimate > self.budget.limit() {
            return Err(EngineError::DegreeInfeasible {
                max_degree,
                estimate,
                budget: self.budget.limit(),
                feasible: Self::feasible_degree(&self.budget),
            });
        }
        Ok(())
    }

    /// `[dim P_0^G, ..., dim P_D^G]`, each the constant term of
    /// `weyl * h_d`.
    pub fn poincare_coefficients(&self, max_degree: usize) -> Result<Vec<BigInt>, EngineError> {
        self.check_feasible(max_degree)?;
        let mut cache = CharacterCache::new(&self.weights);
        let mut out = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let h = cache.homogeneous_character(d, &self.budget)?;
            out.push(LaurentPoly3::constant_term_of_product(&self.weyl, h));
        }
        Ok(out)
    }

    /// Dimensions of the invariants of each multidegree `(d1, d2, d3)` with
    /// `d1 + d2 + d3 <= max_total_degree`, graded by the V1, V2, V3
    /// coordinates.
    pub fn poincare_multigraded(&self, max_total_degree: usize) -> Result<MultigradedTable, EngineError> {
        self.check_feasible(max_total_degree)?;
        let mut caches: Vec<CharacterCache> = Subspace::ALL
            .iter()
            .map(|&s| CharacterCache::new(&self.weights.restricted(s)))
            .collect();
        for c in &mut caches {
            c.homogeneous_character(max_total_degree, &self.budget)?;
        }
        let [c1, c2, c3] = [&caches[0], &caches[1], &caches[2]];
        let mut entries = BTreeMap::new();
        for d1 in 0..=max_total_degree {
            let weighted = self.weyl.checked_mul(c1.get(d1).unwrap(), &self.budget)?;
            for d2 in 0..=max_total_degree - d1 {
                let partial = weighted.checked_mul(c2.get(d2).unwrap(), &self.budget)?;
                for d3 in 0..=max_total_degree - d1 - d2 {
                    let ct = LaurentPoly3::constant_term_of_product(&partial, c3.get(d3).unwrap());
                    entries.insert(Multidegree(d1 as u32, d2 as u32, d3 as u32), ct);
                }
            }
        }
        Ok(MultigradedTable { max_total_degree, entries })
    }
}

/// Degrees in the coordinates of V1, V2, V3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Multidegree(pub u32, pub u32, pub u32);

impl Multidegree {
    pub fn total(&self) -> u32 {
        self.0 + self.1 + self.2
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedTable {
    pub max_total_degree: usize,
    pub entries: BTreeMap<Multidegree, BigInt>,
}

impl MultigradedTable {
    pub fn get(&self, d: Multidegree) -> BigInt {
        self.entries.get(&d).cloned().unwrap_or_default()
    }

    /// Sum of the entries with total degree `d`.
    pub fn row_sum(&self, d: usize) -> BigInt {
        self.entries
            .iter()
            .filter(|(k, _)| k.total() as usize == d)
            .fold(BigInt::zero(), |acc, (_, v)| acc + v)
    }

    /// First total degree whose row sum disagrees with `single`.
    pub fn first_row_mismatch(&self, single: &[BigInt]) -> Option<usize> {
        (0..=self.max_total_degree.min(single.len().saturating_sub(1)))
            .find(|&d| self.row_sum(d) != single[d])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn low_degree_coefficients() {
        let engine = MolienEngine::default();
        assert_eq!(engine.poincare_coefficients(4).unwrap(), ints(&[1, 0, 3, 4, 15]));
        assert_eq!(engine.poincare_coefficients(0).unwrap(), ints(&[1]));
    }

    #[test]
    fn low_characters() {
        let ws = WeightSystem::qubit_qutrit();
        let mut cache = CharacterCache::new(&ws);
        let b = MemoryBudget::default();
        assert_eq!(cache.homogeneous_character(0, &b).unwrap(), &LaurentPoly3::one());
        assert_eq!(cache.homogeneous_character(1, &b).unwrap(), &ws.power_sum(1));
        assert_eq!(cache.homogeneous_character(2, &b).unwrap().sum_coefficients(), BigInt::from(630));
        // symmetric powers of a self-dual module are self-dual
        for d in 0..=5 {
            let h = cache.homogeneous_character(d, &b).unwrap();
            assert_eq!(h, &h.reversed());
        }
    }

    #[test]
    fn newton_identity_holds_before_division() {
        let ws = WeightSystem::qubit_qutrit();
        let mut cache = CharacterCache::new(&ws);
        let b = MemoryBudget::default();
        cache.homogeneous_character(6, &b).unwrap();
        for d in 1..=6 {
            let sum = cache.newton_sum(d, &b).unwrap();
            let dh = cache.get(d).unwrap().scalar_mul(&BigInt::from(d));
            assert!((&dh - &sum).is_zero(), "degree {d}");
        }
    }

    #[test]
    fn non_integral_newton_step_is_reported() {
        use crate::laurent::ExponentTriple;
        use crate::molien::weights::WeightEntry;
        let mut cache = CharacterCache::new(&WeightSystem::new(vec![WeightEntry {
            weight: ExponentTriple::new(1, 0, 0),
            multiplicity: 1,
            subspace: Subspace::V1,
        }]));
        cache.power_sum(1);
        // corrupt p_2 (should be x^2): 2 h_2 = x^2 + 1 is then not divisible by 2
        cache.power_sums.push(LaurentPoly3::one());
        let err = cache.homogeneous_character(2, &MemoryBudget::default()).unwrap_err();
        assert!(matches!(err, EngineError::NewtonNotIntegral { degree: 2, .. }), "{err:?}");
    }

    #[test]
    fn budget_refusal_has_advice() {
        let engine = MolienEngine::with_budget(MemoryBudget::bytes(1 << 20));
        match engine.poincare_coefficients(30).unwrap_err() {
            EngineError::DegreeInfeasible { feasible, .. } => {
                assert!(feasible < 30);
                assert!(MolienEngine::estimated_bytes(feasible) <= 1 << 20);
                assert!(engine.poincare_coefficients(feasible).is_ok());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn multigraded_quadratics() {
        let table = MolienEngine::default().poincare_multigraded(3).unwrap();
        assert_eq!(table.get(Multidegree(0, 0, 0)), BigInt::from(1));
        for d in [Multidegree(2, 0, 0), Multidegree(0, 2, 0), Multidegree(0, 0, 2)] {
            assert_eq!(table.get(d), BigInt::from(1), "{d}");
        }
        for d in [Multidegree(1, 1, 0), Multidegree(1, 0, 1), Multidegree(0, 1, 1)] {
            assert_eq!(table.get(d), BigInt::from(0), "{d}");
        }
        assert_eq!(table.row_sum(3), BigInt::from(4));
        assert_eq!(table.get(Multidegree(1, 1, 1)), BigInt::from(1));
    }
}

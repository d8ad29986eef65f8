//! Linear independence of the degree-2 and degree-3 invariants, compared
//! with the series coefficients at t^2 and t^3.

use qq_invariants::invariants::{independence_rank, invariants_of_degree};
use qq_invariants::molien::MolienEngine;
use qq_invariants::states::Sampler;

fn main() {
    let mut sampler = Sampler::new(31);
    let states: Vec<_> = (0..10).map(|_| sampler.rational_state()).collect();
    let series = MolienEngine::default().poincare_coefficients(3).unwrap();
    for degree in [2u32, 3] {
        let names: Vec<String> = invariants_of_degree(degree).iter().map(|j| format!("I{}", j + 1)).collect();
        let rank = independence_rank(&states, degree).unwrap();
        println!("degree {degree}: {} has rank {rank}, series gives {}", names.join(", "), series[degree as usize]);
    }
}

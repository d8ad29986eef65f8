//! The seven low-degree invariants evaluated two ways on seeded states.

use qq_invariants::invariants::{eval_basis_form, eval_matrix_form, MULTIDEGREES};
use qq_invariants::states::{decompose_state, Sampler};

fn main() {
    let seed: u64 = std::env::args().nth(1).map_or(0, |s| s.parse().expect("seed"));
    let mut sampler = Sampler::new(seed);
    for n in 0..3 {
        let rho = sampler.rational_state();
        let dec = decompose_state(&rho).unwrap();
        let a = eval_matrix_form(&dec).unwrap();
        let b = eval_basis_form(&dec).unwrap();
        println!("state {n} (forms agree: {})", a == b);
        for (j, v) in a.values.iter().enumerate() {
            println!("  I{} {} = {v}", j + 1, MULTIDEGREES[j]);
        }
    }
}

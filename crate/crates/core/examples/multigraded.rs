//! Dimensions by (V1, V2, V3) degree. These are engine output only; there
//! are no reference values to compare them with.

use num_traits::Zero;
use qq_invariants::molien::{MolienEngine, Multidegree};

fn main() {
    let max_total: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("degree"));
    let engine = MolienEngine::default();
    let table = engine.poincare_multigraded(max_total).unwrap();
    let single = engine.poincare_coefficients(max_total).unwrap();
    for d in 0..=max_total {
        let parts: Vec<String> = table
            .entries
            .iter()
            .filter(|(k, v)| k.total() as usize == d && !v.is_zero())
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        println!("degree {d} ({} = {}): {}", table.row_sum(d), single[d], parts.join(" "));
    }
    // the mixed cubic
    println!("dim (1,1,1) = {}", table.get(Multidegree(1, 1, 1)));
}

//! Splits a state into its local and correlation parts and reassembles it.
//!
//!     cargo run --example decompose_state -- fixtures/states/product_diagonal.json

use qq_invariants::states::json::{parse_state, StateMatrix};
use qq_invariants::states::{decompose_state, gellmann_coordinates, ExactMatrix, Sampler};

fn show(label: &str, m: &ExactMatrix) {
    println!("{label}:");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:>12}", m.get(i, j).to_string())).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() {
    let rho = match std::env::args().nth(1) {
        Some(path) => match parse_state(&std::fs::read_to_string(path).unwrap()).unwrap() {
            StateMatrix::Exact(m) => m,
            StateMatrix::Float(_) => panic!("this example wants an exact state"),
        },
        None => Sampler::new(1).rational_state(),
    };
    let d = decompose_state(&rho).unwrap();
    show("X", &d.x);
    show("Y", &d.y);
    for (k, y) in d.yk.iter().enumerate() {
        show(&format!("Y_{}", k + 1), y);
    }
    println!("Y in the Gell-Mann basis: {:?}", gellmann_coordinates(&d.y.to_float()));
    println!("recomposes exactly: {}", d.recompose() == rho);
}

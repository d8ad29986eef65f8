//! Floating torus quadrature next to the exact constant-term values.

use qq_invariants::molien::{default_grid_size, quadrature_coefficients, MolienEngine};

fn main() {
    let max_degree: usize = std::env::args().nth(1).map_or(8, |s| s.parse().expect("degree"));
    let engine = MolienEngine::default();
    let exact = engine.poincare_coefficients(max_degree).unwrap();
    let grid = default_grid_size(max_degree);
    let q = quadrature_coefficients(engine.weights(), max_degree, grid).unwrap();
    let residuals = q.rounding_residuals();
    println!("grid {grid}^3");
    println!("{:>3} {:>10} {:>22} {:>10} {:>10}", "d", "exact", "quadrature", "residual", "imag");
    for d in 0..=max_degree {
        println!(
            "{d:>3} {:>10} {:>22.12} {:>10.1e} {:>10.1e}",
            exact[d], q.coefficients[d], residuals[d], q.imaginary[d]
        );
    }
}

//! Checks computed coefficients against the closed-form rational function
//! and its transformed numerator.
//!
//!     cargo run --release --example verify_theorem -- 19

use qq_invariants::molien::{verify_theorem, Golden, MolienEngine};

fn main() {
    let max_degree: usize = std::env::args().nth(1).map_or(19, |s| s.parse().expect("degree"));
    let golden = Golden::published();
    let coeffs = MolienEngine::default().poincare_coefficients(max_degree).expect("within memory budget");
    let report = verify_theorem(&coeffs, &golden);
    for c in &report.checks {
        println!("{:5} {:42} {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    println!("N   = {}", golden.numerator);
    println!("N*  = {}", golden.numerator_star);
    println!("parameter degrees {:?}", report.hsop_degrees);
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}

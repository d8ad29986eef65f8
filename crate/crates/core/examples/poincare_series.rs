//! Exact Poincare coefficients by constant-term extraction.
//!
//!     cargo run --release --example poincare_series -- 19

use std::time::Instant;

use qq_invariants::molien::MolienEngine;

fn main() {
    let max_degree: usize = std::env::args().nth(1).map_or(14, |s| s.parse().expect("degree"));
    let engine = MolienEngine::default();
    let start = Instant::now();
    let coeffs = engine.poincare_coefficients(max_degree).expect("within memory budget");
    for (d, c) in coeffs.iter().enumerate() {
        println!("t^{d:<3} {c}");
    }
    eprintln!("{} coefficients in {:.2?}", coeffs.len(), start.elapsed());
    if let Some(line) = std::fs::read_to_string("/proc/self/status")
        .ok()
        .and_then(|s| s.lines().find(|l| l.starts_with("VmHWM")).map(str::to_owned))
    {
        eprintln!("{line}");
    }
}

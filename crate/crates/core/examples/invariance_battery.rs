//! Invariants before and after random local unitaries.
//!
//!     cargo run --release --example invariance_battery -- 1000 7

use qq_invariants::invariants::invariance_battery;

fn main() {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().map_or(100, |s| s.parse().expect("trials"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));
    let r = invariance_battery(trials, seed, 1e-9).unwrap();
    for (j, d) in r.max_deviation.iter().enumerate() {
        println!("I{}  {d:.3e}", j + 1);
    }
    println!("{} trials, seed {}, worst trial {}, passed {}", r.trials, r.seed, r.worst_trial, r.passed);
}

//! Seeded randomized trials over every property suite.
//!
//! Run with `cargo run --release --example fuzz -- 200 7` (trials, seed).

use qhw::trials;
use qhw::Tolerances;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    for r in trials::all(n, seed, &Tolerances::default()) {
        println!("{:<34} {:>4}/{:<4} {} {:.3e}", r.name, r.passed, r.trials, r.metric, r.extreme);
    }
}

//! Runs every seeded property suite and prints one report per suite.
//!
//! `cargo run --example multiplicativity_check -- 1000 7`

use torsionlab::checks::{run_suite, Suite};

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    for suite in Suite::ALL {
        let start = std::time::Instant::now();
        let report = run_suite(suite, trials, seed);
        println!("{report} [{:.2}s]", start.elapsed().as_secs_f64());
    }
}

//! Acceptance suite: one PASS or FAIL line per criterion.

use ore_elim_cli::verify::{run_all, DEFAULT_SEED};

fn main() {
    let seed = std::env::var("ORE_ELIM_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let outcomes = run_all(seed, &[]);
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} of {} passed (seed {seed})",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

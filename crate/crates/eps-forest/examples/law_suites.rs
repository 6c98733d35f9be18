//! Running the seeded randomized law suites programmatically — the same
//! machinery the `eps check` subcommand exposes.
//!
//! Run with: cargo run --example law_suites

use eps_forest::rat::Rat;
use eps_forest::suites::{run, InstanceKind, Suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { samples: 50, ..SuiteConfig::default() };

    // Everything against the forest instance.
    println!("instance forest:");
    let reports = run(Suite::All, &InstanceKind::Forest, &cfg);
    for r in &reports {
        println!("  {r}");
    }
    assert!(reports.iter().all(|r| r.ok()));

    // A weighted instance: the antipode suite refuses (the exponential series
    // needs weight 0), everything else passes. A refusal is a documented
    // precondition failure, not a counterexample.
    println!("\ninstance poly:3/2:");
    for r in run(Suite::All, &InstanceKind::Poly(Rat::new(3, 2)), &cfg) {
        println!("  {r}");
        assert!(r.ok() || r.refused());
    }

    // A single suite against divided differences, with a different seed: the
    // reports are deterministic per (seed, samples, max_vertices).
    let cfg2 = SuiteConfig { seed: 42, samples: 200, ..SuiteConfig::default() };
    println!("\ninstance divdiff, seed 42:");
    for r in run(Suite::Prelie, &InstanceKind::DivDiff, &cfg2) {
        println!("  {r}");
        assert!(r.ok());
    }
}

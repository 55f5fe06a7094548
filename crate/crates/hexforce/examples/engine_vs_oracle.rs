//! Cross-check the recurrence engine against brute force.
//!
//! The engine computes forcing polynomials from the row parameters alone;
//! the oracle builds the labeled graph, enumerates every perfect
//! matching, and finds each forcing number by branch-and-bound search
//! over alternating cycles. This example sweeps every monotonic system
//! and every system with one turning within small bounds and demands
//! exact agreement, the same check `hexforce verify` runs.
//!
//! Run with: cargo run --release --example engine_vs_oracle

use hexforce::recurrence::Engine;
use hexforce::sweep::{all_monotonic_specs, all_turning_specs};
use hexforce::{oracle, AnySpec, HexGraph};

fn main() {
    let mut engine = Engine::new();

    let monotonic: Vec<AnySpec> =
        all_monotonic_specs(3, 3).into_iter().map(AnySpec::Monotonic).collect();
    let turning: Vec<AnySpec> =
        all_turning_specs(3, 2).into_iter().map(AnySpec::Turning).collect();

    for (name, specs) in [("monotonic", monotonic), ("one turning", turning)] {
        let mut largest = (0usize, String::new());
        for spec in &specs {
            let fast = engine.forcing_polynomial(spec);
            let graph = HexGraph::build(spec);
            let slow = oracle::forcing_polynomial(&graph, 100_000).unwrap();
            assert_eq!(fast, slow, "engines disagree on {spec}");
            let matchings = usize::try_from(fast.eval_at_one()).unwrap();
            if matchings > largest.0 {
                largest = (matchings, format!("{spec}: {fast}"));
            }
        }
        println!("{} {name} systems agree with brute force", specs.len());
        println!("  busiest: {} with {} matchings", largest.1, largest.0);
    }
}

//! Compute forcing polynomials of constructable hexagonal systems.
//!
//! The forcing polynomial counts the perfect matchings of a system by
//! their forcing number: the coefficient of `x^s` is the number of
//! matchings whose smallest forcing set has `s` edges. This example
//! builds a few systems from their row parameters and prints their
//! polynomials, along with the closed forms known for three classic
//! families.
//!
//! Run with: cargo run --example forcing_polynomial

use hexforce::recurrence::{
    self, linear_chain_spec, parallelogram_spec, zigzag_spec, Engine,
};
use hexforce::{AnySpec, ChsSpec};

fn main() {
    // Row i of CHS(k_1,..,k_m; h_1,..,h_m) holds hexagons in columns
    // h_i..=k_i; both sequences must be non-decreasing.
    let five_row = ChsSpec::from_params(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]).unwrap();
    let poly = recurrence::forcing_polynomial(&AnySpec::Monotonic(five_row.clone()));
    println!("{five_row}");
    println!("  forcing polynomial: {poly}");
    println!("  perfect matchings:  {}", poly.eval_at_one());
    println!("  spectrum:           {:?}", poly.support());
    println!();

    // One engine instance memoizes subproblems, so related systems share
    // most of the work.
    let mut engine = Engine::new();

    println!("linear chains, one row of k hexagons, polynomial (k+1)x:");
    for k in 1..=6 {
        let spec = AnySpec::Monotonic(linear_chain_spec(k));
        println!("  k={k}: {}", engine.forcing_polynomial(&spec));
    }
    println!();

    println!("zigzag chains, n hexagons attached in alternating directions:");
    for n in 2..=8 {
        let spec = AnySpec::Monotonic(zigzag_spec(n));
        println!("  n={n}: {}", engine.forcing_polynomial(&spec));
    }
    println!();

    println!("benzenoid parallelograms M(k,m), k columns by m rows:");
    for m in 1..=4 {
        let spec = AnySpec::Monotonic(parallelogram_spec(3, m));
        println!("  M(3,{m}): {}", engine.forcing_polynomial(&spec));
    }
}

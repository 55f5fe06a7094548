//! Forcing spectra: which forcing numbers actually occur.
//!
//! The spectrum of a system is the set of exponents appearing in its
//! forcing polynomial. For truncated parallelograms (monotonic systems
//! with every row starting at column 1) the spectrum is a full interval
//! {1,..,degree}. It is not an interval in general: gluing a single wide
//! row to a column of unit rows yields spectrum {1,3}, skipping 2.
//!
//! Run with: cargo run --example forcing_spectra

use hexforce::recurrence::{self, truncated_parallelogram_spec};
use hexforce::{AnySpec, ChsSpec, TurningChsSpec};

fn main() {
    println!("truncated parallelograms have gap-free spectra:");
    for ks in [vec![2, 2], vec![3, 4], vec![2, 3, 3], vec![1, 2, 4, 4]] {
        let spec = AnySpec::Monotonic(truncated_parallelogram_spec(&ks).unwrap());
        let poly = recurrence::forcing_polynomial(&spec);
        let support = poly.support();
        let degree = poly.degree().unwrap();
        assert_eq!(support, (1..=degree).collect::<Vec<_>>());
        println!("  {spec}: {poly}  spectrum {support:?}");
    }
    println!();

    println!("a column of unit rows under one wide row skips forcing number 2:");
    for k in 2..=4i64 {
        // Upper half: m-1 unit rows over one row of k hexagons; the lower
        // half mirrors it. Every matching is forced by 1 or by 3 edges.
        let column = |rows: usize| {
            let mut ks = vec![1; rows - 1];
            ks.push(k);
            ChsSpec::from_params(&ks, &vec![1; rows]).unwrap()
        };
        let spec =
            AnySpec::Turning(TurningChsSpec::new(column(3), column(3)).unwrap());
        let poly = recurrence::forcing_polynomial(&spec);
        assert_eq!(poly.support(), [1, 3]);
        println!("  {spec}: {poly}  spectrum {:?}", poly.support());
    }
}

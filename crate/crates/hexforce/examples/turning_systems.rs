//! Systems with one turning: two monotonic halves pasted along a row.
//!
//! Gluing a second monotonic half under the first, mirror-flipped, welds
//! the two last rows into a single turning row. The recurrence engine
//! splits every matching at that row; how the halves couple depends on
//! whether the rows next to the corner leave slack. This example builds
//! both shapes, classifies them, and checks the engine against brute
//! force.
//!
//! Run with: cargo run --example turning_systems

use hexforce::oracle;
use hexforce::recurrence::{self, turning_shape, TurningShape};
use hexforce::{AnySpec, ChsSpec, HexGraph, TurningChsSpec};

fn show(spec: TurningChsSpec) {
    let shape = match turning_shape(&spec) {
        TurningShape::SlackCorner => "slack corner".to_string(),
        TurningShape::TightCorner { zigzag_hexagons } => {
            format!("tight corner, zigzag walk of {zigzag_hexagons} hexagons")
        }
    };
    let any = AnySpec::Turning(spec);
    let fast = recurrence::forcing_polynomial(&any);
    let slow = oracle::forcing_polynomial(&HexGraph::build(&any), 20_000).unwrap();
    assert_eq!(fast, slow, "engine must agree with brute force");
    println!("{any}");
    println!("  shape: {shape}");
    println!("  forcing polynomial: {fast} (matches brute force)");
    println!();
}

fn main() {
    let half = |ks: &[i64], hs: &[i64]| ChsSpec::from_params(ks, hs).unwrap();

    // Tight corner: both rows next to the turning row reach the corner
    // column, so the halves couple along a zigzag walk.
    show(TurningChsSpec::new(half(&[1, 1], &[1, 1]), half(&[1, 1], &[1, 1])).unwrap());
    show(TurningChsSpec::new(half(&[2, 2], &[1, 1]), half(&[2, 2], &[1, 1])).unwrap());

    // Slack corner: the corner hexagon sticks out past its neighbors and
    // the halves become independent once the turning row is fixed.
    show(TurningChsSpec::new(half(&[1, 2], &[1, 2]), half(&[1, 2], &[1, 2])).unwrap());
    show(
        TurningChsSpec::new(half(&[3, 3, 5, 5], &[1, 2, 2, 4]), half(&[1, 2, 3], &[1, 1, 2]))
            .unwrap(),
    );
}

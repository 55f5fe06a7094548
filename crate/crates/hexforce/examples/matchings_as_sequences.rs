//! Perfect matchings as non-decreasing column sequences.
//!
//! Every perfect matching of a constructable hexagonal system contains
//! exactly one vertical edge per row, and recording its column in each
//! row gives a non-decreasing sequence; the map is a bijection. This
//! example enumerates a small system both ways, counts matchings without
//! enumerating, and round-trips a matching of a system with one turning.
//!
//! Run with: cargo run --example matchings_as_sequences

use hexforce::matching::{
    count_matchings, enumerate_sequences, matching_to_sequence, sequence_to_matching,
};
use hexforce::{AnySpec, ChsSpec, HexGraph, MatchingSequence, TurningChsSpec};

fn main() {
    let spec = AnySpec::Monotonic(ChsSpec::from_params(&[2, 2], &[1, 1]).unwrap());
    let graph = HexGraph::build(&spec);

    println!("{spec}: {} matchings", count_matchings(&spec));
    for seq in enumerate_sequences(&spec, 1_000).unwrap() {
        let matching = sequence_to_matching(&graph, &seq).unwrap();
        let verticals: Vec<String> = matching
            .labels(&graph)
            .into_iter()
            .filter(|l| l.to_string().starts_with('e'))
            .map(|l| l.to_string())
            .collect();
        println!("  {seq}  verticals {}", verticals.join(" "));
        // The bijection inverts exactly.
        assert_eq!(matching_to_sequence(&graph, &matching).unwrap(), seq);
    }
    println!();

    // In a system with one turning the two halves share their last row,
    // so the two sub-sequences are coupled at that row: the last vertical
    // edge has one position but two names.
    let upper = ChsSpec::from_params(&[3, 3, 5, 5], &[1, 2, 2, 4]).unwrap();
    let lower = ChsSpec::from_params(&[1, 2, 3], &[1, 1, 2]).unwrap();
    let spec = AnySpec::Turning(TurningChsSpec::new(upper, lower).unwrap());
    let graph = HexGraph::build(&spec);

    println!("{spec}: {} matchings", count_matchings(&spec));
    let seq: MatchingSequence = "(0,1,1,5|0,0,3)".parse().unwrap();
    seq.validate(&spec).unwrap();
    let matching = sequence_to_matching(&graph, &seq).unwrap();
    println!("  {seq} covers {} edges", matching.len());
    assert_eq!(matching_to_sequence(&graph, &matching).unwrap(), seq);
    println!("  round trip ok");
}

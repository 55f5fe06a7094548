//! The labeled graph behind a system: vertices, edges, hexagons.
//!
//! Each hexagon C_{i,j} sits in row i, column j, and its boundary uses
//! six named edges: verticals e_{i,j} and e_{i,j-1}, obliques l_{i,j},
//! r_{i,j}, l_{i+1,j-1}, r_{i+1,j}. Edges shared between neighboring
//! hexagons carry one canonical name, and in a system with one turning
//! the shared row's edges keep their upper-half names. The graph also
//! exposes coordinates on the integer lattice and the bipartition.
//!
//! Run with: cargo run --example labeled_graph

use hexforce::{AnySpec, ChsSpec, EdgeKind, EdgeLabel, Half, HexGraph, HexId};

fn main() {
    let spec = AnySpec::Monotonic(ChsSpec::from_params(&[2, 2], &[1, 2]).unwrap());
    let graph = HexGraph::build(&spec);

    println!(
        "{spec}: {} vertices, {} edges, {} hexagons",
        graph.vertex_count(),
        graph.edge_count(),
        graph.hexagon_count()
    );
    println!();

    for hex in graph.hexagon_ids() {
        let boundary: Vec<String> =
            graph.hexagon_boundary(hex).unwrap().iter().map(|e| e.to_string()).collect();
        println!("{hex}: {}", boundary.join(" "));
    }
    println!();

    // Look one edge up by name. The boundary above lists e_{1,1} for both
    // hexagons of row 1; it is stored once.
    let label = EdgeLabel::upper(EdgeKind::Vertical, 1, 1);
    let id = graph.edge_by_label(&label).unwrap();
    let edge = graph.edge(id);
    let (a, b) = (graph.vertex(edge.u), graph.vertex(edge.v));
    println!("{label} joins ({},{}) and ({},{})", a.x, a.y, b.x, b.y);

    // Hexagon names are canonical too; a bad name is rejected.
    let missing = HexId { half: Half::Upper, row: 9, col: 9 };
    assert!(graph.hexagon_edges(missing).is_err());
}

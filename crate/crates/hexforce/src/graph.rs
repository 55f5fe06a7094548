//! The hexagonal system as a labeled plane graph.
//!
//! # Embedding
//!
//! Vertices sit on an integer lattice. Hexagon `C_{i,j}` of the upper half
//! is drawn with its three top corners at `y = 2i` and its three bottom
//! corners at `y = 2i + 2`, centered horizontally at `x = 2j + i`; columns
//! therefore grow leftward in the usual drawing, matching the row
//! parameters. The lower half of a turning system is the same drawing
//! mirrored, `(x, y) -> (x + alpha, beta - y)` with `alpha = 2*delta + m -
//! m'` and `beta = 2m + 2m' + 2`, which pastes its last row onto the upper
//! half's last row exactly.
//!
//! # Edge names
//!
//! Each hexagon `C_{i,j}` reads its boundary as `(e_{i,j}, l_{i,j},
//! r_{i,j}, e_{i,j-1}, l_{i+1,j-1}, r_{i+1,j})`: `e` is a vertical edge,
//! `l` and `r` the oblique edges left and right of the top corner. Shared
//! edges receive the same name from both sides. On the turning row the
//! primed (lower-half) names alias upper names; the stored, canonical
//! label is always the upper one, and lookups by a primed alias resolve to
//! it.

use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Error;
use crate::spec::{AnySpec, ChsSpec, TurningChsSpec};

/// A lattice point. `y` is always even; two rows of hexagons share the
/// vertices on the seam line between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// `e_{i,j}`: the vertical edge between hexagons `C_{i,j}` and
    /// `C_{i,j+1}`.
    Vertical,
    /// `l_{i,j}`: the oblique edge falling leftward from the top corner.
    LeftOblique,
    /// `r_{i,j}`: the oblique edge falling rightward from the top corner.
    RightOblique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel {
    pub half: Half,
    pub kind: EdgeKind,
    pub row: i64,
    pub col: i64,
}

impl EdgeLabel {
    pub fn upper(kind: EdgeKind, row: i64, col: i64) -> Self {
        EdgeLabel { half: Half::Upper, kind, row, col }
    }

    pub fn lower(kind: EdgeKind, row: i64, col: i64) -> Self {
        EdgeLabel { half: Half::Lower, kind, row, col }
    }
}

/// A hexagon name: `C_{i,j}` in the upper half, `C'_{t,j}` in the lower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexId {
    pub half: Half,
    pub row: i64,
    pub col: i64,
}

impl fmt::Display for HexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half {
            Half::Upper => write!(f, "C_{{{},{}}}", self.row, self.col),
            Half::Lower => write!(f, "C'_{{{},{}}}", self.row, self.col),
        }
    }
}

/// Mirror constants of the lower half; absent for monotonic systems.
#[derive(Debug, Clone, Copy)]
struct Mirror {
    alpha: i64,
    beta: i64,
}

#[derive(Debug, Clone, Copy)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: EdgeLabel,
}

/// An immutable hexagonal system graph with label and coordinate indices.
#[derive(Debug, Clone)]
pub struct HexGraph {
    spec: AnySpec,
    mirror: Option<Mirror>,
    verts: Vec<Vertex>,
    vert_index: HashMap<Vertex, usize>,
    edges: Vec<Edge>,
    pair_index: HashMap<(usize, usize), usize>,
    label_index: BTreeMap<EdgeLabel, usize>,
    adj: Vec<Vec<(usize, usize)>>,
    hexes: Vec<(HexId, [usize; 6])>,
    hex_index: HashMap<HexId, usize>,
}

fn label_endpoints(label: &EdgeLabel, mirror: Option<Mirror>) -> Option<(Vertex, Vertex)> {
    let (row, col) = (label.row, label.col);
    match label.half {
        Half::Upper => Some(match label.kind {
            EdgeKind::Vertical => {
                let x = 2 * col + row + 1;
                (Vertex { x, y: 2 * row }, Vertex { x, y: 2 * row + 2 })
            }
            EdgeKind::LeftOblique => {
                let y = 2 * row;
                (Vertex { x: 2 * col + row, y }, Vertex { x: 2 * col + row + 1, y })
            }
            EdgeKind::RightOblique => {
                let y = 2 * row;
                (Vertex { x: 2 * col + row - 1, y }, Vertex { x: 2 * col + row, y })
            }
        }),
        Half::Lower => {
            let Mirror { alpha, beta } = mirror?;
            Some(match label.kind {
                EdgeKind::Vertical => {
                    let x = 2 * col + row + 1 + alpha;
                    (Vertex { x, y: beta - 2 * row - 2 }, Vertex { x, y: beta - 2 * row })
                }
                EdgeKind::LeftOblique => {
                    let y = beta - 2 * row;
                    (Vertex { x: 2 * col + row + alpha, y }, Vertex { x: 2 * col + row + alpha + 1, y })
                }
                EdgeKind::RightOblique => {
                    let y = beta - 2 * row;
                    (Vertex { x: 2 * col + row + alpha - 1, y }, Vertex { x: 2 * col + row + alpha, y })
                }
            })
        }
    }
}

/// Upper name of a lower-half label sitting on the turning row. The fold
/// reverses orientation, so left and right obliques swap.
fn seam_alias(label: &EdgeLabel, m: i64, delta: i64) -> EdgeLabel {
    match label.kind {
        EdgeKind::Vertical => EdgeLabel::upper(EdgeKind::Vertical, m, label.col + delta),
        EdgeKind::LeftOblique => {
            EdgeLabel::upper(EdgeKind::RightOblique, m + 1, label.col + delta)
        }
        EdgeKind::RightOblique => {
            EdgeLabel::upper(EdgeKind::LeftOblique, m + 1, label.col + delta - 1)
        }
    }
}

/// The six boundary edge names of a hexagon, in cyclic order.
fn boundary_labels(half: Half, row: i64, col: i64) -> [EdgeLabel; 6] {
    let lab = |kind, r, c| EdgeLabel { half, kind, row: r, col: c };
    [
        lab(EdgeKind::Vertical, row, col),
        lab(EdgeKind::LeftOblique, row, col),
        lab(EdgeKind::RightOblique, row, col),
        lab(EdgeKind::Vertical, row, col - 1),
        lab(EdgeKind::LeftOblique, row + 1, col - 1),
        lab(EdgeKind::RightOblique, row + 1, col),
    ]
}

impl HexGraph {
    pub fn build(spec: &AnySpec) -> Self {
        match spec {
            AnySpec::Monotonic(s) => Self::assemble(spec.clone(), s, None),
            AnySpec::Turning(t) => {
                let m = t.upper().row_count() as i64;
                let mp = t.lower().row_count() as i64;
                let mirror = Mirror {
                    alpha: 2 * t.delta() + m - mp,
                    beta: 2 * m + 2 * mp + 2,
                };
                Self::assemble(spec.clone(), t.upper(), Some((mirror, t.lower())))
            }
        }
    }

    pub fn build_monotonic(spec: &ChsSpec) -> Self {
        Self::build(&AnySpec::Monotonic(spec.clone()))
    }

    pub fn build_turning(spec: &TurningChsSpec) -> Self {
        Self::build(&AnySpec::Turning(spec.clone()))
    }

    fn assemble(spec: AnySpec, upper: &ChsSpec, lower: Option<(Mirror, &ChsSpec)>) -> Self {
        let mirror = lower.map(|(mi, _)| mi);
        let seam = match &spec {
            AnySpec::Turning(t) => Some((
                t.upper().row_count() as i64,
                t.lower().row_count() as i64,
                t.delta(),
            )),
            AnySpec::Monotonic(_) => None,
        };
        // Edges are stored under their canonical names: turning-row labels
        // from the lower half are rewritten to the matching upper name.
        let mut edge_map: BTreeMap<(Vertex, Vertex), EdgeLabel> = BTreeMap::new();
        let mut hex_list: Vec<(HexId, [(Vertex, Vertex); 6])> = Vec::new();
        let mut push_hexagon = |half: Half, row: i64, col: i64| {
            let labels = boundary_labels(half, row, col);
            let mut pairs = [(Vertex { x: 0, y: 0 }, Vertex { x: 0, y: 0 }); 6];
            for (slot, label) in pairs.iter_mut().zip(labels) {
                let label = match seam {
                    Some((m, mp, delta)) if label.half == Half::Lower && label.row == mp => {
                        seam_alias(&label, m, delta)
                    }
                    _ => label,
                };
                let (a, b) = label_endpoints(&label, mirror).expect("in-range label");
                let pair = if a <= b { (a, b) } else { (b, a) };
                edge_map.entry(pair).or_insert(label);
                *slot = pair;
            }
            hex_list.push((HexId { half, row, col }, pairs));
        };
        for (idx, r) in upper.rows().iter().enumerate() {
            for col in r.h..=r.k {
                push_hexagon(Half::Upper, (idx + 1) as i64, col);
            }
        }
        if let Some((_, lo)) = lower {
            // All but the last lower row; the last one is the turning row.
            for (idx, r) in lo.rows()[..lo.row_count() - 1].iter().enumerate() {
                for col in r.h..=r.k {
                    push_hexagon(Half::Lower, (idx + 1) as i64, col);
                }
            }
        }

        let verts: Vec<Vertex> = edge_map
            .keys()
            .flat_map(|&(a, b)| [a, b])
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let vert_index: HashMap<Vertex, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut edges = Vec::with_capacity(edge_map.len());
        let mut pair_index = HashMap::with_capacity(edge_map.len());
        let mut label_index = BTreeMap::new();
        let mut adj = vec![Vec::new(); verts.len()];
        for (&(a, b), &label) in &edge_map {
            let (u, v) = (vert_index[&a], vert_index[&b]);
            let id = edges.len();
            edges.push(Edge { u, v, label });
            pair_index.insert((u.min(v), u.max(v)), id);
            label_index.insert(label, id);
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let mut hexes = Vec::with_capacity(hex_list.len());
        let mut hex_index = HashMap::with_capacity(hex_list.len());
        for (id, pairs) in hex_list {
            let ids = pairs.map(|(a, b)| {
                let (u, v) = (vert_index[&a], vert_index[&b]);
                pair_index[&(u.min(v), u.max(v))]
            });
            hex_index.insert(id, hexes.len());
            hexes.push((id, ids));
        }

        let graph = HexGraph {
            spec,
            mirror,
            verts,
            vert_index,
            edges,
            pair_index,
            label_index,
            adj,
            hexes,
            hex_index,
        };
        graph.check_shape();
        graph
    }

    /// Structural sanity: even order, degrees 2..=3, balanced bipartition.
    fn check_shape(&self) {
        debug_assert!(self.verts.len().is_multiple_of(2));
        let mut colors = [0usize; 2];
        for (v, list) in self.adj.iter().enumerate() {
            debug_assert!(
                (2..=3).contains(&list.len()),
                "vertex {v} has degree {}",
                list.len()
            );
            colors[self.color(v)] += 1;
            for &(u, _) in list {
                debug_assert_ne!(self.color(v), self.color(u), "odd cycle in lattice");
            }
        }
        debug_assert_eq!(colors[0], colors[1]);
    }

    pub fn spec(&self) -> &AnySpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexes.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn vertex(&self, idx: usize) -> Vertex {
        self.verts[idx]
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vert_index.get(&v).copied()
    }

    /// Bipartition class of a vertex, 0 or 1. Edges always join the two
    /// classes.
    pub fn color(&self, idx: usize) -> usize {
        let v = self.verts[idx];
        (v.x + v.y / 2).rem_euclid(2) as usize
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn edge_label(&self, id: usize) -> EdgeLabel {
        self.edges[id].label
    }

    /// Neighbors of a vertex as `(other_vertex, edge_id)`, sorted.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Edge id joining two vertex ids, if they are adjacent.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.pair_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Resolve an edge name to its id. Accepts aliases: a primed name on
    /// the turning row resolves to the same edge as its upper name.
    pub fn edge_by_label(&self, label: &EdgeLabel) -> Option<usize> {
        if let Some(&id) = self.label_index.get(label) {
            return Some(id);
        }
        let (a, b) = label_endpoints(label, self.mirror)?;
        let u = self.vert_index.get(&a)?;
        let v = self.vert_index.get(&b)?;
        self.pair_index.get(&(*u.min(v), *u.max(v))).copied()
    }

    /// The canonical (stored) name of an edge given any of its names.
    pub fn canonical_label(&self, label: &EdgeLabel) -> Option<EdgeLabel> {
        self.edge_by_label(label).map(|id| self.edges[id].label)
    }

    pub fn hexagon_ids(&self) -> impl Iterator<Item = HexId> + '_ {
        self.hexes.iter().map(|&(id, _)| id)
    }

    /// Canonical id of a hexagon: a turning-row hexagon named from the
    /// lower half, `C'_{m',j}`, maps to `C_{m,j+delta}`.
    pub fn canonical_hexagon(&self, id: HexId) -> HexId {
        if let AnySpec::Turning(t) = &self.spec {
            let mp = t.lower().row_count() as i64;
            if id.half == Half::Lower && id.row == mp {
                return HexId {
                    half: Half::Upper,
                    row: t.upper().row_count() as i64,
                    col: id.col + t.delta(),
                };
            }
        }
        id
    }

    /// Boundary edge ids of a hexagon in cyclic order, starting from its
    /// left vertical edge.
    pub fn hexagon_edges(&self, id: HexId) -> Result<[usize; 6], Error> {
        let canon = self.canonical_hexagon(id);
        self.hex_index
            .get(&canon)
            .map(|&i| self.hexes[i].1)
            .ok_or_else(|| Error::UnknownName(id.to_string()))
    }

    /// Boundary edge names of a hexagon in cyclic order, canonicalized.
    pub fn hexagon_boundary(&self, id: HexId) -> Result<[EdgeLabel; 6], Error> {
        Ok(self.hexagon_edges(id)?.map(|e| self.edges[e].label))
    }

    /// Vertex ids on the boundary of a hexagon.
    pub fn hexagon_vertices(&self, id: HexId) -> Result<[usize; 6], Error> {
        let edges = self.hexagon_edges(id)?;
        let mut out = [0usize; 6];
        let mut n = 0;
        for e in edges {
            for v in [self.edges[e].u, self.edges[e].v] {
                if !out[..n].contains(&v) {
                    out[n] = v;
                    n += 1;
                }
            }
        }
        debug_assert_eq!(n, 6);
        Ok(out)
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            EdgeKind::Vertical => "e",
            EdgeKind::LeftOblique => "l",
            EdgeKind::RightOblique => "r",
        };
        let prime = match self.half {
            Half::Upper => "",
            Half::Lower => "'",
        };
        write!(f, "{kind}{prime}_{{{},{}}}", self.row, self.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::ChsSpec;

    fn mono(ks: &[i64], hs: &[i64]) -> HexGraph {
        HexGraph::build_monotonic(&ChsSpec::from_params(ks, hs).unwrap())
    }

    fn turning(ks: &[i64], hs: &[i64], lks: &[i64], lhs: &[i64]) -> HexGraph {
        let t = TurningChsSpec::new(
            ChsSpec::from_params(ks, hs).unwrap(),
            ChsSpec::from_params(lks, lhs).unwrap(),
        )
        .unwrap();
        HexGraph::build_turning(&t)
    }

    #[test]
    fn single_hexagon() {
        let g = mono(&[1], &[1]);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.hexagon_count(), 1);
        let want = [
            EdgeLabel::upper(EdgeKind::Vertical, 1, 1),
            EdgeLabel::upper(EdgeKind::LeftOblique, 1, 1),
            EdgeLabel::upper(EdgeKind::RightOblique, 1, 1),
            EdgeLabel::upper(EdgeKind::Vertical, 1, 0),
            EdgeLabel::upper(EdgeKind::LeftOblique, 2, 0),
            EdgeLabel::upper(EdgeKind::RightOblique, 2, 1),
        ];
        let bound = g.hexagon_boundary(HexId { half: Half::Upper, row: 1, col: 1 }).unwrap();
        assert_eq!(bound, want);
        for label in want {
            assert!(g.edge_by_label(&label).is_some(), "missing {label}");
        }
    }

    #[test]
    fn two_hexagon_row_shares_one_edge() {
        let g = mono(&[2], &[1]);
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 11);
        let b1 = g.hexagon_boundary(HexId { half: Half::Upper, row: 1, col: 1 }).unwrap();
        let b2 = g.hexagon_boundary(HexId { half: Half::Upper, row: 1, col: 2 }).unwrap();
        let shared: Vec<_> = b1.iter().filter(|l| b2.contains(l)).collect();
        assert_eq!(shared, vec![&EdgeLabel::upper(EdgeKind::Vertical, 1, 1)]);
    }

    #[test]
    fn five_row_example_counts() {
        let g = mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]);
        assert_eq!(g.hexagon_count(), 14);
        assert_eq!(g.vertex_count(), 48);
        assert_eq!(g.edge_count(), 61);
        let b = g.hexagon_boundary(HexId { half: Half::Upper, row: 5, col: 5 }).unwrap();
        for l in [
            EdgeLabel::upper(EdgeKind::Vertical, 5, 5),
            EdgeLabel::upper(EdgeKind::Vertical, 5, 4),
            EdgeLabel::upper(EdgeKind::RightOblique, 5, 5),
        ] {
            assert!(b.contains(&l), "{l} not on the boundary");
        }
    }

    #[test]
    fn edge_count_matches_hexagon_adjacency() {
        // Each shared edge is counted by exactly two hexagons, so
        // E = 6 * hexagons - shared.
        for g in [
            mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]),
            mono(&[2, 2], &[1, 1]),
            turning(&[3, 3, 5, 5], &[1, 2, 2, 4], &[1, 2, 3], &[1, 1, 2]),
        ] {
            let hexes: Vec<_> = g.hexagon_ids().collect();
            let mut shared = 0;
            for (i, &a) in hexes.iter().enumerate() {
                let ea = g.hexagon_edges(a).unwrap();
                for &b in &hexes[i + 1..] {
                    let eb = g.hexagon_edges(b).unwrap();
                    let common = ea.iter().filter(|e| eb.contains(e)).count();
                    assert!(common <= 1, "{a} and {b} share {common} edges");
                    shared += common;
                }
            }
            assert_eq!(g.edge_count(), 6 * g.hexagon_count() - shared);
        }
    }

    #[test]
    fn degrees_and_bipartition() {
        for g in [
            mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]),
            turning(&[3, 3, 5, 5], &[1, 2, 2, 4], &[1, 2, 3], &[1, 1, 2]),
            mono(&[1, 3], &[1, 3]), // disconnected: two hexagons meeting nowhere
        ] {
            let mut classes = [0, 0];
            for v in 0..g.vertex_count() {
                let deg = g.adjacency(v).len();
                assert!((2..=3).contains(&deg));
                classes[g.color(v)] += 1;
                for &(u, _) in g.adjacency(v) {
                    assert_ne!(g.color(v), g.color(u));
                }
            }
            assert_eq!(classes[0], classes[1]);
        }
    }

    #[test]
    fn turning_example_counts() {
        let g = turning(&[3, 3, 5, 5], &[1, 2, 2, 4], &[1, 2, 3], &[1, 1, 2]);
        assert_eq!(g.hexagon_count(), 14);
        assert_eq!(g.vertex_count(), 52);
        assert_eq!(g.edge_count(), 65);
        assert_eq!(
            g.hexagon_ids().filter(|h| h.half == Half::Lower).count(),
            3
        );
    }

    #[test]
    fn turning_row_aliases_resolve_to_upper_names() {
        // delta = h_4 - h'_3 = 4 - 2 = 2.
        let g = turning(&[3, 3, 5, 5], &[1, 2, 2, 4], &[1, 2, 3], &[1, 1, 2]);
        let cases = [
            (EdgeLabel::lower(EdgeKind::Vertical, 3, 1), EdgeLabel::upper(EdgeKind::Vertical, 4, 3)),
            (EdgeLabel::lower(EdgeKind::Vertical, 3, 3), EdgeLabel::upper(EdgeKind::Vertical, 4, 5)),
            (EdgeLabel::lower(EdgeKind::LeftOblique, 3, 1), EdgeLabel::upper(EdgeKind::RightOblique, 5, 3)),
            (EdgeLabel::lower(EdgeKind::RightOblique, 3, 1), EdgeLabel::upper(EdgeKind::LeftOblique, 5, 2)),
        ];
        for (alias, canon) in cases {
            assert_eq!(g.canonical_label(&alias), Some(canon), "alias {alias}");
        }
        // The aliased hexagon names agree too: C'_{3,2} is C_{4,4}.
        let via_alias = g.hexagon_boundary(HexId { half: Half::Lower, row: 3, col: 2 }).unwrap();
        let direct = g.hexagon_boundary(HexId { half: Half::Upper, row: 4, col: 4 }).unwrap();
        assert_eq!(via_alias, direct);
        // C'_{3,1} names no hexagon of this system, on either side.
        assert!(g.hexagon_boundary(HexId { half: Half::Lower, row: 3, col: 1 }).is_err());
    }

    #[test]
    fn unknown_names_are_rejected() {
        let g = mono(&[2], &[1]);
        assert!(g.edge_by_label(&EdgeLabel::upper(EdgeKind::Vertical, 2, 1)).is_none());
        assert!(g.edge_by_label(&EdgeLabel::lower(EdgeKind::Vertical, 1, 1)).is_none());
        assert!(g.hexagon_boundary(HexId { half: Half::Upper, row: 1, col: 3 }).is_err());
    }

    #[test]
    fn rebuild_from_json_round_trip_is_identical() {
        let spec = AnySpec::from_json(
            r#"{"upper":{"rows":[{"k":3,"h":1},{"k":3,"h":2},{"k":5,"h":2},{"k":5,"h":4}]},
                "lower":{"rows":[{"k":1,"h":1},{"k":2,"h":1},{"k":3,"h":2}]}}"#,
        )
        .unwrap();
        let g1 = HexGraph::build(&spec);
        let spec2 = AnySpec::from_json(&spec.to_json()).unwrap();
        let g2 = HexGraph::build(&spec2);
        assert_eq!(g1.vertices(), g2.vertices());
        assert_eq!(
            g1.edges().iter().map(|e| (e.u, e.v, e.label)).collect::<Vec<_>>(),
            g2.edges().iter().map(|e| (e.u, e.v, e.label)).collect::<Vec<_>>()
        );
    }
}

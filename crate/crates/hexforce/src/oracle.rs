//! Definition-level reference computations.
//!
//! A subset S of a perfect matching M forces M when M is the only perfect
//! matching containing S, equivalently when no M-alternating cycle avoids
//! the vertices S covers. Everything in this module works straight from
//! that definition on the explicit graph, with no appeal to the
//! closed-form recurrences; the recurrence engine is validated against
//! these routines. The minimum-forcing search branches on the matching
//! edges of one offending alternating cycle at a time, which keeps it fast
//! enough to sweep every matching of mid-sized systems, but all leaf
//! checks still go through uniqueness of the residual completion.

use num_bigint::BigInt;

use crate::error::Error;
use crate::graph::{EdgeLabel, HexGraph};
use crate::matching::{
    enumerate_matchings, enumerate_sequences, sequence_to_matching, MatchingSequence,
    PerfectMatching,
};
use crate::poly::Polynomial;

/// Fixed-capacity bitset over vertex or edge ids.
#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
}

/// For each vertex, the id of its partner across the matching edge.
fn partner_map(graph: &HexGraph, matching: &PerfectMatching) -> Vec<usize> {
    let mut partner = vec![usize::MAX; graph.vertex_count()];
    for &id in matching.edge_ids() {
        let e = graph.edge(id);
        partner[e.u] = e.v;
        partner[e.v] = e.u;
    }
    debug_assert!(partner.iter().all(|&p| p != usize::MAX));
    partner
}

/// Find an M-alternating cycle avoiding the blocked vertices, as a vertex
/// list in cyclic order, or None. Orient matching edges from color 0 to
/// color 1 and the rest backwards; directed cycles are then exactly the
/// alternating cycles, and a depth-first search finds one.
fn find_alternating_cycle(
    graph: &HexGraph,
    partner: &[usize],
    blocked: &Bits,
) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    // 0 unvisited, 1 on the current path, 2 exhausted
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 || blocked.get(root) {
            continue;
        }
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(&(v, idx)) = frames.last() {
            let step = if graph.color(v) == 0 {
                // one outgoing edge: the matching edge
                if idx == 0 {
                    debug_assert!(!blocked.get(partner[v]), "blocked set splits an edge of M");
                    Some((partner[v], 1))
                } else {
                    None
                }
            } else {
                let adj = graph.adjacency(v);
                let mut found = None;
                let mut i = idx;
                while i < adj.len() {
                    let (u, _) = adj[i];
                    i += 1;
                    if u != partner[v] && !blocked.get(u) {
                        found = Some((u, i));
                        break;
                    }
                }
                found
            };
            match step {
                Some((w, next_idx)) => {
                    frames.last_mut().unwrap().1 = next_idx;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            frames.push((w, 0));
                        }
                        1 => {
                            let pos = frames.iter().position(|&(x, _)| x == w).unwrap();
                            return Some(frames[pos..].iter().map(|&(x, _)| x).collect());
                        }
                        _ => {}
                    }
                }
                None => {
                    state[v] = 2;
                    frames.pop();
                }
            }
        }
    }
    None
}

/// Matching edges of an alternating cycle given as an ordered vertex list.
fn cycle_matching_edges(graph: &HexGraph, cycle: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(cycle.len() / 2);
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        // edges leaving color 0 are the matching edges, by orientation
        if graph.color(a) == 0 {
            out.push(graph.edge_between(a, b).expect("consecutive cycle vertices"));
        }
    }
    out
}

/// Does the graph minus the blocked vertices admit exactly one perfect
/// matching? Peels forced pendant edges; a bipartite graph with a unique
/// perfect matching always exposes a degree-1 vertex, so the peeling
/// empties the graph exactly in the unique case.
fn unique_completion(graph: &HexGraph, blocked: &Bits) -> bool {
    let n = graph.vertex_count();
    let mut alive: Vec<bool> = (0..n).map(|v| !blocked.get(v)).collect();
    let mut deg = vec![0usize; n];
    let mut queue = Vec::new();
    let mut remaining = 0usize;
    for v in 0..n {
        if !alive[v] {
            continue;
        }
        remaining += 1;
        deg[v] = graph.adjacency(v).iter().filter(|&&(u, _)| alive[u]).count();
        if deg[v] <= 1 {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if !alive[v] || deg[v] != 1 {
            continue;
        }
        let u = graph
            .adjacency(v)
            .iter()
            .map(|&(u, _)| u)
            .find(|&u| alive[u])
            .unwrap();
        alive[v] = false;
        alive[u] = false;
        remaining -= 2;
        for &(w, _) in graph.adjacency(u) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    queue.push(w);
                }
            }
        }
    }
    remaining == 0
}

/// Is the given subset of matching edges a forcing set of the matching?
pub fn is_forcing_set(
    graph: &HexGraph,
    matching: &PerfectMatching,
    subset: &[usize],
) -> Result<bool, Error> {
    let mut blocked = Bits::new(graph.vertex_count());
    for &id in subset {
        if !matching.contains(id) {
            return Err(Error::NotInMatching(graph.edge_label(id).to_string()));
        }
        let e = graph.edge(id);
        blocked.set(e.u);
        blocked.set(e.v);
    }
    let unique = unique_completion(graph, &blocked);
    debug_assert_eq!(
        unique,
        find_alternating_cycle(graph, &partner_map(graph, matching), &blocked).is_none(),
        "the two forcing characterizations disagree"
    );
    Ok(unique)
}

/// A minimum forcing set of the matching, as sorted edge ids.
///
/// Iterative deepening: every forcing set must contain a matching edge of
/// every alternating cycle, so each search node finds one cycle that the
/// current subset misses and branches on its matching edges. Branches are
/// made disjoint by forbidding, inside each branch, the candidates already
/// explored by its elder siblings. The starting depth is the size of a
/// greedily packed family of disjoint alternating cycles, a lower bound.
pub fn minimum_forcing_set(graph: &HexGraph, matching: &PerfectMatching) -> Vec<usize> {
    let partner = partner_map(graph, matching);
    let mut lower = 0usize;
    {
        let mut blocked = Bits::new(graph.vertex_count());
        while let Some(cycle) = find_alternating_cycle(graph, &partner, &blocked) {
            for &v in &cycle {
                blocked.set(v);
            }
            lower += 1;
        }
    }
    if lower == 0 {
        return Vec::new();
    }
    for cap in lower..=matching.len() {
        let mut blocked = Bits::new(graph.vertex_count());
        let mut forbidden = Bits::new(graph.edge_count());
        let mut chosen = Vec::with_capacity(cap);
        if search(graph, &partner, &mut blocked, &mut forbidden, &mut chosen, cap) {
            debug_assert!(unique_completion(graph, &blocked));
            chosen.sort_unstable();
            return chosen;
        }
    }
    unreachable!("the whole matching forces itself");
}

fn search(
    graph: &HexGraph,
    partner: &[usize],
    blocked: &mut Bits,
    forbidden: &mut Bits,
    chosen: &mut Vec<usize>,
    cap: usize,
) -> bool {
    let cycle = match find_alternating_cycle(graph, partner, blocked) {
        None => return true,
        Some(c) => c,
    };
    if chosen.len() == cap {
        return false;
    }
    let mut tried = Vec::new();
    let mut done = false;
    for id in cycle_matching_edges(graph, &cycle) {
        if forbidden.get(id) {
            continue;
        }
        let (u, v) = {
            let e = graph.edge(id);
            (e.u, e.v)
        };
        blocked.set(u);
        blocked.set(v);
        chosen.push(id);
        if search(graph, partner, blocked, forbidden, chosen, cap) {
            done = true;
            break;
        }
        chosen.pop();
        blocked.clear(u);
        blocked.clear(v);
        forbidden.set(id);
        tried.push(id);
    }
    if !done {
        for id in tried {
            forbidden.clear(id);
        }
    }
    done
}

/// Size of a minimum forcing set.
pub fn forcing_number(graph: &HexGraph, matching: &PerfectMatching) -> usize {
    minimum_forcing_set(graph, matching).len()
}

/// Forcing number by plain subset search, trying every subset of each size
/// in turn. Exponential; kept as the most literal reading of the
/// definition for cross-checks on small systems.
pub fn forcing_number_by_subsets(graph: &HexGraph, matching: &PerfectMatching) -> usize {
    fn any_forces(
        graph: &HexGraph,
        matching: &PerfectMatching,
        size: usize,
        from: usize,
        current: &mut Vec<usize>,
    ) -> bool {
        if current.len() == size {
            return is_forcing_set(graph, matching, current).unwrap();
        }
        let ids = matching.edge_ids();
        let need = size - current.len();
        for i in from..ids.len() {
            if ids.len() - i < need {
                break;
            }
            current.push(ids[i]);
            if any_forces(graph, matching, size, i + 1, current) {
                return true;
            }
            current.pop();
        }
        false
    }
    (0..=matching.len())
        .find(|&s| any_forces(graph, matching, s, 0, &mut Vec::new()))
        .expect("the whole matching forces itself")
}

/// All M-alternating cycles, each as a vertex list in cyclic order.
///
/// Flipping a cycle in M gives another perfect matching, and every
/// alternating cycle is recovered as the symmetric difference of M with
/// some other matching, so enumerating matchings enumerates the cycles.
/// Symmetric differences splitting into several cycles are skipped; their
/// cycles all reappear as differences with nearer matchings.
pub fn alternating_cycles(
    graph: &HexGraph,
    matching: &PerfectMatching,
    budget: u128,
) -> Result<Vec<Vec<usize>>, Error> {
    let all = enumerate_matchings(graph, budget)?;
    let mut out = Vec::new();
    for other in &all {
        if other == matching {
            continue;
        }
        let diff = symmetric_difference(matching.edge_ids(), other.edge_ids());
        if let Some(cycle) = single_cycle_vertices(graph, &diff) {
            out.push(cycle);
        }
    }
    Ok(out)
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    // both inputs sorted
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(&x), Some(&y)) if x < y => {
                out.push(x);
                i += 1;
            }
            (Some(_), Some(&y)) => {
                out.push(y);
                j += 1;
            }
            (Some(&x), None) => {
                out.push(x);
                i += 1;
            }
            (None, Some(&y)) => {
                out.push(y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// If the edge set is a single cycle, return its vertices in cyclic
/// order. The input is a union of disjoint cycles, so it is one cycle
/// exactly when a walk from any vertex closes over all of them.
fn single_cycle_vertices(graph: &HexGraph, edges: &[usize]) -> Option<Vec<usize>> {
    let mut nbr: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for &id in edges {
        let e = graph.edge(id);
        nbr.entry(e.u).or_default().push(e.v);
        nbr.entry(e.v).or_default().push(e.u);
    }
    let (&start, first) = nbr.iter().next()?;
    if first.len() != 2 {
        return None;
    }
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = first[0];
    while cur != start {
        let ns = &nbr[&cur];
        if ns.len() != 2 {
            return None;
        }
        cycle.push(cur);
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        prev = cur;
        cur = next;
    }
    (cycle.len() == nbr.len()).then_some(cycle)
}

/// A maximum family of vertex-disjoint M-alternating cycles. For these
/// graphs its size equals the forcing number of M, which
/// [`forcing_certificate`] asserts.
pub fn maximum_cycle_packing(
    graph: &HexGraph,
    matching: &PerfectMatching,
    budget: u128,
) -> Result<Vec<Vec<usize>>, Error> {
    let mut cycles = alternating_cycles(graph, matching, budget)?;
    // Cycles through the same vertices are interchangeable in a packing.
    cycles.sort_by_key(|c| {
        let mut vs = c.clone();
        vs.sort_unstable();
        (c.len(), vs)
    });
    cycles.dedup_by(|a, b| {
        let mut x = a.clone();
        let mut y = b.clone();
        x.sort_unstable();
        y.sort_unstable();
        x == y
    });
    let masks: Vec<Bits> = cycles
        .iter()
        .map(|c| {
            let mut bits = Bits::new(graph.vertex_count());
            for &v in c {
                bits.set(v);
            }
            bits
        })
        .collect();

    fn extend(
        idx: usize,
        used: &Bits,
        free: usize,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
        masks: &[Bits],
        sizes: &[usize],
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if idx == masks.len() {
            return;
        }
        // every further cycle needs at least six free vertices
        if current.len() + free / 6 <= best.len() {
            return;
        }
        if !masks[idx].intersects(used) {
            let mut used2 = used.clone();
            used2.union_with(&masks[idx]);
            current.push(idx);
            extend(idx + 1, &used2, free - sizes[idx], current, best, masks, sizes);
            current.pop();
        }
        extend(idx + 1, used, free, current, best, masks, sizes);
    }

    let sizes: Vec<usize> = cycles.iter().map(Vec::len).collect();
    let mut best = Vec::new();
    extend(
        0,
        &Bits::new(graph.vertex_count()),
        graph.vertex_count(),
        &mut Vec::new(),
        &mut best,
        &masks,
        &sizes,
    );
    Ok(best.into_iter().map(|i| cycles[i].clone()).collect())
}

/// A matching together with everything the library claims about it:
/// forcing number, a witness minimum forcing set, and a maximum packing
/// of disjoint alternating cycles of the same size.
#[derive(Debug, Clone)]
pub struct ForcingCertificate {
    pub sequence: MatchingSequence,
    pub forcing_number: usize,
    pub witness: Vec<EdgeLabel>,
    pub packing: Vec<Vec<EdgeLabel>>,
}

pub fn forcing_certificate(
    graph: &HexGraph,
    sequence: &MatchingSequence,
    budget: u128,
) -> Result<ForcingCertificate, Error> {
    let matching = sequence_to_matching(graph, sequence)?;
    let witness_ids = minimum_forcing_set(graph, &matching);
    debug_assert!(is_forcing_set(graph, &matching, &witness_ids).unwrap());
    let packing = maximum_cycle_packing(graph, &matching, budget)?;
    assert_eq!(
        packing.len(),
        witness_ids.len(),
        "maximum cycle packing must match the forcing number"
    );
    Ok(ForcingCertificate {
        sequence: sequence.clone(),
        forcing_number: witness_ids.len(),
        witness: witness_ids.iter().map(|&id| graph.edge_label(id)).collect(),
        packing: packing.iter().map(|c| cycle_labels(graph, c)).collect(),
    })
}

/// Edge names along a cycle given as an ordered vertex list.
fn cycle_labels(graph: &HexGraph, cycle: &[usize]) -> Vec<EdgeLabel> {
    (0..cycle.len())
        .map(|i| {
            let a = cycle[i];
            let b = cycle[(i + 1) % cycle.len()];
            graph.edge_label(graph.edge_between(a, b).unwrap())
        })
        .collect()
}

/// The forcing polynomial by brute force: one forcing number per matching.
pub fn forcing_polynomial(graph: &HexGraph, budget: u128) -> Result<Polynomial, Error> {
    let mut counts: Vec<u64> = Vec::new();
    for seq in enumerate_sequences(graph.spec(), budget)? {
        let matching = sequence_to_matching(graph, &seq)?;
        let f = forcing_number(graph, &matching);
        if counts.len() <= f {
            counts.resize(f + 1, 0);
        }
        counts[f] += 1;
    }
    Ok(Polynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// The forcing spectrum by brute force: every forcing number attained.
pub fn forcing_spectrum(graph: &HexGraph, budget: u128) -> Result<Vec<usize>, Error> {
    Ok(forcing_polynomial(graph, budget)?.support())
}

/// Enumerate perfect matchings directly on the graph, matching the lowest
/// uncovered vertex in all ways. Independent of the sequence bijection,
/// which it exists to cross-check.
pub fn enumerate_matchings_direct(
    graph: &HexGraph,
    budget: u128,
) -> Result<Vec<PerfectMatching>, Error> {
    fn go(
        graph: &HexGraph,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<PerfectMatching>,
        budget: u128,
    ) -> Result<(), Error> {
        let v = match covered.iter().position(|&c| !c) {
            None => {
                if out.len() as u128 == budget {
                    return Err(Error::BudgetExceeded { required: budget + 1, budget });
                }
                let mut ids = chosen.clone();
                ids.sort_unstable();
                out.push(PerfectMatching::from_sorted_ids_unchecked(ids));
                return Ok(());
            }
            Some(v) => v,
        };
        for &(u, id) in graph.adjacency(v) {
            if !covered[u] {
                covered[v] = true;
                covered[u] = true;
                chosen.push(id);
                go(graph, covered, chosen, out, budget)?;
                chosen.pop();
                covered[v] = false;
                covered[u] = false;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(
        graph,
        &mut vec![false; graph.vertex_count()],
        &mut Vec::new(),
        &mut out,
        budget,
    )?;
    Ok(out)
}

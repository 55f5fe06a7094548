//! Perfect matchings and their row sequences.
//!
//! Every perfect matching of a monotonic system uses exactly one vertical
//! edge per row, say `e_{i,a_i}` in row `i`, and the columns form a
//! non-decreasing sequence with `a_i` in `h_i - 1 ..= k_i`. Conversely,
//! once the verticals are fixed the oblique edges on every seam line are
//! forced left to right, so each admissible sequence extends to exactly
//! one perfect matching. A system with one turning decomposes the same way
//! per half; the turning row is shared, which couples the two sequences by
//! `a_m - h_m = a'_{m'} - h'_{m'}`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{EdgeKind, EdgeLabel, Half, HexGraph};
use crate::spec::{AnySpec, ChsSpec};

/// Column sequence(s) describing one perfect matching. `lower` is present
/// exactly for turning systems and carries all `m'` values, including the
/// redundant coupled last one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchingSequence {
    pub upper: Vec<i64>,
    pub lower: Option<Vec<i64>>,
}

impl MatchingSequence {
    pub fn monotonic(upper: Vec<i64>) -> Self {
        MatchingSequence { upper, lower: None }
    }

    pub fn turning(upper: Vec<i64>, lower: Vec<i64>) -> Self {
        MatchingSequence { upper, lower: Some(lower) }
    }

    /// Check ranges, monotonicity and (for turning systems) coupling
    /// against a spec.
    pub fn validate(&self, spec: &AnySpec) -> Result<(), Error> {
        match (spec, &self.lower) {
            (AnySpec::Monotonic(s), None) => validate_half(&self.upper, s),
            (AnySpec::Monotonic(_), Some(_)) => Err(Error::InvalidSequence {
                index: None,
                reason: "monotonic spec takes a single sequence".into(),
            }),
            (AnySpec::Turning(_), None) => Err(Error::InvalidSequence {
                index: None,
                reason: "turning spec needs an upper and a lower sequence".into(),
            }),
            (AnySpec::Turning(t), Some(lower)) => {
                validate_half(&self.upper, t.upper())?;
                validate_half(lower, t.lower())?;
                let m = t.upper().row_count();
                let mp = t.lower().row_count();
                let up_off = self.upper[m - 1] - t.upper().h(m);
                let lo_off = lower[mp - 1] - t.lower().h(mp);
                if up_off != lo_off {
                    return Err(Error::InvalidSequence {
                        index: None,
                        reason: format!(
                            "turning row mismatch: upper picks column offset {up_off}, \
                             lower picks {lo_off}"
                        ),
                    });
                }
                Ok(())
            }
        }
    }
}

fn validate_half(seq: &[i64], spec: &ChsSpec) -> Result<(), Error> {
    if seq.len() != spec.row_count() {
        return Err(Error::InvalidSequence {
            index: None,
            reason: format!("{} values for {} rows", seq.len(), spec.row_count()),
        });
    }
    for (idx, &a) in seq.iter().enumerate() {
        let i = idx + 1;
        let (lo, hi) = (spec.h(i) - 1, spec.k(i));
        if a < lo || a > hi {
            return Err(Error::InvalidSequence {
                index: Some(i),
                reason: format!("value {a} outside {lo}..={hi}"),
            });
        }
        if idx > 0 && a < seq[idx - 1] {
            return Err(Error::InvalidSequence {
                index: Some(i),
                reason: format!("value {a} decreases after {}", seq[idx - 1]),
            });
        }
    }
    Ok(())
}

/// `(0,3,3,4,4)` for monotonic, `(0,1,1,5|0,0,3)` for turning systems.
impl fmt::Display for MatchingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[i64]| xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match &self.lower {
            None => write!(f, "({})", join(&self.upper)),
            Some(lo) => write!(f, "({}|{})", join(&self.upper), join(lo)),
        }
    }
}

impl FromStr for MatchingSequence {
    type Err = Error;

    /// Accepts `0,3,3,4,4` with or without surrounding parentheses, and
    /// `(0,1,1,5|0,0,3)` for turning systems.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let parse_half = |part: &str| -> Result<Vec<i64>, Error> {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad sequence value {tok:?}")))
                })
                .collect()
        };
        match s.split_once('|') {
            Some((up, lo)) => Ok(MatchingSequence::turning(parse_half(up)?, parse_half(lo)?)),
            None => Ok(MatchingSequence::monotonic(parse_half(s)?)),
        }
    }
}

/// A perfect matching, stored as sorted edge ids of its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatching {
    edges: Vec<usize>,
}

impl PerfectMatching {
    /// Validate that the edges cover every vertex exactly once.
    pub fn from_edge_ids(
        graph: &HexGraph,
        ids: impl IntoIterator<Item = usize>,
    ) -> Result<Self, Error> {
        let mut edges: Vec<usize> = ids.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let mut covered = vec![false; graph.vertex_count()];
        for &id in &edges {
            if id >= graph.edge_count() {
                return Err(Error::NotAPerfectMatching(format!("no edge with id {id}")));
            }
            let e = graph.edge(id);
            for v in [e.u, e.v] {
                if covered[v] {
                    return Err(Error::NotAPerfectMatching(format!(
                        "vertex {:?} covered twice",
                        graph.vertex(v)
                    )));
                }
                covered[v] = true;
            }
        }
        if let Some(missed) = covered.iter().position(|c| !c) {
            return Err(Error::NotAPerfectMatching(format!(
                "vertex {:?} not covered",
                graph.vertex(missed)
            )));
        }
        Ok(PerfectMatching { edges })
    }

    pub(crate) fn from_sorted_ids_unchecked(edges: Vec<usize>) -> Self {
        PerfectMatching { edges }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge_id: usize) -> bool {
        self.edges.binary_search(&edge_id).is_ok()
    }

    pub fn labels(&self, graph: &HexGraph) -> Vec<EdgeLabel> {
        self.edges.iter().map(|&e| graph.edge_label(e)).collect()
    }
}

/// Number of perfect matchings, by dynamic programming over sequences.
pub fn count_matchings(spec: &AnySpec) -> BigUint {
    match spec {
        AnySpec::Monotonic(s) => counts_by_final_value(s).values().sum(),
        AnySpec::Turning(t) => {
            let delta = t.delta();
            let upper = counts_by_final_value(t.upper());
            let lower = counts_by_final_value(t.lower());
            upper
                .iter()
                .map(|(v, n)| {
                    lower.get(&(v - delta)).map_or_else(BigUint::zero, |n2| n * n2)
                })
                .sum()
        }
    }
}

/// Count of admissible non-decreasing sequences keyed by their final
/// value. The empty spec has one sequence; it is counted under a sentinel
/// key smaller than every admissible value, so joins against it vanish.
fn counts_by_final_value(spec: &ChsSpec) -> BTreeMap<i64, BigUint> {
    let mut byval: BTreeMap<i64, BigUint> = BTreeMap::new();
    if spec.is_empty() {
        byval.insert(i64::MIN, BigUint::one());
        return byval;
    }
    byval.insert(spec.h(1) - 1, BigUint::one());
    for v in spec.h(1)..=spec.k(1) {
        byval.insert(v, BigUint::one());
    }
    for i in 2..=spec.row_count() {
        let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
        let mut run = BigUint::zero();
        let mut prev_iter = byval.iter().peekable();
        for v in (spec.h(i) - 1)..=spec.k(i) {
            while let Some(&(&u, n)) = prev_iter.peek() {
                if u <= v {
                    run += n;
                    prev_iter.next();
                } else {
                    break;
                }
            }
            if !run.is_zero() {
                next.insert(v, run.clone());
            }
        }
        byval = next;
    }
    byval
}

/// All admissible sequences in lexicographic order, after checking the
/// count against `budget`.
pub fn enumerate_sequences(
    spec: &AnySpec,
    budget: u128,
) -> Result<Vec<MatchingSequence>, Error> {
    let total = count_matchings(spec);
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: u128::try_from(&total).unwrap_or(u128::MAX),
            budget,
        });
    }
    let mut out = Vec::new();
    match spec {
        AnySpec::Monotonic(s) => {
            walk_half(s, None, &mut Vec::new(), &mut |seq| {
                out.push(MatchingSequence::monotonic(seq.to_vec()));
            });
        }
        AnySpec::Turning(t) => {
            let delta = t.delta();
            let mut upper_done: Vec<Vec<i64>> = Vec::new();
            walk_half(t.upper(), None, &mut Vec::new(), &mut |seq| {
                upper_done.push(seq.to_vec());
            });
            for up in upper_done {
                let last = up[up.len() - 1] - delta;
                walk_half(t.lower(), Some(last), &mut Vec::new(), &mut |seq| {
                    out.push(MatchingSequence::turning(up.clone(), seq.to_vec()));
                });
            }
        }
    }
    debug_assert_eq!(BigUint::from(out.len()), total);
    Ok(out)
}

/// Depth-first generation of non-decreasing sequences, ascending at every
/// row. `pinned_last` fixes the final value (used for the lower half of a
/// turning system, whose last row is already chosen by the upper half).
fn walk_half(
    spec: &ChsSpec,
    pinned_last: Option<i64>,
    prefix: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    let m = spec.row_count();
    if prefix.len() == m {
        emit(prefix);
        return;
    }
    let i = prefix.len() + 1;
    let mut lo = spec.h(i) - 1;
    if let Some(&prev) = prefix.last() {
        lo = lo.max(prev);
    }
    let mut hi = spec.k(i);
    if let Some(pin) = pinned_last {
        hi = hi.min(pin);
        if i == m {
            lo = lo.max(pin);
        }
    }
    for v in lo..=hi {
        prefix.push(v);
        walk_half(spec, pinned_last, prefix, emit);
        prefix.pop();
    }
}

/// Expand a sequence to its unique perfect matching: place the verticals,
/// then force the obliques along every seam line left to right.
pub fn sequence_to_matching(
    graph: &HexGraph,
    seq: &MatchingSequence,
) -> Result<PerfectMatching, Error> {
    seq.validate(graph.spec())?;
    let mut chosen: Vec<usize> = Vec::with_capacity(graph.vertex_count() / 2);
    let mut covered = vec![false; graph.vertex_count()];
    let mut take = |graph: &HexGraph, covered: &mut Vec<bool>, label: EdgeLabel| {
        let id = graph
            .edge_by_label(&label)
            .unwrap_or_else(|| panic!("vertical {label} missing from graph"));
        let e = graph.edge(id);
        covered[e.u] = true;
        covered[e.v] = true;
        chosen.push(id);
    };
    for (idx, &a) in seq.upper.iter().enumerate() {
        take(graph, &mut covered, EdgeLabel::upper(EdgeKind::Vertical, (idx + 1) as i64, a));
    }
    if let Some(lower) = &seq.lower {
        // The lower half's last row is the turning row, already covered by
        // the upper sequence.
        for (idx, &a) in lower[..lower.len() - 1].iter().enumerate() {
            take(graph, &mut covered, EdgeLabel::lower(EdgeKind::Vertical, (idx + 1) as i64, a));
        }
    }

    // Forced completion along each seam line. Obliques join consecutive x
    // on one line, so within a line the uncovered vertices must pair up
    // left to right; any gap or covered vertex in between is a
    // contradiction, which the sequence constraints rule out.
    let mut lines: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (idx, v) in graph.vertices().iter().enumerate() {
        lines.entry(v.y).or_default().push(idx);
    }
    for (_, line) in lines {
        // vertices() is sorted by (x, y), so each line is already x-sorted
        let mut pending: Option<usize> = None;
        for v in line {
            if covered[v] {
                assert!(pending.is_none(), "unmatched seam vertex next to a vertical");
                continue;
            }
            match pending {
                None => pending = Some(v),
                Some(p) => {
                    let pv = graph.vertex(p);
                    let vv = graph.vertex(v);
                    assert_eq!(vv.x, pv.x + 1, "gap between uncovered seam vertices");
                    let id = graph
                        .adjacency(p)
                        .iter()
                        .find(|&&(u, _)| u == v)
                        .map(|&(_, id)| id)
                        .expect("consecutive seam vertices are adjacent");
                    covered[p] = true;
                    covered[v] = true;
                    chosen.push(id);
                    pending = None;
                }
            }
        }
        assert!(pending.is_none(), "odd number of uncovered vertices on a seam line");
    }
    debug_assert!(covered.iter().all(|&c| c));
    chosen.sort_unstable();
    Ok(PerfectMatching::from_sorted_ids_unchecked(chosen))
}

/// Read the column sequence back off a perfect matching's vertical edges.
pub fn matching_to_sequence(
    graph: &HexGraph,
    matching: &PerfectMatching,
) -> Result<MatchingSequence, Error> {
    let mut upper: BTreeMap<i64, i64> = BTreeMap::new();
    let mut lower: BTreeMap<i64, i64> = BTreeMap::new();
    for &id in matching.edge_ids() {
        let label = graph.edge_label(id);
        if label.kind != EdgeKind::Vertical {
            continue;
        }
        let slots = match label.half {
            Half::Upper => &mut upper,
            Half::Lower => &mut lower,
        };
        if slots.insert(label.row, label.col).is_some() {
            return Err(Error::NotAPerfectMatching(format!(
                "two vertical edges in row {}",
                label.row
            )));
        }
    }
    let gather = |slots: &BTreeMap<i64, i64>, rows: usize, what: &str| {
        (1..=rows as i64)
            .map(|i| {
                slots.get(&i).copied().ok_or_else(|| {
                    Error::NotAPerfectMatching(format!("no vertical edge in {what} row {i}"))
                })
            })
            .collect::<Result<Vec<i64>, Error>>()
    };
    let seq = match graph.spec() {
        AnySpec::Monotonic(s) => {
            MatchingSequence::monotonic(gather(&upper, s.row_count(), "")?)
        }
        AnySpec::Turning(t) => {
            let up = gather(&upper, t.upper().row_count(), "upper")?;
            let mut lo = gather(&lower, t.lower().row_count() - 1, "lower")?;
            lo.push(up[up.len() - 1] - t.delta());
            MatchingSequence::turning(up, lo)
        }
    };
    seq.validate(graph.spec())?;
    Ok(seq)
}

/// Enumerate all perfect matchings through the sequence bijection.
pub fn enumerate_matchings(
    graph: &HexGraph,
    budget: u128,
) -> Result<Vec<PerfectMatching>, Error> {
    enumerate_sequences(graph.spec(), budget)?
        .iter()
        .map(|seq| sequence_to_matching(graph, seq))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::HexGraph;
    use crate::spec::TurningChsSpec;

    fn mono(ks: &[i64], hs: &[i64]) -> AnySpec {
        AnySpec::Monotonic(ChsSpec::from_params(ks, hs).unwrap())
    }

    fn turning(ks: &[i64], hs: &[i64], lks: &[i64], lhs: &[i64]) -> AnySpec {
        AnySpec::Turning(
            TurningChsSpec::new(
                ChsSpec::from_params(ks, hs).unwrap(),
                ChsSpec::from_params(lks, lhs).unwrap(),
            )
            .unwrap(),
        )
    }

    #[test]
    fn counts_small_systems() {
        assert_eq!(count_matchings(&mono(&[], &[])), BigUint::from(1u32));
        assert_eq!(count_matchings(&mono(&[1], &[1])), BigUint::from(2u32));
        assert_eq!(count_matchings(&mono(&[3], &[1])), BigUint::from(4u32));
        assert_eq!(
            count_matchings(&mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3])),
            BigUint::from(143u32)
        );
        assert_eq!(
            count_matchings(&turning(&[1, 1], &[1, 1], &[1, 1], &[1, 1])),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let spec = mono(&[2, 2], &[1, 1]);
        let seqs = enumerate_sequences(&spec, 100).unwrap();
        let got: Vec<Vec<i64>> = seqs.iter().map(|s| s.upper.clone()).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
    }

    #[test]
    fn enumeration_respects_budget() {
        let spec = mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]);
        match enumerate_sequences(&spec, 100) {
            Err(Error::BudgetExceeded { required: 143, budget: 100 }) => {}
            other => panic!("wanted budget error, got {other:?}"),
        }
        assert_eq!(enumerate_sequences(&spec, 143).unwrap().len(), 143);
    }

    #[test]
    fn turning_enumeration_couples_the_last_rows() {
        let spec = turning(&[1, 1], &[1, 1], &[1, 1], &[1, 1]);
        let seqs = enumerate_sequences(&spec, 100).unwrap();
        assert_eq!(seqs.len(), 5);
        for s in &seqs {
            s.validate(&spec).unwrap();
        }
        // delta = 0 here, so the final values must agree.
        for s in &seqs {
            assert_eq!(s.upper[1], s.lower.as_ref().unwrap()[1]);
        }
    }

    #[test]
    fn sequence_round_trips_through_the_graph() {
        for spec in [
            mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]),
            turning(&[3, 3, 5, 5], &[1, 2, 2, 4], &[1, 2, 3], &[1, 1, 2]),
            mono(&[1, 3], &[1, 3]),
        ] {
            let graph = HexGraph::build(&spec);
            for seq in enumerate_sequences(&spec, 10_000).unwrap() {
                let m = sequence_to_matching(&graph, &seq).unwrap();
                assert_eq!(2 * m.len(), graph.vertex_count());
                let back = matching_to_sequence(&graph, &m).unwrap();
                assert_eq!(back, seq, "round trip failed for {seq}");
            }
        }
    }

    #[test]
    fn distinct_sequences_give_distinct_matchings() {
        let spec = mono(&[2, 2], &[1, 1]);
        let graph = HexGraph::build(&spec);
        let ms: Vec<_> = enumerate_matchings(&graph, 100).unwrap();
        for (i, a) in ms.iter().enumerate() {
            for b in &ms[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn fig_sequence_places_the_right_verticals() {
        let spec = mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]);
        let graph = HexGraph::build(&spec);
        let seq = MatchingSequence::monotonic(vec![0, 3, 3, 4, 4]);
        let m = sequence_to_matching(&graph, &seq).unwrap();
        for (row, col) in [(1, 0), (2, 3), (3, 3), (4, 4), (5, 4)] {
            let id = graph
                .edge_by_label(&EdgeLabel::upper(EdgeKind::Vertical, row, col))
                .unwrap();
            assert!(m.contains(id), "e_{{{row},{col}}} missing");
        }
        let verticals = m
            .labels(&graph)
            .iter()
            .filter(|l| l.kind == EdgeKind::Vertical)
            .count();
        assert_eq!(verticals, 5);
    }

    #[test]
    fn validation_rejects_bad_sequences() {
        let spec = mono(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]);
        let bad_range = MatchingSequence::monotonic(vec![0, 3, 3, 4, 6]);
        assert!(matches!(
            bad_range.validate(&spec),
            Err(Error::InvalidSequence { index: Some(5), .. })
        ));
        let decreasing = MatchingSequence::monotonic(vec![3, 2, 3, 4, 4]);
        assert!(matches!(
            decreasing.validate(&spec),
            Err(Error::InvalidSequence { index: Some(2), .. })
        ));
        let tspec = turning(&[3, 3, 5, 5], &[1, 2, 2, 4], &[1, 2, 3], &[1, 1, 2]);
        let uncoupled = MatchingSequence::turning(vec![0, 1, 1, 5], vec![0, 0, 2]);
        assert!(uncoupled.validate(&tspec).is_err());
        let good = MatchingSequence::turning(vec![0, 1, 1, 5], vec![0, 0, 3]);
        good.validate(&tspec).unwrap();
    }

    #[test]
    fn notation_parses_and_displays() {
        let m: MatchingSequence = "0,3,3,4,4".parse().unwrap();
        assert_eq!(m, MatchingSequence::monotonic(vec![0, 3, 3, 4, 4]));
        assert_eq!(m.to_string(), "(0,3,3,4,4)");
        let t: MatchingSequence = "(0,1,1,5|0,0,3)".parse().unwrap();
        assert_eq!(t, MatchingSequence::turning(vec![0, 1, 1, 5], vec![0, 0, 3]));
        assert_eq!(t.to_string(), "(0,1,1,5|0,0,3)");
        assert!("0,x".parse::<MatchingSequence>().is_err());
    }

    #[test]
    fn matching_validation_catches_non_matchings() {
        let spec = mono(&[2], &[1]);
        let graph = HexGraph::build(&spec);
        assert!(PerfectMatching::from_edge_ids(&graph, vec![0]).is_err());
        assert!(PerfectMatching::from_edge_ids(&graph, vec![0, 0, 1]).is_err());
        let all = enumerate_matchings(&graph, 10).unwrap();
        for m in &all {
            PerfectMatching::from_edge_ids(&graph, m.edge_ids().to_vec()).unwrap();
        }
    }
}

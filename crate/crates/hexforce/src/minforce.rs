//! Minimum forcing sets of monotonic systems in linear time.
//!
//! The minimum forcing set of a matching can be read off its column
//! sequence in one right-to-left pass. The pass keeps a column budget,
//! initially unbounded. At row j the effective width is the row's width
//! clipped to the budget; three things can happen:
//!
//! * the effective width falls below the row's offset: the row has no
//!   hexagons left, its vertical edge is already implied, move on;
//! * the matching sits strictly left of the effective width: the row's
//!   vertical edge joins the set and the budget drops to its column;
//! * the matching sits exactly at the effective width: the whole run of
//!   rows sharing that column resolves at once, the topmost of them
//!   contributes its right oblique edge, and the budget drops below the
//!   run's column.
//!
//! Every step moves the cursor at least one row up, so the pass takes at
//! most one step per row. The step count is returned for bound checks.

use crate::error::Error;
use crate::graph::{EdgeKind, EdgeLabel};
use crate::spec::ChsSpec;

/// Output of the linear pass: edges in discovery order, last row first,
/// plus the number of loop steps taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumForcingSet {
    pub edges: Vec<EdgeLabel>,
    pub steps: usize,
}

fn validate_columns(spec: &ChsSpec, columns: &[i64]) -> Result<(), Error> {
    if columns.len() != spec.row_count() {
        return Err(Error::InvalidSequence {
            index: None,
            reason: format!("{} values for {} rows", columns.len(), spec.row_count()),
        });
    }
    for (idx, &a) in columns.iter().enumerate() {
        let i = idx + 1;
        let (lo, hi) = (spec.h(i) - 1, spec.k(i));
        if a < lo || a > hi {
            return Err(Error::InvalidSequence {
                index: Some(i),
                reason: format!("value {a} outside {lo}..={hi}"),
            });
        }
        if idx > 0 && a < columns[idx - 1] {
            return Err(Error::InvalidSequence {
                index: Some(i),
                reason: format!("value {a} decreases after {}", columns[idx - 1]),
            });
        }
    }
    Ok(())
}

pub fn minimum_forcing_set(
    spec: &ChsSpec,
    columns: &[i64],
) -> Result<MinimumForcingSet, Error> {
    validate_columns(spec, columns)?;
    let m = spec.row_count();
    // first row of the maximal run of equal columns ending at each row
    let mut run_start = vec![0usize; m];
    for j in 1..m {
        run_start[j] = if columns[j] == columns[j - 1] { run_start[j - 1] } else { j };
    }
    let mut edges = Vec::new();
    let mut steps = 0usize;
    let mut cap = i64::MAX;
    let mut j = m;
    while j >= 1 {
        steps += 1;
        let limit = spec.k(j).min(cap);
        if limit < spec.h(j) {
            j -= 1;
            continue;
        }
        let a = columns[j - 1];
        if a == limit {
            let i = run_start[j - 1] + 1;
            edges.push(EdgeLabel::upper(EdgeKind::RightOblique, i as i64, a));
            cap = spec.k(i).min(cap) - 1;
            j = i - 1;
        } else {
            edges.push(EdgeLabel::upper(EdgeKind::Vertical, j as i64, a));
            cap = cap.min(a);
            j -= 1;
        }
    }
    debug_assert!(steps <= m.max(1));
    Ok(MinimumForcingSet { edges, steps })
}

//! Exhaustive generators over small systems.
//!
//! Cross-checks between the recurrences, the closed forms and the search
//! routines all run over the same families: every monotonic system up to a
//! row count and column bound, and every compatible pairing of two such
//! halves into a system with one turning.

use std::collections::BTreeMap;

use crate::spec::{ChsSpec, RowSpan, TurningChsSpec};

/// Every nonempty monotonic system with at most `max_rows` rows and no
/// column index above `max_k`, in depth-first order of the row lists.
pub fn all_monotonic_specs(max_rows: usize, max_k: i64) -> Vec<ChsSpec> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    grow(&mut rows, max_rows, max_k, &mut out);
    out
}

fn grow(rows: &mut Vec<RowSpan>, max_rows: usize, max_k: i64, out: &mut Vec<ChsSpec>) {
    if !rows.is_empty() {
        out.push(ChsSpec::new(rows.clone()).expect("rows grown monotonically"));
    }
    if rows.len() == max_rows {
        return;
    }
    let (k0, h0) = rows.last().map_or((1, 1), |r| (r.k, r.h));
    for k in k0..=max_k {
        for h in h0..=k {
            rows.push(RowSpan { k, h });
            grow(rows, max_rows, max_k, out);
            rows.pop();
        }
    }
}

/// Every system with one turning whose halves each have between 2 and
/// `max_rows` rows and columns bounded by `max_k`. Halves pair up exactly
/// when their last rows span the same number of columns.
pub fn all_turning_specs(max_rows: usize, max_k: i64) -> Vec<TurningChsSpec> {
    let mut by_span: BTreeMap<i64, Vec<ChsSpec>> = BTreeMap::new();
    for spec in all_monotonic_specs(max_rows, max_k) {
        let m = spec.row_count();
        if m < 2 {
            continue;
        }
        by_span.entry(spec.k(m) - spec.h(m)).or_default().push(spec);
    }
    let mut out = Vec::new();
    for halves in by_span.values() {
        for upper in halves {
            for lower in halves {
                out.push(
                    TurningChsSpec::new(upper.clone(), lower.clone())
                        .expect("spans match by construction"),
                );
            }
        }
    }
    out
}

//! Forcing polynomials, forcing spectra and minimum forcing sets of
//! constructable hexagonal systems.
//!
//! A forcing set of a perfect matching `M` is a subset `S` of `M` contained
//! in no other perfect matching of the graph; the forcing number `f(G,M)`
//! is the smallest size of one. The forcing polynomial collects the whole
//! distribution,
//!
//! ```text
//! F(G,x) = sum over perfect matchings M of x^f(G,M),
//! ```
//!
//! and its exponent support is the forcing spectrum. For constructable
//! hexagonal systems, rows of hexagons with non-decreasing ends, stacked
//! either monotonically or with one turning, `F` satisfies recurrence
//! relations that this crate implements next to definition-level brute
//! force, so each engine can check the other.
//!
//! Entry points:
//!
//! * [`spec::ChsSpec`] and [`spec::TurningChsSpec`] describe systems by
//!   their row parameters; [`graph::HexGraph`] realizes them as labeled
//!   plane graphs.
//! * [`matching`] maps perfect matchings to monotone column sequences and
//!   back, enumerates and counts them.
//! * [`recurrence`] evaluates the forcing polynomial by peeling rows;
//!   [`oracle`] recomputes everything by exhaustive search.
//! * [`minforce`] builds one minimum forcing set of a given matching in
//!   time linear in the number of rows.
//!
//! The `examples/` directory exercises each capability end to end; the
//! `hexforce` binary wraps them in a small command line interface.

pub mod cli;
mod error;
pub mod graph;
pub mod matching;
pub mod minforce;
pub mod oracle;
pub mod poly;
pub mod recurrence;
pub mod spec;
pub mod sweep;

pub use error::Error;
pub use graph::{EdgeKind, EdgeLabel, Half, HexGraph, HexId, Vertex};
pub use matching::{MatchingSequence, PerfectMatching};
pub use poly::Polynomial;
pub use spec::{AnySpec, ChsSpec, RowSpan, TurningChsSpec};

/// Default cap on the number of perfect matchings any exhaustive routine
/// will enumerate. The `FORCING_BUDGET` environment variable overrides it
/// in the command line interface.
pub const DEFAULT_MATCHING_BUDGET: u128 = 20_000;

//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A row parameter sequence violates the shape constraints. `row` is
    /// the 1-based index of the offending row when one can be singled out.
    InvalidSpec { row: Option<usize>, reason: String },
    /// The two halves of a turning system do not end in rows of equal
    /// length: `k_m - h_m` must equal `k'_{m'} - h'_{m'}`.
    CouplingMismatch { upper_span: i64, lower_span: i64 },
    /// A turning system needs at least two rows in each half. A one-row
    /// half folds into the other half as extra monotonic rows, so the
    /// caller should restate the input as a plain monotonic system.
    TurningHalfTooShort { half: &'static str, rows: usize },
    /// A matching sequence violates its range, monotonicity or coupling
    /// constraints. `index` is the 1-based row when one can be singled out.
    InvalidSequence { index: Option<usize>, reason: String },
    /// An edge set handed to the oracle is not a perfect matching.
    NotAPerfectMatching(String),
    /// A candidate forcing set contains an edge outside the matching.
    NotInMatching(String),
    /// A hexagon or edge name that does not exist in the graph.
    UnknownName(String),
    /// No row of the system touches the requested column.
    ColumnUntouched(i64),
    /// Enumeration would exceed the matching-count budget.
    BudgetExceeded { required: u128, budget: u128 },
    /// The zigzag walk is only defined when the rows next to the turning
    /// row keep it tight: `k_{m-1} + k'_{m'-1} = k_m + k'_{m'}`.
    NotTightCorner,
    /// A scalar argument outside its admissible range.
    InvalidParameter(String),
    /// Malformed textual input (JSON spec, matching notation).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSpec { row: Some(r), reason } => {
                write!(f, "invalid spec at row {r}: {reason}")
            }
            Error::InvalidSpec { row: None, reason } => write!(f, "invalid spec: {reason}"),
            Error::CouplingMismatch { upper_span, lower_span } => write!(
                f,
                "turning halves must end in rows of equal length: \
                 upper k_m - h_m = {upper_span}, lower k'_m' - h'_m' = {lower_span}"
            ),
            Error::TurningHalfTooShort { half, rows } => write!(
                f,
                "{half} half has {rows} row(s); a turning system needs at least two per half \
                 (fold a one-row half into the other half and use a monotonic spec)"
            ),
            Error::InvalidSequence { index: Some(i), reason } => {
                write!(f, "invalid matching sequence at row {i}: {reason}")
            }
            Error::InvalidSequence { index: None, reason } => {
                write!(f, "invalid matching sequence: {reason}")
            }
            Error::NotAPerfectMatching(why) => write!(f, "not a perfect matching: {why}"),
            Error::NotInMatching(name) => {
                write!(f, "edge {name} is not part of the matching")
            }
            Error::UnknownName(name) => write!(f, "no such hexagon or edge: {name}"),
            Error::ColumnUntouched(z) => write!(f, "no row contains column {z}"),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration budget exceeded: {required} matchings, budget {budget} \
                 (raise FORCING_BUDGET or pass a larger budget)"
            ),
            Error::NotTightCorner => write!(
                f,
                "zigzag walk undefined: rows next to the turning row leave slack \
                 (k_m-1 + k'_m'-1 < k_m + k'_m')"
            ),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::Parse(why) => write!(f, "parse error: {why}"),
        }
    }
}

impl std::error::Error for Error {}

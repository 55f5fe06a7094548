//! Row-parameter descriptions of constructable hexagonal systems.
//!
//! A monotonic system `CHS(k_1,..,k_m; h_1,..,h_m)` has rows numbered from
//! the top; row `i` holds the hexagons in columns `h_i..=k_i`, columns grow
//! to the left, and both parameter sequences are non-decreasing with
//! `k_i >= h_i >= 1`. A system with one turning glues a second monotonic
//! half under the first so that the last rows of the two halves coincide,
//! which forces `k_m - h_m = k'_{m'} - h'_{m'}`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// One row of hexagons, occupying columns `h..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RowSpan {
    pub k: i64,
    pub h: i64,
}

/// A monotonic constructable hexagonal system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawChsSpec")]
pub struct ChsSpec {
    rows: Vec<RowSpan>,
}

#[derive(Deserialize)]
struct RawChsSpec {
    rows: Vec<RowSpan>,
}

impl TryFrom<RawChsSpec> for ChsSpec {
    type Error = Error;
    fn try_from(raw: RawChsSpec) -> Result<Self, Error> {
        ChsSpec::new(raw.rows)
    }
}

impl ChsSpec {
    /// Validate the shape constraints and build the spec. The empty spec
    /// is allowed; it describes the empty graph with one (empty) matching.
    pub fn new(rows: Vec<RowSpan>) -> Result<Self, Error> {
        for (idx, row) in rows.iter().enumerate() {
            let at = |reason: String| Error::InvalidSpec { row: Some(idx + 1), reason };
            if row.h < 1 {
                return Err(at(format!("h must be at least 1, got {}", row.h)));
            }
            if row.k < row.h {
                return Err(at(format!("k must be at least h, got k={} h={}", row.k, row.h)));
            }
            if idx > 0 {
                let prev = rows[idx - 1];
                if row.k < prev.k {
                    return Err(at(format!(
                        "k must be non-decreasing, got {} after {}",
                        row.k, prev.k
                    )));
                }
                if row.h < prev.h {
                    return Err(at(format!(
                        "h must be non-decreasing, got {} after {}",
                        row.h, prev.h
                    )));
                }
            }
        }
        Ok(ChsSpec { rows })
    }

    /// Build from parallel `k` and `h` sequences.
    pub fn from_params(ks: &[i64], hs: &[i64]) -> Result<Self, Error> {
        if ks.len() != hs.len() {
            return Err(Error::InvalidSpec {
                row: None,
                reason: format!("{} k values but {} h values", ks.len(), hs.len()),
            });
        }
        Self::new(ks.iter().zip(hs).map(|(&k, &h)| RowSpan { k, h }).collect())
    }

    pub fn rows(&self) -> &[RowSpan] {
        &self.rows
    }

    /// Number of rows, `m`.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `k_i`, 1-based.
    pub fn k(&self, i: usize) -> i64 {
        self.rows[i - 1].k
    }

    /// `h_i`, 1-based.
    pub fn h(&self, i: usize) -> i64 {
        self.rows[i - 1].h
    }

    pub fn hexagon_count(&self) -> u64 {
        self.rows.iter().map(|r| (r.k - r.h + 1) as u64).sum()
    }

    /// Whether hexagon `C_{row,col}` exists.
    pub fn hexagon_exists(&self, row: i64, col: i64) -> bool {
        row >= 1
            && (row as usize) <= self.rows.len()
            && self.rows[row as usize - 1].h <= col
            && col <= self.rows[row as usize - 1].k
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        parse_json_spec(text)?.into_monotonic()
    }
}

impl fmt::Display for ChsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHS(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r.k)?;
        }
        write!(f, ";")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r.h)?;
        }
        write!(f, ")")
    }
}

/// A constructable hexagonal system with one turning. The lower half is
/// drawn mirrored below the upper half and the two last rows are pasted
/// together into the turning row, so the turning row's hexagons carry both
/// an upper name `C_{m,j}` and a lower name `C'_{m',j-h_m+h'_{m'}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTurningSpec")]
pub struct TurningChsSpec {
    upper: ChsSpec,
    lower: ChsSpec,
}

#[derive(Deserialize)]
struct RawTurningSpec {
    upper: ChsSpec,
    lower: ChsSpec,
}

impl TryFrom<RawTurningSpec> for TurningChsSpec {
    type Error = Error;
    fn try_from(raw: RawTurningSpec) -> Result<Self, Error> {
        TurningChsSpec::new(raw.upper, raw.lower)
    }
}

impl TurningChsSpec {
    pub fn new(upper: ChsSpec, lower: ChsSpec) -> Result<Self, Error> {
        if upper.row_count() < 2 {
            return Err(Error::TurningHalfTooShort { half: "upper", rows: upper.row_count() });
        }
        if lower.row_count() < 2 {
            return Err(Error::TurningHalfTooShort { half: "lower", rows: lower.row_count() });
        }
        let m = upper.row_count();
        let mp = lower.row_count();
        let upper_span = upper.k(m) - upper.h(m);
        let lower_span = lower.k(mp) - lower.h(mp);
        if upper_span != lower_span {
            return Err(Error::CouplingMismatch { upper_span, lower_span });
        }
        Ok(TurningChsSpec { upper, lower })
    }

    pub fn upper(&self) -> &ChsSpec {
        &self.upper
    }

    pub fn lower(&self) -> &ChsSpec {
        &self.lower
    }

    /// Column offset between the two names of a turning-row hexagon:
    /// `C_{m,j} = C'_{m',j-delta}`.
    pub fn delta(&self) -> i64 {
        self.upper.h(self.upper.row_count()) - self.lower.h(self.lower.row_count())
    }

    /// Hexagons of both halves, counting the shared turning row once.
    pub fn hexagon_count(&self) -> u64 {
        let lower_rest: u64 = self.lower.rows[..self.lower.row_count() - 1]
            .iter()
            .map(|r| (r.k - r.h + 1) as u64)
            .sum();
        self.upper.hexagon_count() + lower_rest
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        parse_json_spec(text)?.into_turning()
    }
}

impl fmt::Display for TurningChsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let up = self.upper.to_string();
        let lo = self.lower.to_string();
        write!(f, "CHS({}|{})", &up[4..up.len() - 1], &lo[4..lo.len() - 1])
    }
}

/// Either kind of system, for interfaces that accept both.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnySpec {
    Turning(TurningChsSpec),
    Monotonic(ChsSpec),
}

impl AnySpec {
    pub fn hexagon_count(&self) -> u64 {
        match self {
            AnySpec::Monotonic(s) => s.hexagon_count(),
            AnySpec::Turning(s) => s.hexagon_count(),
        }
    }

    fn into_monotonic(self) -> Result<ChsSpec, Error> {
        match self {
            AnySpec::Monotonic(s) => Ok(s),
            AnySpec::Turning(_) => {
                Err(Error::Parse("expected a monotonic spec, got a turning spec".into()))
            }
        }
    }

    fn into_turning(self) -> Result<TurningChsSpec, Error> {
        match self {
            AnySpec::Turning(s) => Ok(s),
            AnySpec::Monotonic(_) => {
                Err(Error::Parse("expected a turning spec, got a monotonic spec".into()))
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    /// Parse a JSON spec: `{"rows":[{"k":..,"h":..},..]}` for a monotonic
    /// system, `{"upper":{..},"lower":{..}}` for one with a turning. An
    /// object with a `spec` field is unwrapped first, so the output of
    /// `describe --format json` can be fed back in.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        parse_json_spec(text)
    }
}

impl fmt::Display for AnySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySpec::Monotonic(s) => s.fmt(f),
            AnySpec::Turning(s) => s.fmt(f),
        }
    }
}

fn parse_json_spec(text: &str) -> Result<AnySpec, Error> {
    let mut value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    if let Some(inner) = value.get_mut("spec") {
        value = inner.take();
    }
    let parse = |v: serde_json::Value| -> Result<AnySpec, Error> {
        if v.get("rows").is_some() {
            serde_json::from_value::<ChsSpec>(v)
                .map(AnySpec::Monotonic)
                .map_err(|e| Error::Parse(e.to_string()))
        } else if v.get("upper").is_some() || v.get("lower").is_some() {
            serde_json::from_value::<TurningChsSpec>(v)
                .map(AnySpec::Turning)
                .map_err(|e| Error::Parse(e.to_string()))
        } else {
            Err(Error::Parse(
                "spec object needs either a \"rows\" field or \"upper\" and \"lower\" fields"
                    .into(),
            ))
        }
    };
    parse(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(ks: &[i64], hs: &[i64]) -> ChsSpec {
        ChsSpec::from_params(ks, hs).unwrap()
    }

    #[test]
    fn accepts_the_five_row_example() {
        let s = spec(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]);
        assert_eq!(s.row_count(), 5);
        assert_eq!(s.hexagon_count(), 14);
        assert_eq!(s.to_string(), "CHS(3,3,3,4,5;1,1,2,2,3)");
        assert!(s.hexagon_exists(5, 5));
        assert!(!s.hexagon_exists(5, 2));
        assert!(!s.hexagon_exists(6, 3));
    }

    #[test]
    fn rejects_decreasing_k() {
        let err = ChsSpec::from_params(&[2, 1], &[1, 1]).unwrap_err();
        match err {
            Error::InvalidSpec { row: Some(2), .. } => {}
            other => panic!("wrong error: {other:?}"),
        }
    }

    #[test]
    fn rejects_k_below_h() {
        let err = ChsSpec::from_params(&[2, 2], &[1, 3]).unwrap_err();
        match err {
            Error::InvalidSpec { row: Some(2), .. } => {}
            other => panic!("wrong error: {other:?}"),
        }
    }

    #[test]
    fn rejects_nonpositive_h() {
        let err = ChsSpec::from_params(&[2], &[0]).unwrap_err();
        match err {
            Error::InvalidSpec { row: Some(1), .. } => {}
            other => panic!("wrong error: {other:?}"),
        }
    }

    #[test]
    fn empty_spec_is_allowed() {
        let s = ChsSpec::new(vec![]).unwrap();
        assert_eq!(s.hexagon_count(), 0);
    }

    #[test]
    fn turning_accepts_the_running_example() {
        let up = spec(&[3, 3, 5, 5], &[1, 2, 2, 4]);
        let lo = spec(&[1, 2, 3], &[1, 1, 2]);
        let t = TurningChsSpec::new(up, lo).unwrap();
        assert_eq!(t.delta(), 2);
        assert_eq!(t.to_string(), "CHS(3,3,5,5;1,2,2,4|1,2,3;1,1,2)");
        // 11 upper hexagons plus lower rows 1 and 2 (the lower last row is
        // the turning row, already counted).
        assert_eq!(t.hexagon_count(), 11 + 1 + 2);
    }

    #[test]
    fn turning_rejects_coupling_mismatch() {
        let up = spec(&[3, 3], &[1, 1]);
        let lo = spec(&[2, 2], &[1, 2]);
        match TurningChsSpec::new(up, lo).unwrap_err() {
            Error::CouplingMismatch { upper_span: 2, lower_span: 0 } => {}
            other => panic!("wrong error: {other:?}"),
        }
    }

    #[test]
    fn turning_rejects_single_row_half_with_hint() {
        let up = spec(&[3, 3], &[1, 1]);
        let lo = spec(&[3], &[1]);
        let err = TurningChsSpec::new(up, lo).unwrap_err();
        assert!(matches!(err, Error::TurningHalfTooShort { half: "lower", rows: 1 }));
        assert!(err.to_string().contains("monotonic"));
    }

    #[test]
    fn json_round_trip_monotonic() {
        let s = spec(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]);
        let text = s.to_json();
        assert_eq!(ChsSpec::from_json(&text).unwrap(), s);
        let any = AnySpec::from_json(&text).unwrap();
        assert_eq!(any, AnySpec::Monotonic(s));
    }

    #[test]
    fn json_round_trip_turning() {
        let t = TurningChsSpec::new(
            spec(&[3, 3, 5, 5], &[1, 2, 2, 4]),
            spec(&[1, 2, 3], &[1, 1, 2]),
        )
        .unwrap();
        let text = t.to_json();
        assert_eq!(TurningChsSpec::from_json(&text).unwrap(), t);
    }

    #[test]
    fn json_rejects_invalid_rows() {
        let err = ChsSpec::from_json(r#"{"rows":[{"k":2,"h":1},{"k":1,"h":1}]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn json_unwraps_describe_output() {
        let wrapped = r#"{"spec":{"rows":[{"k":2,"h":1}]},"hexagons":2}"#;
        let any = AnySpec::from_json(wrapped).unwrap();
        assert_eq!(any, AnySpec::Monotonic(spec(&[2], &[1])));
    }
}

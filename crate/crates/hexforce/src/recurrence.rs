//! Recurrence engines for forcing polynomials.
//!
//! The engines never look at the graph. For a monotonic system, condition
//! on the vertical edge the matching uses in the last row: each choice
//! contributes one forced edge (a factor of x) and reduces the system to a
//! column-capped prefix of its rows, giving a recurrence that closes over
//! row lists. A system with one turning needs a single conditioning step
//! on the turning row's vertical edge and then falls back to monotonic
//! subproblems for both halves; when the corner hexagon is flanked on both
//! sides the halves overlap along a zigzag of hexagons around the corner,
//! whose contributions telescope with alternating corrections.
//!
//! Row lists are normalized by dropping rows whose capped width falls
//! below their offset; such rows are always a suffix and carry no
//! hexagons. The empty system has forcing polynomial 1.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::Error;
use crate::poly::Polynomial;
use crate::spec::{AnySpec, ChsSpec, TurningChsSpec};

/// Row list as (k, h) pairs, the memo key.
type Rows = Vec<(i64, i64)>;

fn row_pairs(spec: &ChsSpec) -> Rows {
    spec.rows().iter().map(|r| (r.k, r.h)).collect()
}

/// Drop trailing rows with k < h. A cap never strands an interior row:
/// capped k falls below h only where the cap is below h, and offsets are
/// non-decreasing.
fn normalized(mut rows: Rows) -> Rows {
    while rows.last().is_some_and(|&(k, h)| k < h) {
        rows.pop();
    }
    debug_assert!(rows.iter().all(|&(k, h)| k >= h));
    rows
}

/// First `len` rows with every width capped at `cap`, normalized.
fn capped(rows: &[(i64, i64)], len: usize, cap: i64) -> Rows {
    normalized(rows[..len].iter().map(|&(k, h)| (k.min(cap), h)).collect())
}

/// First `len` rows uncapped.
fn prefix(rows: &[(i64, i64)], len: usize) -> Rows {
    normalized(rows[..len].to_vec())
}

/// 1-based index of the topmost row whose span contains the column, if
/// any. Both k and h are non-decreasing, so the rows containing a column
/// are consecutive.
fn first_row_with_column(rows: &[(i64, i64)], col: i64) -> Option<usize> {
    rows.iter()
        .position(|&(k, h)| h <= col && col <= k)
        .map(|idx| idx + 1)
}

/// Number of hexagons on the zigzag walk that starts at the last row's
/// last hexagon and alternates left and up-left: C_{m,k}, C_{m-1,k},
/// C_{m-1,k-1}, C_{m-2,k-1}, ... The walk stops at the first missing
/// hexagon.
fn zigzag_walk_length(rows: &[(i64, i64)]) -> usize {
    let m = rows.len() as i64;
    let last_col = rows[rows.len() - 1].0;
    let mut n = 0usize;
    for u in 1.. {
        let row = m - u / 2;
        let col = last_col - (u - 1) / 2;
        let exists =
            row >= 1 && rows[(row - 1) as usize].1 <= col && col <= rows[(row - 1) as usize].0;
        if !exists {
            break;
        }
        n = u as usize;
    }
    n
}

/// How the two halves of a turning system meet at the far end of the
/// turning row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TurningShape {
    /// The corner hexagon sticks out past both neighboring rows:
    /// k_{m-1} + k'_{m'-1} < k_m + k'_{m'}. Conditioning on the turning
    /// row splits every matching into independent halves.
    SlackCorner,
    /// Both neighboring rows reach the corner column, so matchings using
    /// the last vertical edge couple the halves along a zigzag walk of
    /// hexagons around the corner.
    TightCorner {
        /// Hexagons on the maximal zigzag walk from the corner, always
        /// at least 2.
        zigzag_hexagons: usize,
    },
}

pub fn turning_shape(spec: &TurningChsSpec) -> TurningShape {
    let up = row_pairs(spec.upper());
    let lo = row_pairs(spec.lower());
    let m = up.len();
    let mp = lo.len();
    if up[m - 2].0 + lo[mp - 2].0 < up[m - 1].0 + lo[mp - 1].0 {
        TurningShape::SlackCorner
    } else {
        TurningShape::TightCorner { zigzag_hexagons: zigzag_walk_length(&up) }
    }
}

/// Length of the maximal zigzag walk from the corner hexagon, defined
/// only for the tight-corner shape.
pub fn maximal_zigzag_length(spec: &TurningChsSpec) -> Result<usize, Error> {
    match turning_shape(spec) {
        TurningShape::TightCorner { zigzag_hexagons } => Ok(zigzag_hexagons),
        TurningShape::SlackCorner => Err(Error::NotTightCorner),
    }
}

/// Memoizing recurrence engine. Reuse one instance across related calls;
/// subproblems overlap heavily between systems sharing row prefixes.
#[derive(Default)]
pub struct Engine {
    memo: HashMap<Rows, Polynomial>,
}

impl Engine {
    pub fn new() -> Self {
        Engine { memo: HashMap::new() }
    }

    pub fn forcing_polynomial(&mut self, spec: &AnySpec) -> Polynomial {
        match spec {
            AnySpec::Monotonic(s) => self.monotonic(s),
            AnySpec::Turning(t) => self.turning(t),
        }
    }

    pub fn monotonic(&mut self, spec: &ChsSpec) -> Polynomial {
        self.eval(normalized(row_pairs(spec)))
    }

    /// F over a normalized row list. Condition on the last row's vertical
    /// edge e_{m,i}: for i < k_m the rest of the system is the first m-1
    /// rows capped at i; for i = k_m the top edge of the column-k_m
    /// hexagons is forced row by row up to the first row j holding that
    /// column, leaving the first j-1 rows capped at k_m - 1. Either way
    /// one more edge lands in the minimum forcing set, hence the factor x.
    fn eval(&mut self, rows: Rows) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one();
        }
        if let Some(hit) = self.memo.get(&rows) {
            return hit.clone();
        }
        let m = rows.len();
        let (k_m, h_m) = rows[m - 1];
        let mut acc = Polynomial::zero();
        for i in (h_m - 1)..=(k_m - 1) {
            let sub = self.eval(capped(&rows, m - 1, i));
            acc += &sub;
        }
        let p = first_row_with_column(&rows, k_m).expect("own row holds its last column");
        for j in p..=m {
            let sub = self.eval(capped(&rows, j - 1, k_m - 1));
            acc += &sub;
        }
        acc.shift_up(1);
        self.memo.insert(rows, acc.clone());
        acc
    }

    pub fn turning(&mut self, spec: &TurningChsSpec) -> Polynomial {
        let up = row_pairs(spec.upper());
        let lo = row_pairs(spec.lower());
        let m = up.len();
        let mp = lo.len();
        let (k_m, h_m) = up[m - 1];
        let (k_q, h_q) = lo[mp - 1];
        let delta = h_m - h_q;

        let mut total = Polynomial::zero();

        // Turning-row vertical edge left of the last column: both halves
        // cap at the chosen column and decouple.
        let mut inner = Polynomial::zero();
        for i in (h_m - 1)..=(k_m - 1) {
            let a = self.eval(capped(&up, m - 1, i));
            let b = self.eval(capped(&lo, mp - 1, i - delta));
            inner += &(&a * &b);
        }
        inner.shift_up(1);
        total += &inner;

        let p = first_row_with_column(&up, k_m).expect("own row holds its last column");
        let q = first_row_with_column(&lo, k_q).expect("own row holds its last column");

        match turning_shape(spec) {
            TurningShape::SlackCorner => {
                // e_{m,k_m} in the matching: the corner hexagon forces
                // independently into each half, by the topmost row of the
                // last column on either side.
                let mut inner = Polynomial::zero();
                for j in p..=m {
                    let a = self.eval(capped(&up, j - 1, k_m - 1));
                    for i in q..=mp {
                        let b = self.eval(capped(&lo, i - 1, k_q - 1));
                        inner += &(&a * &b);
                    }
                }
                inner.shift_up(1);
                total += &inner;
            }
            TurningShape::TightCorner { zigzag_hexagons: n } => {
                // Both halves reach the corner: conditioning runs along
                // the zigzag walk, with inclusion-exclusion where the two
                // halves both claim the corner.
                let h_up_prev = up[m - 2].1;
                let h_lo_prev = lo[mp - 2].1;

                let mut p1 = Polynomial::zero();
                for j in p..=(m - 1) {
                    let a = self.eval(capped(&up, j - 1, k_m - 1));
                    let b = self.eval(prefix(&lo, mp - 1));
                    p1 += &(&a * &b);
                }
                p1.shift_up(1);
                total += &p1;

                let mut p2 = Polynomial::zero();
                for j in q..=(mp - 1) {
                    let a = self.eval(prefix(&up, m - 1));
                    let b = self.eval(capped(&lo, j - 1, k_q - 1));
                    p2 += &(&a * &b);
                }
                p2.shift_up(1);
                total += &p2;

                let mut p3 = Polynomial::zero();
                for i in p..=(m - 1) {
                    let a = self.eval(capped(&up, i - 1, k_m - 1));
                    for j in q..=(mp - 1) {
                        let b = self.eval(capped(&lo, j - 1, k_q - 1));
                        p3 += &(&a * &b);
                    }
                }
                p3.shift_up(2);
                total -= &p3;

                let mut p4 = Polynomial::zero();
                for i in (h_up_prev - 1)..=(k_m - 2) {
                    let a = self.eval(capped(&up, m - 2, i));
                    let b = self.eval(capped(&lo, mp - 1, k_q - 1));
                    p4 += &(&a * &b);
                }
                p4.shift_up(2);
                total += &p4;

                for w in 1..=(n / 2).saturating_sub(1) {
                    let p_w = first_row_with_column(&up, k_m - w as i64)
                        .expect("zigzag walk column exists");

                    let mut casc_a = Polynomial::zero();
                    for i in p_w..=(m - w - 1) {
                        let a = self.eval(capped(&up, i - 1, k_m - w as i64 - 1));
                        for j in (h_lo_prev - 1)..=(k_q - 1) {
                            let b = self.eval(capped(&lo, mp - 2, j));
                            casc_a += &(&a * &b);
                        }
                    }
                    casc_a.shift_up(w + 2);
                    total += &casc_a;

                    let mut casc_b = Polynomial::zero();
                    for i in (up[m - w - 2].1 - 1)..=(k_m - w as i64 - 2) {
                        let a = self.eval(capped(&up, m - w - 2, i));
                        let b = self.eval(capped(&lo, mp - 1, k_q - 1));
                        casc_b += &(&a * &b);
                    }
                    casc_b.shift_up(w + 2);
                    total += &casc_b;
                }

                // walk's end: both parities leave one last coupled block
                let mut tail = Polynomial::zero();
                if n.is_multiple_of(2) {
                    for j in (h_lo_prev - 1)..=(k_q - 1) {
                        let a = self.eval(capped(&up, m - n / 2 - 1, k_m - (n / 2) as i64));
                        let b = self.eval(capped(&lo, mp - 2, j));
                        tail += &(&a * &b);
                    }
                    tail.shift_up(n / 2 + 1);
                } else {
                    let a = self.eval(prefix(&up, m - n.div_ceil(2)));
                    let b = self.eval(capped(&lo, mp - 1, k_q - 1));
                    tail += &(&a * &b);
                    tail.shift_up(n.div_ceil(2));
                }
                total += &tail;
            }
        }

        assert!(
            !total.has_negative_coeff(),
            "turning recurrence produced a negative coefficient for {spec}"
        );
        assert!(
            total.min_exponent().is_some_and(|e| e >= 1),
            "every matching of a turning system needs at least one forced edge"
        );
        total
    }
}

/// One-shot convenience over a fresh engine.
pub fn forcing_polynomial(spec: &AnySpec) -> Polynomial {
    Engine::new().forcing_polynomial(spec)
}

/// Linear chain of k hexagons in one row: k+1 matchings, each forced by
/// one edge.
pub fn linear_chain_spec(k: i64) -> ChsSpec {
    if k == 0 {
        ChsSpec::from_params(&[], &[]).unwrap()
    } else {
        ChsSpec::from_params(&[k], &[1]).unwrap()
    }
}

pub fn linear_chain_polynomial(k: i64) -> Polynomial {
    if k == 0 {
        Polynomial::one()
    } else {
        Polynomial::monomial(1, BigInt::from(k + 1))
    }
}

/// Zigzag chain of n hexagons, alternating right and down-right.
pub fn zigzag_spec(n: usize) -> ChsSpec {
    match n {
        0 => ChsSpec::from_params(&[], &[]).unwrap(),
        1 => ChsSpec::from_params(&[1], &[1]).unwrap(),
        n if n % 2 == 0 => {
            let k = (n / 2) as i64;
            let mut ks: Vec<i64> = (1..=k).collect();
            ks.push(k);
            let mut hs = vec![1];
            hs.extend(1..=k);
            ChsSpec::from_params(&ks, &hs).unwrap()
        }
        n => {
            let k = n.div_ceil(2) as i64;
            let mut ks: Vec<i64> = (2..=k).collect();
            ks.push(k);
            let hs: Vec<i64> = (1..=k).collect();
            ChsSpec::from_params(&ks, &hs).unwrap()
        }
    }
}

/// F(Z_n) = 2 F(Z_{n-2}) x + F(Z_{n-3}) x, from conditioning on the last
/// hexagon of the chain.
pub fn zigzag_polynomial(n: usize) -> Polynomial {
    let mut history = vec![
        Polynomial::one(),
        Polynomial::monomial(1, BigInt::from(2)),
        Polynomial::monomial(1, BigInt::from(3)),
    ];
    for i in 3..=n {
        let mut term = &(&history[i - 2] + &history[i - 2]) + &history[i - 3];
        term.shift_up(1);
        history.push(term);
    }
    history[n].clone()
}

/// Parallelogram with k columns and m rows of hexagons. Zero columns or
/// zero rows leave nothing.
pub fn parallelogram_spec(k: i64, m: usize) -> ChsSpec {
    if k == 0 || m == 0 {
        return ChsSpec::from_params(&[], &[]).unwrap();
    }
    ChsSpec::from_params(&vec![k; m], &vec![1; m]).unwrap()
}

/// F(M(k,m)) by its own two-parameter recurrence, independent of the
/// row-list engine.
pub fn parallelogram_polynomial(k: usize, m: usize) -> Polynomial {
    let mut table = vec![vec![Polynomial::zero(); m + 1]; k + 1];
    for row in table.iter_mut() {
        row[0] = Polynomial::one();
    }
    table[0] = vec![Polynomial::one(); m + 1];
    for a in 1..=k {
        for b in 1..=m {
            let mut acc = Polynomial::zero();
            for row in table.iter().take(a) {
                acc += &row[b - 1];
            }
            for entry in table[a - 1].iter().take(b) {
                acc += entry;
            }
            acc.shift_up(1);
            table[a][b] = acc;
        }
    }
    table[k][m].clone()
}

/// Rows of widths ks, all starting at column 1.
pub fn truncated_parallelogram_spec(ks: &[i64]) -> Result<ChsSpec, Error> {
    ChsSpec::from_params(ks, &vec![1; ks.len()])
}

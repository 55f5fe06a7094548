//! Acceptance suite: one test per claim the crate stands on, each printing
//! a pass line with its runtime (visible under --nocapture) and enforcing
//! a wall-clock budget pinned below.
//!
//! 1. closed-form families match the engine exactly;
//! 2. the five-row walkthrough system checks out end to end;
//! 3. the monotonic engine equals brute force on an exhaustive sweep
//!    plus seeded random systems;
//! 4. the turning engine equals brute force likewise, with both corner
//!    shapes present;
//! 5. subset-search forcing numbers equal maximum disjoint
//!    alternating-cycle counts;
//! 6. truncated-parallelogram spectra are gap-free intervals while the
//!    wide-row column family skips 2;
//! 7. the linear minimum-forcing-set pass takes O(rows) steps;
//! 8. the sequence bijection round-trips and counting matches
//!    evaluation at one.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hexforce::matching::{
    count_matchings, enumerate_sequences, matching_to_sequence, sequence_to_matching,
    MatchingSequence,
};
use hexforce::oracle;
use hexforce::recurrence::{
    linear_chain_polynomial, parallelogram_polynomial, parallelogram_spec, turning_shape,
    zigzag_polynomial, zigzag_spec, Engine, TurningShape,
};
use hexforce::sweep::{all_monotonic_specs, all_turning_specs};
use hexforce::{
    minforce, AnySpec, ChsSpec, Half, HexGraph, HexId, Polynomial, TurningChsSpec,
    DEFAULT_MATCHING_BUDGET,
};

const SEED: u64 = 0x6865_7866_6f72_6365; // "hexforce"
const FAMILY_LIMIT: Duration = Duration::from_secs(1);
const WALKTHROUGH_LIMIT: Duration = Duration::from_secs(1);
const MONOTONIC_SWEEP_LIMIT: Duration = Duration::from_secs(60);
const TURNING_SWEEP_LIMIT: Duration = Duration::from_secs(120);
const PACKING_SWEEP_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_MONOTONIC: usize = 200;
const RANDOM_TURNING: usize = 100;
/// Linear fit of pass steps against row count must leave under 10%
/// relative residual.
const LINEAR_FIT_RESIDUAL: f64 = 0.10;

fn done(name: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    println!("{name}: pass ({elapsed:.2?})");
    assert!(elapsed < limit, "{name} took {elapsed:?}, budget {limit:?}");
}

fn mono(ks: &[i64], hs: &[i64]) -> AnySpec {
    AnySpec::Monotonic(ChsSpec::from_params(ks, hs).unwrap())
}

fn random_monotonic(rng: &mut ChaCha8Rng, max_rows: usize, max_k: i64) -> ChsSpec {
    let m = rng.gen_range(1..=max_rows);
    let mut ks = Vec::with_capacity(m);
    let mut hs = Vec::with_capacity(m);
    let (mut k0, mut h0) = (1, 1);
    for _ in 0..m {
        let k = rng.gen_range(k0..=max_k);
        let h = rng.gen_range(h0..=k);
        ks.push(k);
        hs.push(h);
        k0 = k;
        h0 = h;
    }
    ChsSpec::from_params(&ks, &hs).unwrap()
}

fn random_turning(rng: &mut ChaCha8Rng, max_rows: usize, max_k: i64) -> TurningChsSpec {
    loop {
        let upper = random_monotonic(rng, max_rows, max_k);
        let m = upper.row_count();
        if m < 2 {
            continue;
        }
        let span = upper.k(m) - upper.h(m);
        let mp = rng.gen_range(2..=max_rows);
        let prefix = random_monotonic(rng, mp - 1, max_k);
        let t = prefix.row_count();
        let h_min = 1.max(prefix.h(t)).max(prefix.k(t) - span);
        let h_max = max_k - span;
        if h_min > h_max {
            continue;
        }
        let h = rng.gen_range(h_min..=h_max);
        let mut ks: Vec<i64> = (1..=t).map(|i| prefix.k(i)).collect();
        let mut hs: Vec<i64> = (1..=t).map(|i| prefix.h(i)).collect();
        ks.push(h + span);
        hs.push(h);
        let lower = match ChsSpec::from_params(&ks, &hs) {
            Ok(lower) => lower,
            Err(_) => continue,
        };
        match TurningChsSpec::new(upper.clone(), lower) {
            Ok(spec) => return spec,
            Err(_) => continue,
        }
    }
}

fn engine_matches_oracle(engine: &mut Engine, spec: &AnySpec) {
    let fast = engine.forcing_polynomial(spec);
    let graph = HexGraph::build(spec);
    let slow = oracle::forcing_polynomial(&graph, DEFAULT_MATCHING_BUDGET)
        .unwrap_or_else(|e| panic!("oracle failed on {spec}: {e}"));
    assert_eq!(fast, slow, "engines disagree on {spec}");
}

#[test]
fn acceptance_1_closed_form_families() {
    let start = Instant::now();
    let mut engine = Engine::new();

    // Linear chains: one row of k hexagons, polynomial (k+1)x.
    for k in 1..=10 {
        let expected = Polynomial::monomial(1, BigInt::from(k + 1));
        assert_eq!(linear_chain_polynomial(k), expected);
        assert_eq!(engine.forcing_polynomial(&mono(&[k], &[1])), expected);
    }

    // Zigzag chains: 1, 2x, 3x, then F(n) = 2x F(n-2) + x F(n-3).
    assert_eq!(zigzag_polynomial(0), Polynomial::one());
    assert_eq!(zigzag_polynomial(1), Polynomial::monomial(1, BigInt::from(2)));
    assert_eq!(zigzag_polynomial(2), Polynomial::monomial(1, BigInt::from(3)));
    for n in 3..=12 {
        let mut expected = &zigzag_polynomial(n - 2) + &zigzag_polynomial(n - 2);
        expected += &zigzag_polynomial(n - 3);
        expected.shift_up(1);
        assert_eq!(zigzag_polynomial(n), expected, "zigzag recurrence at {n}");
        assert_eq!(
            engine.forcing_polynomial(&AnySpec::Monotonic(zigzag_spec(n))),
            expected,
            "zigzag spec at {n}"
        );
    }

    // A wide row under a column of unit rows, mirrored: mm'x^2 + x when
    // the wide row has one hexagon, kmm'x^3 + x when it has k >= 2.
    for m in 2..=4usize {
        for mp in 2..=4usize {
            for k in 1..=4i64 {
                let column = |rows: usize| {
                    let mut ks = vec![1; rows - 1];
                    ks.push(k);
                    ChsSpec::from_params(&ks, &vec![1; rows]).unwrap()
                };
                let spec = AnySpec::Turning(
                    TurningChsSpec::new(column(m), column(mp)).unwrap(),
                );
                let expected = if k == 1 {
                    &Polynomial::monomial(2, BigInt::from((m * mp) as i64)) + &Polynomial::x()
                } else {
                    &Polynomial::monomial(3, BigInt::from(k * (m * mp) as i64))
                        + &Polynomial::x()
                };
                assert_eq!(engine.forcing_polynomial(&spec), expected, "k={k} m={m} m'={mp}");
            }
        }
    }

    // A k-by-m parallelogram glued to a column of m'-1 unit rows:
    // m' F(M(k,m)) x - m' x^2 + x.
    for m in 2..=3usize {
        for mp in 2..=3usize {
            for k in 2..=3i64 {
                let upper = ChsSpec::from_params(&vec![k; m], &vec![1; m]).unwrap();
                let mut lks = vec![1; mp - 1];
                lks.push(k);
                let lower = ChsSpec::from_params(&lks, &vec![1; mp]).unwrap();
                let spec = AnySpec::Turning(TurningChsSpec::new(upper, lower).unwrap());
                let count = Polynomial::monomial(0, BigInt::from(mp as i64));
                let mut expected = &count * &parallelogram_polynomial(k as usize, m);
                expected.shift_up(1);
                expected -= &Polynomial::monomial(2, BigInt::from(mp as i64));
                expected += &Polynomial::x();
                assert_eq!(engine.forcing_polynomial(&spec), expected, "k={k} m={m} m'={mp}");
            }
        }
    }

    done("closed-form families", start, FAMILY_LIMIT);
}

#[test]
fn acceptance_2_five_row_walkthrough() {
    let start = Instant::now();
    let spec = ChsSpec::from_params(&[3, 3, 3, 4, 5], &[1, 1, 2, 2, 3]).unwrap();
    let any = AnySpec::Monotonic(spec.clone());
    let graph = HexGraph::build(&any);
    let seq: MatchingSequence = "0,3,3,4,4".parse().unwrap();

    // The linear pass returns the expected four edges in discovery order.
    let set = minforce::minimum_forcing_set(&spec, &seq.upper).unwrap();
    let names: Vec<String> = set.edges.iter().map(|e| e.to_string()).collect();
    assert_eq!(names, ["e_{5,4}", "r_{4,4}", "r_{2,3}", "e_{1,0}"]);

    // Brute force agrees on the forcing number.
    let matching = sequence_to_matching(&graph, &seq).unwrap();
    assert_eq!(oracle::forcing_number(&graph, &matching), 4);

    // The named hexagons form a family of pairwise disjoint alternating
    // cycles of that size.
    let hexes = [(5, 5), (4, 4), (2, 3), (1, 1)]
        .map(|(row, col)| HexId { half: Half::Upper, row, col });
    let mut seen = std::collections::HashSet::new();
    for hex in hexes {
        let verts = graph.hexagon_vertices(hex).unwrap();
        for v in verts {
            assert!(seen.insert(v), "{hex} shares a vertex with an earlier hexagon");
        }
        let in_matching: Vec<bool> = graph
            .hexagon_edges(hex)
            .unwrap()
            .iter()
            .map(|&id| matching.contains(id))
            .collect();
        for i in 0..6 {
            assert_ne!(in_matching[i], in_matching[(i + 1) % 6], "{hex} not alternating");
        }
    }

    done("five-row walkthrough", start, WALKTHROUGH_LIMIT);
}

#[test]
fn acceptance_3_monotonic_engine_matches_search() {
    let start = Instant::now();
    let mut engine = Engine::new();

    let sweep = all_monotonic_specs(4, 4);
    assert_eq!(sweep.len(), 725);
    for spec in &sweep {
        engine_matches_oracle(&mut engine, &AnySpec::Monotonic(spec.clone()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    while checked < RANDOM_MONOTONIC {
        let spec = AnySpec::Monotonic(random_monotonic(&mut rng, 6, 6));
        if count_matchings(&spec) > DEFAULT_MATCHING_BUDGET.into() {
            continue;
        }
        engine_matches_oracle(&mut engine, &spec);
        checked += 1;
    }

    done("monotonic engine vs search", start, MONOTONIC_SWEEP_LIMIT);
}

#[test]
fn acceptance_4_turning_engine_matches_search() {
    let start = Instant::now();
    let mut engine = Engine::new();

    let sweep = all_turning_specs(3, 3);
    let (mut slack, mut tight) = (0u32, 0u32);
    for spec in &sweep {
        match turning_shape(spec) {
            TurningShape::SlackCorner => slack += 1,
            TurningShape::TightCorner { .. } => tight += 1,
        }
        engine_matches_oracle(&mut engine, &AnySpec::Turning(spec.clone()));
    }
    assert!(slack > 0, "sweep must hit the slack-corner shape");
    assert!(tight > 0, "sweep must hit the tight-corner shape");

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut checked = 0;
    while checked < RANDOM_TURNING {
        let spec = AnySpec::Turning(random_turning(&mut rng, 4, 5));
        if count_matchings(&spec) > DEFAULT_MATCHING_BUDGET.into() {
            continue;
        }
        engine_matches_oracle(&mut engine, &spec);
        checked += 1;
    }

    done("turning engine vs search", start, TURNING_SWEEP_LIMIT);
}

#[test]
fn acceptance_5_forcing_number_equals_cycle_packing() {
    let start = Instant::now();
    for spec in all_monotonic_specs(4, 4) {
        let any = AnySpec::Monotonic(spec);
        let graph = HexGraph::build(&any);
        for seq in enumerate_sequences(&any, DEFAULT_MATCHING_BUDGET).unwrap() {
            let matching = sequence_to_matching(&graph, &seq).unwrap();
            let by_subsets = oracle::forcing_number_by_subsets(&graph, &matching);
            let packing =
                oracle::maximum_cycle_packing(&graph, &matching, DEFAULT_MATCHING_BUDGET)
                    .unwrap();
            assert_eq!(by_subsets, packing.len(), "{any}, matching {seq}");
        }
    }
    done("forcing number = cycle packing", start, PACKING_SWEEP_LIMIT);
}

#[test]
fn acceptance_6_spectra_intervals_and_gaps() {
    let start = Instant::now();
    let mut engine = Engine::new();

    // Truncated parallelograms: support is the full interval 1..=degree.
    let mut checked = 0u32;
    for spec in all_monotonic_specs(4, 5) {
        if (1..=spec.row_count()).any(|i| spec.h(i) != 1) {
            continue;
        }
        let poly = engine.forcing_polynomial(&AnySpec::Monotonic(spec.clone()));
        let degree = poly.degree().unwrap();
        assert_eq!(poly.support(), (1..=degree).collect::<Vec<_>>(), "gap in {spec}");
        checked += 1;
    }
    assert!(checked > 100, "sweep too small: {checked}");

    // The wide-row column family attains {1,3} but never 2.
    for m in 2..=4usize {
        for mp in 2..=4usize {
            for k in 2..=4i64 {
                let column = |rows: usize| {
                    let mut ks = vec![1; rows - 1];
                    ks.push(k);
                    ChsSpec::from_params(&ks, &vec![1; rows]).unwrap()
                };
                let spec = AnySpec::Turning(
                    TurningChsSpec::new(column(m), column(mp)).unwrap(),
                );
                assert_eq!(engine.forcing_polynomial(&spec).support(), [1, 3]);
            }
        }
    }

    done("spectrum intervals and gaps", start, FAMILY_LIMIT);
}

#[test]
fn acceptance_7_linear_pass_step_bound() {
    let start = Instant::now();
    let k = 4i64;
    let sizes =
        [10usize, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000];
    let mut samples = Vec::new();
    for &m in &sizes {
        let spec = parallelogram_spec(k, m);
        // Leftmost matching: every row takes its vertical edge at 0.
        let leftmost = vec![0i64; m];
        // Staircase matching: columns climb evenly from 0 to k.
        let staircase: Vec<i64> =
            (0..m).map(|i| (i as i64 * k) / m as i64).collect();
        for columns in [&leftmost, &staircase] {
            let set = minforce::minimum_forcing_set(&spec, columns).unwrap();
            assert!(set.steps <= m, "pass took {} steps on {m} rows", set.steps);
        }
        let steps = minforce::minimum_forcing_set(&spec, &leftmost).unwrap().steps;
        samples.push((m as f64, steps as f64));
    }

    // Least-squares line through (rows, steps); the relative residual
    // must stay small, i.e. step growth is linear in the row count.
    let n = samples.len() as f64;
    let sx: f64 = samples.iter().map(|(x, _)| x).sum();
    let sy: f64 = samples.iter().map(|(_, y)| y).sum();
    let sxx: f64 = samples.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = samples.iter().map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let ss_res: f64 =
        samples.iter().map(|(x, y)| (y - slope * x - intercept).powi(2)).sum();
    let ss_tot: f64 = samples.iter().map(|(_, y)| y * y).sum();
    let relative = (ss_res / ss_tot).sqrt();
    assert!(
        relative < LINEAR_FIT_RESIDUAL,
        "linear fit residual {relative:.4} over limit {LINEAR_FIT_RESIDUAL}"
    );

    done("linear pass step bound", start, FAMILY_LIMIT);
}

#[test]
fn acceptance_8_bijection_and_counting() {
    let start = Instant::now();
    let mut engine = Engine::new();

    for spec in all_monotonic_specs(4, 4) {
        let any = AnySpec::Monotonic(spec);
        let graph = HexGraph::build(&any);
        let sequences = enumerate_sequences(&any, DEFAULT_MATCHING_BUDGET).unwrap();
        for seq in &sequences {
            let matching = sequence_to_matching(&graph, seq).unwrap();
            assert_eq!(&matching_to_sequence(&graph, &matching).unwrap(), seq);
        }
        let count = count_matchings(&any);
        assert_eq!(BigInt::from(count.clone()), engine.forcing_polynomial(&any).eval_at_one());
        assert_eq!(count, sequences.len().into());
    }

    for spec in all_turning_specs(3, 3) {
        let any = AnySpec::Turning(spec);
        let count = count_matchings(&any);
        assert_eq!(BigInt::from(count), engine.forcing_polynomial(&any).eval_at_one());
    }

    done("bijection and counting", start, MONOTONIC_SWEEP_LIMIT);
}

mod common;

use std::collections::BTreeMap;

use qwalk_core::cluster::{profile, sequence_count, ClusterProfile, EndType, PositivePlaces};
use qwalk_core::oracle::{count_range, signed_counts, SignedCounts};
use qwalk_core::walk::preset_init;
use qwalk_core::{oracle_state, run, Execution, MemoryOrder, Preset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::*;

#[test]
fn symmetric_walk_matches_dense_listing() {
    let init = preset_init(Preset::Symmetric, MemoryOrder::Two);
    let mut v = init;
    for n in 0..=40 {
        if n > 0 {
            v = qwalk_core::step(&v);
        }
        assert_eq!(v.distribution(), dense_reference(n), "n={n}");
    }
}

fn profile_counts(len: usize) -> BTreeMap<ClusterProfile, u128> {
    let mut out = BTreeMap::new();
    for s in walk_sequences(len) {
        *out.entry(profile(&s).unwrap()).or_insert(0) += 1;
    }
    out
}

#[test]
fn profile_counts_match_counting_formula() {
    for len in 3..=14 {
        for (p, count) in profile_counts(len) {
            assert_eq!(sequence_count(&p, PositivePlaces::T1T2), count, "{p}");
        }
    }
}

#[test]
fn compact_wiring_miscounts_si_profiles() {
    let mut wrong = 0;
    for len in 3..=12 {
        for (p, count) in profile_counts(len) {
            let compact = sequence_count(&p, PositivePlaces::T1T0);
            if p.end != EndType::SI {
                assert_eq!(compact, count, "{p}");
            } else if compact != count {
                wrong += 1;
            }
        }
    }
    assert!(wrong > 0);
}

#[test]
fn profiles_partition_paths() {
    for len in 3..=14 {
        let total: u128 = profile_counts(len).keys().map(|p| sequence_count(p, PositivePlaces::T1T2)).sum();
        assert_eq!(total, 1u128 << (len - 2));
    }
}

#[test]
fn oracle_is_independent_of_partition() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in [6usize, 11, 14] {
        let whole = signed_counts(n, 24, Execution::Sequential).unwrap();
        for _ in 0..5 {
            let total = 1u64 << n;
            let mut cuts: Vec<u64> = (0..rng.random_range(1..20)).map(|_| rng.random_range(0..=total)).collect();
            cuts.extend([0, total]);
            cuts.sort_unstable();
            let mut pieces: Vec<_> = cuts.windows(2).map(|w| w[0]..w[1]).collect();
            pieces.shuffle(&mut rng);
            let merged = pieces
                .into_iter()
                .map(|r| count_range(n, r).unwrap())
                .fold(SignedCounts::zero(n), SignedCounts::merge);
            assert_eq!(merged, whole);
        }
        assert_eq!(signed_counts(n, 24, Execution::Parallel).unwrap(), whole);
    }
}

#[test]
fn oracle_respects_cap() {
    assert!(signed_counts(12, 10, Execution::Sequential).is_err());
    assert_eq!(oracle_state(9).unwrap(), run(&preset_init(Preset::Single, MemoryOrder::Two), 9));
}

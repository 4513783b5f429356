//! Deterministic input builders shared by the benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use neutro_core::topology::{NeutroFamily, NeutroSet};
use neutro_core::{CrispTriple, Interval, NeutroTriple, SubunitarySet};

pub fn crisp_vars(k: usize, seed: u64) -> Vec<CrispTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k)
        .map(|_| {
            CrispTriple::raw(
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
            )
        })
        .collect()
}

pub fn union_set(pieces: usize, seed: u64) -> SubunitarySet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut endpoints: Vec<f64> = (0..pieces * 2).map(|_| rng.random_range(0.0..=1.0)).collect();
    endpoints.sort_by(f64::total_cmp);
    SubunitarySet::from_union(
        endpoints
            .chunks_exact(2)
            .map(|p| Interval::new(p[0], p[1]).expect("unit endpoints"))
            .collect(),
    )
}

pub fn interval_triple(seed: u64) -> NeutroTriple {
    NeutroTriple::new(
        union_set(3, seed),
        union_set(3, seed.wrapping_add(1)),
        union_set(3, seed.wrapping_add(2)),
    )
}

/// A family of `members` constant sets over a one-element universe, plus the
/// constants 0 and 1, closed or not depending on the seeds.
pub fn constant_family(members: usize, seed: u64) -> NeutroFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = vec!["a".to_string()];
    let mut named = vec![
        (
            "ZERO".to_string(),
            NeutroSet::constant(&universe, &NeutroTriple::zero()).expect("valid universe"),
        ),
        (
            "ONE".to_string(),
            NeutroSet::constant(&universe, &NeutroTriple::one()).expect("valid universe"),
        ),
    ];
    for idx in 0..members {
        let triple = NeutroTriple::crisp(
            rng.random_range(0.0..=1.0),
            0.0,
            rng.random_range(0.0..=1.0),
        )
        .expect("unit components");
        named.push((
            format!("M{idx}"),
            NeutroSet::constant(&universe, &triple).expect("valid universe"),
        ));
    }
    NeutroFamily::new(universe, named).expect("well-formed family")
}

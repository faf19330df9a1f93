//! Seeded random generators for property sweeps.
//!
//! The spectrum sampler walks the pair budget `d^2(k^2 - k)` down to zero in
//! steps of `r^2 - r`, so every draw satisfies the combinatorial identity by
//! construction. Both budget and steps are even, hence the walk always lands
//! exactly.

use crate::config::{Configuration, MultiplicitySpectrum, Validated};
use crate::incidence::{LineArrangement, ProjLine};
use rand::RngExt;
use std::collections::BTreeMap;

/// A random validated configuration of `count` degree-`degree` curves with
/// multiplicities capped at `max_multiplicity` (pass `count - 1` to keep
/// `t_k = 0`). Requires `max_multiplicity >= 2`.
pub fn random_validated_spectrum(
    rng: &mut impl RngExt,
    degree: u32,
    count: u64,
    max_multiplicity: u64,
) -> Validated {
    assert!(max_multiplicity >= 2, "need room for double points");
    let cap = max_multiplicity.min(count);
    let d = degree as u64;
    let mut budget = d * d * (count * count - count);
    let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
    while budget > 0 {
        let mut r_max = 2;
        while (r_max + 1) * (r_max + 1) - (r_max + 1) <= budget && r_max < cap {
            r_max += 1;
        }
        let r = rng.random_range(2..=r_max);
        *spectrum.entry(r).or_insert(0) += 1;
        budget -= r * r - r;
    }
    Configuration::new(
        degree,
        count,
        MultiplicitySpectrum::from_pairs(spectrum).expect("multiplicities >= 2"),
    )
    .expect("multiplicities bounded by count")
    .validated()
    .expect("budget walk preserves the identity")
}

/// A random arrangement of `k` pairwise-distinct rational lines with
/// coefficients in `[-bound, bound]`. Concurrences are allowed (and likely
/// for small bounds); only exact duplicates are rejected.
pub fn random_arrangement(rng: &mut impl RngExt, k: usize, bound: i64) -> LineArrangement {
    let mut lines: Vec<ProjLine> = Vec::with_capacity(k);
    while lines.len() < k {
        let candidate = ProjLine::new(
            rng.random_range(-bound..=bound),
            rng.random_range(-bound..=bound),
            rng.random_range(-bound..=bound),
        );
        if let Ok(line) = candidate {
            if !lines.contains(&line) {
                lines.push(line);
            }
        }
    }
    LineArrangement::new(lines).expect("duplicates filtered")
}

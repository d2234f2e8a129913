//! Shared inputs for the criterion benches.

use egc_core::ring::DEFAULT_PRIME;
use egc_core::{EvaluationPoint, Flag, Partition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

pub fn flag(bounds: &[i64]) -> Flag {
    Flag::new(bounds.to_vec()).expect("valid flag")
}

/// A fixed evaluation point so runs are comparable.
pub fn point() -> EvaluationPoint {
    EvaluationPoint::random(DEFAULT_PRIME, -8, 8, &mut ChaCha8Rng::seed_from_u64(7)).expect("valid point")
}

/// (λ, φ, ρ) triples of increasing size, each with a nonzero coefficient.
pub fn j_inputs() -> Vec<(&'static str, Partition, Flag, Partition)> {
    vec![
        ("small", partition(&[2, 1]), flag(&[1, 2]), partition(&[1])),
        ("negative", partition(&[3, 2, 1]), flag(&[-3, -3, -3]), partition(&[3, 2, 1])),
        ("four-rows", partition(&[3, 3, 2, 1]), flag(&[2, 3, 3, 3]), partition(&[3, 2, 2, 1])),
        ("wide", partition(&[4, 3, 1]), flag(&[3, 3, 3]), partition(&[3, 2, 1])),
    ]
}

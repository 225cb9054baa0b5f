//! Seed derivation for reproducible, parallel-safe trials.
//!
//! A run has one 64-bit master seed. Trial `t` at graph size `n` draws from
//! its own stream seeded with
//!
//! ```text
//! base  = splitmix64(master ^ splitmix64(n))
//! seed  = splitmix64(base + (t + 1) * 0x9E37_79B9_7F4A_7C15)     (wrapping)
//! ```
//!
//! `splitmix64` is a bijection on `u64` and the multiplier is odd, so for a
//! fixed `(master, n)` distinct trial indices always get distinct seeds.

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

/// Random stream type used for every trial.
pub type TrialRng = Xoshiro256PlusPlus;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// The SplitMix64 finalizer.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `trial` at size `n` under `master`.
pub fn derive_seed(master: u64, n: u64, trial: u64) -> u64 {
    let base = splitmix64(master ^ splitmix64(n));
    splitmix64(base.wrapping_add(trial.wrapping_add(1).wrapping_mul(GOLDEN)))
}

/// A fresh stream for the given seed.
pub fn rng_from_seed(seed: u64) -> TrialRng {
    TrialRng::seed_from_u64(seed)
}

//! Seeded random streams.
//!
//! Every random draw in the crate comes from a [`TrialRng`] (ChaCha8). Per
//! trial streams are derived from a master seed with the SplitMix64 finalizer:
//!
//! ```text
//! child(master, t) = mix64(master + (t + 1) * 0x9E3779B97F4A7C15)
//! ```
//!
//! and the child value seeds the ChaCha8 stream through
//! `SeedableRng::seed_from_u64`. The derivation depends only on the master
//! seed and the trial index, so results do not depend on how trials are
//! distributed over worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn child_seed(master: u64, index: u64) -> u64 {
    mix64(master.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

pub fn stream(seed: u64) -> TrialRng {
    TrialRng::seed_from_u64(seed)
}

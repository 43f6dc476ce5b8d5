//! Deterministic random sources.
//!
//! Every random stream in the crate is a ChaCha8 generator seeded through
//! [`SeedableRng::seed_from_u64`]. Separate logical streams (input generation,
//! shuffling) use distinct ChaCha stream ids so that one seed reproduces a
//! whole run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Identifier written next to every seed in emitted records.
pub const GENERATOR_ID: &str = "chacha8-rand0.9";

pub const SHUFFLE_STREAM: u64 = 0;
pub const INPUT_STREAM: u64 = 1;
pub const URN_STREAM: u64 = 2;

pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Derives the seed of trial `index` from a master seed (splitmix64 finaliser).
pub fn trial_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

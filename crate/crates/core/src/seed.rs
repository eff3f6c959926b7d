//! Seed derivation. All randomness in the crate flows from one master seed.
//!
//! A stage gets its own stream via `derive_seed(master, "stage-name")`;
//! repeated trials inside a stage use `derive_indexed(stage_seed, "trial", i)`.
//! Both hash the label with FNV-1a and mix with SplitMix64, so the derived
//! seeds do not depend on evaluation order. Random pair coins for generators
//! are computed from `(seed, tag, u, v)` alone, which keeps an instance
//! reproducible however its edges are enumerated.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StageRng = ChaCha8Rng;

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn fnv1a(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn derive_seed(master: u64, stage: &str) -> u64 {
    splitmix64(master ^ splitmix64(fnv1a(stage)))
}

pub fn derive_indexed(master: u64, stage: &str, index: u64) -> u64 {
    splitmix64(derive_seed(master, stage) ^ splitmix64(index.wrapping_add(1)))
}

pub fn rng_from(seed: u64) -> StageRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw in `[0, 1)` determined by `(seed, tag, u, v)` with `u < v`
/// normalized, so orientation does not matter.
pub fn pair_coin(seed: u64, tag: &str, u: usize, v: usize) -> f64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    let h = splitmix64(derive_seed(seed, tag) ^ splitmix64((a as u64) << 32 | b as u64));
    (h >> 11) as f64 / (1u64 << 53) as f64
}

//! Seeded, platform-independent randomness.
//!
//! Every random choice in this crate flows through a ChaCha12 stream seeded
//! from a 64-bit value, with per-trial seeds derived by the SplitMix64
//! mixing function. Sampling helpers are implemented here rather than pulled
//! from a randomness crate so that the exact byte streams are pinned by this
//! crate alone; reproducibility of simulation outputs depends on them.

use alloc::vec::Vec;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

/// Identifier for the seed-derivation scheme, echoed into output metadata.
pub const RNG_ID: &str = "splitmix64/chacha12/v1";

/// SplitMix64 output function.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one simulation trial: `mix(master, point_tag, trial_index)`.
///
/// `point_tag` distinguishes sweep points (for the burst simulator it is the
/// error weight `t`), so that two points of one sweep draw independent
/// streams even when they share trial indices.
pub fn trial_seed(master_seed: u64, point_tag: u64, trial_index: u64) -> u64 {
    let point = splitmix64(master_seed ^ point_tag.wrapping_mul(0xA076_1D64_78BD_642F));
    splitmix64(point.wrapping_add((trial_index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// ChaCha12 stream seeded from a single 64-bit value.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Uniform draw from `0..n` without modulo bias.
pub fn uniform_below(rng: &mut impl RngCore, n: u64) -> u64 {
    assert!(n > 0, "uniform_below: empty range");
    // 2^64 mod n values at the bottom of the range are rejected.
    let threshold = n.wrapping_neg() % n;
    loop {
        let r = rng.next_u64();
        if r >= threshold {
            return r % n;
        }
    }
}

/// `count` distinct values from `0..n`, in ascending order.
pub fn sample_distinct(rng: &mut impl RngCore, n: usize, count: usize) -> Vec<usize> {
    assert!(count <= n, "sample_distinct: count exceeds range");
    // Partial Fisher-Yates over an index pool.
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..count {
        let j = i + uniform_below(rng, (n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut picked = pool[..count].to_vec();
    picked.sort_unstable();
    picked
}

/// Uniform permutation of `0..n`.
pub fn random_permutation(rng: &mut impl RngCore, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = uniform_below(rng, (i + 1) as u64) as usize;
        perm.swap(i, j);
    }
    perm
}

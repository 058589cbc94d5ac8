//! Deterministic seed derivation for parallel sampling.
//!
//! Parallel work items (Rademacher draws, optimizer restarts, sample
//! batches) each derive their own RNG seed from the master seed and their
//! indices, so results are independent of scheduling and thread count.

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mix a master seed with two stream indices into a new seed.
pub fn derive_seed(master: u64, a: u64, b: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ a) ^ b)
}

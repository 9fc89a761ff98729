//! Seeded randomness. Every randomized routine takes its generator explicitly, so
//! results are reproducible and independent across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{int, Rat};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// The generator used throughout the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn default_rng() -> SeededRng {
    seeded_rng(DEFAULT_SEED)
}

/// A vector with independent entries drawn uniformly from `-3..=3`.
pub fn small_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rat> {
    (0..len).map(|_| int(rng.gen_range(-3..=3))).collect()
}

//! Seeded random stream for reproducible experiments.
//!
//! The stream is ChaCha8 keyed from a 64-bit seed. Floats are derived from the
//! raw 64-bit output by the explicit 53-bit construction `(x >> 11) * 2^-53`,
//! so the sequence is reproducible in any language from the ChaCha8
//! specification and the seed alone.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Identifier written into output headers next to the seed.
pub const GENERATOR_ID: &str = "chacha8";

pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform draw from [0, 1) with 53 random bits.
    pub fn next_unit(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }
}

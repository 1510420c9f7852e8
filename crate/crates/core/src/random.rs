//! Deterministic random source.
//!
//! The generator is ChaCha with 8 rounds as implemented by `rand_chacha`
//! 0.9 (`ChaCha8Rng`), seeded through `SeedableRng::seed_from_u64`. Its
//! output stream is portable and fixed for a given seed. The conversions
//! to reals, bounded integers and shuffles are implemented here so that
//! they do not depend on the sampling algorithms of any `rand` release.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Identifier written into experiment manifests.
pub const RANDOM_SOURCE_ALGORITHM: &str = "chacha8/rand_chacha-0.9/seed_from_u64;u53-float;lemire-range;v1";

/// The draws the operators need. [`RandomSource`] is the production
/// implementation; tests substitute scripted sequences.
pub trait UniformDraws {
    /// Uniform real in `[0, 1)`.
    fn uniform(&mut self) -> f64;

    /// Uniform integer in `0..n`. `n` must be nonzero.
    fn below(&mut self, n: usize) -> usize;

    /// Fisher-Yates shuffle driven by [`UniformDraws::below`].
    fn shuffle<T>(&mut self, items: &mut [T])
    where
        Self: Sized,
    {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

impl<R: UniformDraws + ?Sized> UniformDraws for &mut R {
    fn uniform(&mut self) -> f64 {
        (**self).uniform()
    }

    fn below(&mut self, n: usize) -> usize {
        (**self).below(n)
    }
}

/// Seeded, single-owner pseudo random number generator.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub const ALGORITHM: &'static str = RANDOM_SOURCE_ALGORITHM;

    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}

impl UniformDraws for RandomSource {
    fn uniform(&mut self) -> f64 {
        // 53 random mantissa bits, exactly representable.
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        // Lemire's multiply-shift with rejection; unbiased.
        let range = n as u64;
        let threshold = range.wrapping_neg() % range;
        loop {
            let m = (self.rng.next_u64() as u128) * (range as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as usize;
            }
        }
    }
}

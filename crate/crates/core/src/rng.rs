//! Seedable, splittable random streams.
//!
//! Every random object is drawn from a ChaCha20 stream addressed by
//! `(seed, stream)`. ChaCha is counter-based, so stream `i` is available
//! without generating streams `0..i`, which makes trial `i` of a campaign
//! reproducible regardless of how trials are distributed over workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::C64;

/// Random stream for one `(seed, stream)` address.
pub struct StreamRng(ChaCha20Rng);

impl StreamRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha20Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        StreamRng(inner)
    }

    pub fn uniform(&mut self) -> f64 {
        self.0.random::<f64>()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        self.0.random_range(lo..=hi)
    }

    pub fn normal(&mut self) -> f64 {
        self.0.sample(StandardNormal)
    }

    /// Complex standard normal: real and imaginary parts i.i.d. N(0, 1).
    pub fn complex_normal(&mut self) -> C64 {
        let re = self.normal();
        let im = self.normal();
        C64::new(re, im)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.random()
    }
}

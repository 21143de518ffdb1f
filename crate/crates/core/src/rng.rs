//! Counter-based pseudo-random numbers for deterministic parallel sweeps.
//!
//! Each grid cell of a sweep gets its own stream derived from
//! `(seed, stream_id)`; the k-th output of a stream is a pure function of
//! `(seed, stream_id, k)`, so results are identical no matter how cells are
//! distributed over worker threads.

/// SplitMix64 finalizer: a bijective avalanche mix on 64 bits.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// A counter-based generator: `next` outputs mix(key + counter·γ).
#[derive(Debug, Clone)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    /// Derive the stream identified by `stream_id` from a global `seed`.
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let key = mix64(seed ^ mix64(stream_id.wrapping_add(GOLDEN)));
        CounterRng { key, counter: 0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        let out = mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)));
        self.counter += 1;
        out
    }

    /// Uniform draw in [0, 1) with 53-bit resolution.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

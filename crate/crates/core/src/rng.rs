//! Portable pseudo-random numbers for reproducible benchmark instances.
//!
//! The generator is SplitMix64. Each call advances a 64-bit state by the
//! golden-ratio increment and scrambles it:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! return z ^ (z >> 31)
//! ```
//!
//! Bounded draws use rejection sampling: for a bound `b`, outputs below
//! `(2^64 - b) mod b` are discarded and the result is `x mod b`, so every
//! value in `0..b` is equally likely.
//!
//! Independent streams are derived from a base seed and a list of integers
//! (see [`SplitMix64::derive`]). Everything is plain 64-bit integer
//! arithmetic, so any language can reproduce the streams bit for bit.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream for `(seed, parts...)`: starting from `s = seed`, each part `p`
    /// replaces `s` by the first output of `SplitMix64::new(s ^ p)`. The
    /// final `s` seeds the returned generator.
    pub fn derive(seed: u64, parts: &[u64]) -> Self {
        let s = parts
            .iter()
            .fold(seed, |s, &p| SplitMix64::new(s ^ p).next_u64());
        Self::new(s)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform index into a slice of length `len`.
    pub fn index(&mut self, len: usize) -> usize {
        self.below(len as u64) as usize
    }

    /// Uniform `f64` in `[0, 1)` from the top 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fisher-Yates shuffle, walking `i` from the last index down to 1 and
    /// swapping `i` with a uniform `j` in `0..=i`.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

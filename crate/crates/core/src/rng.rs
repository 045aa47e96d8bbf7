//! Deterministic random number generation.
//!
//! Everything random in this crate (graph completion draws, synthetic graph
//! generation, test corpora) flows through [`SplitMix64`] so that a seed pins
//! the full output bit-exactly across runs and platforms.

/// SplitMix64 generator (Steele, Lea & Flood). 64 bits of state, one
/// multiply-xorshift round per draw; passes BigCrush and is trivially
/// reproducible, which is all we need.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Create a generator from a seed. Equal seeds produce equal streams.
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Next raw 64-bit draw.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform index in `0..bound` (`bound > 0`) by modulo reduction.
    ///
    /// Plain modulo keeps the draw sequence reproducible across platforms,
    /// which the completion procedure relies on; the bias for bounds far
    /// below 2^64 is irrelevant here.
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform node index in `0..n` excluding `exclude` (requires `n >= 2`).
    ///
    /// The draw is `next_u64() mod (n - 1)` mapped around the excluded index:
    /// values below `exclude` stay, values at or above it shift up by one.
    pub fn next_index_excluding(&mut self, n: usize, exclude: usize) -> usize {
        debug_assert!(n >= 2 && exclude < n);
        let v = self.next_index(n - 1);
        if v < exclude {
            v
        } else {
            v + 1
        }
    }

    /// Uniform float in the half-open interval (0, 1]: 53 mantissa bits,
    /// shifted so that 0 is excluded (safe as an inverse-CDF argument).
    pub fn next_unit_open(&mut self) -> f64 {
        (((self.next_u64() >> 11) + 1) as f64) * (1.0 / (1u64 << 53) as f64)
    }
}

//! Deterministic random streams.
//!
//! Every stochastic decision in a run is drawn from one [`RandomStream`]. The
//! optimizers consume draws in a fixed, documented order (agent-major,
//! dimension-minor), so a seed pins the whole run.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Source of uniform draws on `[0, 1)`.
///
/// Implemented by [`RandomStream`]; tests implement it with pinned sequences to
/// drive update rules through exact values.
pub trait DrawSource {
    /// Next uniform value on `[0, 1)`.
    fn uniform(&mut self) -> f64;

    /// Uniform value on `[lo, hi)`.
    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.uniform() * (hi - lo)
    }

    /// Uniform index in `0..n`. `n` must be positive.
    fn index(&mut self, n: usize) -> usize {
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }
}

/// Seeded ChaCha8 stream.
///
/// Uniform values are built from the top 53 bits of each 64-bit output, so the
/// sequence depends only on the ChaCha keystream and not on any distribution
/// code that might change between `rand` releases.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    inner: ChaCha8Rng,
    draws: u64,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
            draws: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of uniform values consumed so far.
    pub fn draws(&self) -> u64 {
        self.draws
    }
}

impl DrawSource for RandomStream {
    fn uniform(&mut self) -> f64 {
        self.draws += 1;
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Replays a fixed list of values, cycling when exhausted.
///
/// Useful for pinning draws to exact values (including the closed end `1.0`).
#[derive(Debug, Clone)]
pub struct ScriptedDraws {
    values: Vec<f64>,
    cursor: usize,
}

impl ScriptedDraws {
    pub fn new(values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "scripted draws need at least one value");
        Self { values, cursor: 0 }
    }

    pub fn constant(value: f64) -> Self {
        Self::new(vec![value])
    }

    pub fn consumed(&self) -> usize {
        self.cursor
    }
}

impl DrawSource for ScriptedDraws {
    fn uniform(&mut self) -> f64 {
        let v = self.values[self.cursor % self.values.len()];
        self.cursor += 1;
        v
    }
}

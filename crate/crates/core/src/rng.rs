//! Seeded, splittable randomness.
//!
//! Every stream is a ChaCha8 keystream. The 256-bit key is expanded from
//! `base_seed` by `rand_core`'s `seed_from_u64` (a PCG32 expander with
//! multiplier `6364136223846793005` and increment `11634580027462260723`),
//! and `stream_index` selects the 64-bit ChaCha stream id. Within one stream
//! the keystream is further split into [`Lane`]s, each starting at word
//! offset `lane << 64`, so the parameter stage and the observation stage of a
//! trial never share variates. All of this is platform independent.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Offset added to a trial's stream index to obtain its oracle stream.
pub const ORACLE_STREAM_OFFSET: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub base_seed: u64,
    pub stream_index: u64,
    /// Test hook: reflect every uniform `u` to `1 - u`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub antithetic: bool,
}

/// Disjoint sub-streams of one [`SeedSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lane {
    /// First stage: parameter / measure sequences.
    Parameters = 0,
    /// Second stage: conditionally independent draws.
    Observations = 1,
    /// Anything else a generator needs (e.g. a hidden first sample).
    Auxiliary = 2,
}

impl SeedSpec {
    pub fn new(base_seed: u64, stream_index: u64) -> Self {
        Self { base_seed, stream_index, antithetic: false }
    }

    pub fn with_stream(self, stream_index: u64) -> Self {
        Self { stream_index, ..self }
    }

    /// The seed for trial `i` of an experiment keyed by `base_seed`.
    pub fn trial(base_seed: u64, i: u64) -> Self {
        Self::new(base_seed, i)
    }

    /// This seed shifted `i` streams forward; trial `i` of an experiment
    /// seeded at stream 0 runs on stream `i`.
    pub fn offset(self, i: u64) -> Self {
        self.with_stream(self.stream_index.wrapping_add(i))
    }

    /// The oracle stream paired with this seed's stream.
    pub fn oracle(self) -> Self {
        self.with_stream(self.stream_index.wrapping_add(ORACLE_STREAM_OFFSET))
    }

    pub fn antithetic(self) -> Self {
        Self { antithetic: true, ..self }
    }

    pub fn stream(&self, lane: Lane) -> Stream {
        let mut rng = ChaCha8Rng::seed_from_u64(self.base_seed);
        rng.set_stream(self.stream_index);
        rng.set_word_pos((lane as u128) << 64);
        Stream { rng, antithetic: self.antithetic }
    }
}

/// A source of uniform variates on `[0, 1)` (or `(0, 1]` when antithetic).
#[derive(Debug, Clone)]
pub struct Stream {
    rng: ChaCha8Rng,
    antithetic: bool,
}

impl Stream {
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        let u: f64 = self.rng.gen();
        if self.antithetic {
            1.0 - u
        } else {
            u
        }
    }

    /// Uniform on `[-half_width, half_width]`.
    #[inline]
    pub fn symmetric(&mut self, half_width: f64) -> f64 {
        half_width * (2.0 * self.uniform() - 1.0)
    }
}

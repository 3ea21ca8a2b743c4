//! Seeded randomness.
//!
//! Every randomized routine takes a `u64` seed and draws from ChaCha8
//! (`rand_chacha::ChaCha8Rng::seed_from_u64`), so runs are reproducible
//! across platforms and releases of this crate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

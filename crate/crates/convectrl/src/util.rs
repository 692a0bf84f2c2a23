//! Seeding and small shared helpers.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Deterministic RNG for a (seed, stream) pair.
///
/// Every random decision in the crate draws from an explicitly derived
/// stream so that runs are reproducible from a single root seed.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stream identifiers for the root-seed RNG, kept in one place so that
/// subsystems never collide.
pub mod streams {
    pub const CHECKPOINT: u64 = 0x01;
    pub const DATASET: u64 = 0x02;
    pub const SURROGATE_INIT: u64 = 0x03;
    pub const SURROGATE_BATCH: u64 = 0x04;
    pub const POLICY_INIT: u64 = 0x05;
    pub const ROLLOUT: u64 = 0x06;
    pub const MINIBATCH: u64 = 0x07;
    pub const ENV_RESET: u64 = 0x08;
}

/// Mean of a slice; 0 for an empty slice.
pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        0.0
    } else {
        xs.iter().sum::<f64>() / xs.len() as f64
    }
}

/// Sample standard deviation (ddof = 1); 0 for fewer than two entries.
pub fn std_dev(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let var = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64;
    var.sqrt()
}

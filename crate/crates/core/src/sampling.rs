//! Seeded random generation for the law suites.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator every suite uses, so a seed reproduces a run on any platform.
pub type SuiteRng = ChaCha8Rng;

pub fn suite_rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

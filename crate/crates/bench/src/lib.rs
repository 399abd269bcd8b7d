//! Inputs shared by the benchmarks.

use braid3_core::{BraidWord, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A uniformly random band word of length `len`, reproducible from `seed`.
pub fn random_word(len: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BraidWord::new(
        (0..len)
            .map(|_| Letter::new(rng.gen_range(1..=3), rng.gen_bool(0.5)))
            .collect(),
    )
}

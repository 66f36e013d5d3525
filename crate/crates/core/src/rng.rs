//! Seeded randomness and the seed-mixing rule for derived tasks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactla::rational::{rat, Rational};

pub const DEFAULT_SEED: u64 = 20020801;
pub const DEFAULT_TRIALS: usize = 3;
pub const DEFAULT_COEFF_BOUND: u64 = 1000;

/// Randomization policy for generic-rank estimates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RandomCfg {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: u64,
    pub certify: bool,
}

impl Default for RandomCfg {
    fn default() -> Self {
        RandomCfg {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            coeff_bound: DEFAULT_COEFF_BOUND,
            certify: false,
        }
    }
}

impl RandomCfg {
    pub fn with_seed(seed: u64) -> Self {
        RandomCfg {
            seed,
            ..Self::default()
        }
    }

    /// Same policy with the seed replaced by `child_seed(self.seed, label)`.
    pub fn derive(&self, label: &str) -> Self {
        RandomCfg {
            seed: child_seed(self.seed, label),
            ..self.clone()
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Clamps the configuration into its documented domain.
    pub fn normalized(&self) -> Self {
        RandomCfg {
            trials: self.trials.max(1),
            coeff_bound: self.coeff_bound.max(2),
            ..self.clone()
        }
    }
}

/// Stable seed mixing: FNV-1a over the label, combined with the parent seed and
/// finished with the splitmix64 mixer. Independent of the Rust version and platform.
pub fn child_seed(parent: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(parent ^ splitmix64(h))
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A vector of `len` independent uniform integers in `[-bound, bound]`.
pub fn random_point<R: Rng>(rng: &mut R, len: usize, bound: u64) -> Vec<Rational> {
    let b = bound as i64;
    (0..len).map(|_| rat(rng.random_range(-b..=b))).collect()
}

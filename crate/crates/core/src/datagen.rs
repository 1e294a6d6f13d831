//! Seeded synthetic data.
//!
//! Class `i` draws every feature independently as `i + lambda * U` with
//! `U ~ Uniform[0, 1)`. Rows are interleaved round-robin by class. The
//! generator is ChaCha8 seeded through `seed_from_u64`; `U` is the standard
//! 53-bit float draw, and a draw that rounds up to `i + lambda` is redrawn so
//! every value stays in `[i, i + lambda)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::classifier::{ClassifierError, Dataset};
use crate::geometry::Point2;

/// Stream tags for [`derive_seed`].
pub const TRAIN_STREAM: u64 = 1;
pub const TEST_STREAM: u64 = 2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenConfig {
    pub class_count: usize,
    pub lambda: f64,
    pub feature_count: usize,
    pub samples_per_class: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(class_count: usize, lambda: f64, feature_count: usize, samples_per_class: usize, seed: u64) -> Self {
        GenConfig {
            class_count,
            lambda,
            feature_count,
            samples_per_class,
            seed,
        }
    }

    fn validate(&self) -> Result<(), ClassifierError> {
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(ClassifierError::InvalidConfig(format!(
                "lambda must be positive, got {}",
                self.lambda
            )));
        }
        if self.class_count == 0 || self.samples_per_class == 0 {
            return Err(ClassifierError::InvalidConfig(
                "class count and samples per class must be positive".into(),
            ));
        }
        if self.feature_count < 2 {
            return Err(ClassifierError::TooFewFeatures(self.feature_count));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer over `master ^ stream`, used to give independent
/// sub-seeds (train/test split, folds, sweep grid points) to one master seed.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn generate(cfg: &GenConfig) -> Result<Dataset, ClassifierError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.class_count * cfg.samples_per_class;
    let mut features = Vec::with_capacity(n * cfg.feature_count);
    let mut labels = Vec::with_capacity(n);
    for _ in 0..cfg.samples_per_class {
        for class in 0..cfg.class_count {
            let base = class as f64;
            for _ in 0..cfg.feature_count {
                let v = loop {
                    let v = base + cfg.lambda * rng.random::<f64>();
                    if v < base + cfg.lambda {
                        break v;
                    }
                };
                features.push(v);
            }
            labels.push(class);
        }
    }
    Dataset::new(features, labels, cfg.class_count, cfg.feature_count)
}

/// `n` points uniform on the unit square.
pub fn uniform_points(n: usize, seed: u64) -> Vec<Point2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Point2::new(rng.random(), rng.random())).collect()
}

/// `n` points with independent standard normal coordinates.
pub fn normal_points(n: usize, seed: u64) -> Vec<Point2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Point2::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

//! Deterministic, label-splittable random streams.
//!
//! Every consumer (an agent run, an environment, a Dirichlet draw) derives
//! its own stream from a root seed plus a path of string labels. Streams
//! for distinct paths are independent, so adding one consumer to a config
//! never perturbs the draws another consumer sees.

use rand::Rng as _;
use rand::SeedableRng as _;
use rand_chacha::ChaCha12Rng;
use rand_distr::Distribution as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifies one random stream by a root seed and a path of labels.
///
/// Identical `(root_seed, path)` pairs always produce identical streams.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedTree {
    root_seed: u64,
    path: Vec<String>,
}

impl SeedTree {
    pub fn new(root_seed: u64) -> Self {
        Self {
            root_seed,
            path: Vec::new(),
        }
    }

    pub fn root_seed(&self) -> u64 {
        self.root_seed
    }

    pub fn path(&self) -> &[String] {
        &self.path
    }

    /// Child tree for the given consumer label.
    pub fn derive(&self, label: &str) -> Self {
        let mut path = self.path.clone();
        path.push(label.to_string());
        Self {
            root_seed: self.root_seed,
            path,
        }
    }

    /// Convenience for indexed consumers ("seed/3", "model/0", ...).
    pub fn derive_indexed(&self, label: &str, index: u64) -> Self {
        self.derive(&format!("{label}/{index}"))
    }

    /// Opens the stream this tree names.
    pub fn stream(&self) -> RngStream {
        let mut state = splitmix(self.root_seed ^ 0x9e37_79b9_7f4a_7c15);
        for label in &self.path {
            state = absorb_bytes(state, label.as_bytes());
        }
        let mut key = [0u8; 32];
        for (i, chunk) in key.chunks_exact_mut(8).enumerate() {
            let word = splitmix(state.wrapping_add((i as u64 + 1).wrapping_mul(0xd1b5_4a32_d192_ed03)));
            chunk.copy_from_slice(&word.to_le_bytes());
        }
        RngStream {
            rng: ChaCha12Rng::from_seed(key),
        }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    x
}

fn absorb_bytes(mut state: u64, bytes: &[u8]) -> u64 {
    for chunk in bytes.chunks(8) {
        let mut word = [0u8; 8];
        word[..chunk.len()].copy_from_slice(chunk);
        state = splitmix(state ^ u64::from_le_bytes(word));
    }
    splitmix(state ^ (bytes.len() as u64))
}

/// A seeded pseudo-random stream with the draw primitives agents need.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha12Rng,
}

impl RngStream {
    /// Uniform draw in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Index draw by inverse CDF over `weights` in the given order.
    ///
    /// Weights must be non-negative and sum to 1 (within 1e-9, which
    /// absorbs softmax round-off).
    pub fn categorical(&mut self, weights: &[f64]) -> Result<usize> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("categorical weights are empty".into()));
        }
        let mut sum = 0.0;
        for &w in weights {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "categorical weight {w} is negative or non-finite"
                )));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "categorical weights sum to {sum}, expected 1"
            )));
        }
        let target = self.uniform() * sum;
        let mut cumulative = 0.0;
        let mut last_positive = 0;
        for (i, &w) in weights.iter().enumerate() {
            if w > 0.0 {
                last_positive = i;
            }
            cumulative += w;
            if target < cumulative {
                return Ok(i);
            }
        }
        // Round-off pushed the target past the final cumulative sum.
        Ok(last_positive)
    }

    pub fn gaussian(&mut self, mean: f64, std_dev: f64) -> Result<f64> {
        if !mean.is_finite() || !std_dev.is_finite() || std_dev < 0.0 {
            return Err(Error::InvalidInput(format!(
                "gaussian parameters mean={mean}, std_dev={std_dev} are invalid"
            )));
        }
        let z: f64 = rand_distr::StandardNormal.sample(&mut self.rng);
        Ok(mean + std_dev * z)
    }

    /// Simplex draw via normalized gamma variates.
    pub fn dirichlet(&mut self, concentration: &[f64]) -> Result<Vec<f64>> {
        if concentration.is_empty() {
            return Err(Error::InvalidInput("dirichlet concentration is empty".into()));
        }
        if concentration.iter().any(|&c| !c.is_finite() || c <= 0.0) {
            return Err(Error::InvalidInput(
                "dirichlet concentration entries must be positive and finite".into(),
            ));
        }
        let mut draws = Vec::with_capacity(concentration.len());
        for &c in concentration {
            let gamma = rand_distr::Gamma::new(c, 1.0)
                .map_err(|e| Error::InvalidInput(format!("gamma({c}, 1): {e}")))?;
            draws.push(gamma.sample(&mut self.rng));
        }
        let total: f64 = draws.iter().sum();
        if !(total > 0.0) {
            return Err(Error::NumericalFailure(
                "dirichlet gamma draws summed to zero".into(),
            ));
        }
        for d in &mut draws {
            *d /= total;
        }
        Ok(draws)
    }
}

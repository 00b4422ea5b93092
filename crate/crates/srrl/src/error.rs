use thiserror::Error;

/// Errors raised by model construction, oracle solves, and agent runs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("probability entry {value} at (state {state}, action {action}, next {next}) is outside [0, 1]")]
    ProbabilityOutOfRange {
        state: usize,
        action: usize,
        next: usize,
        value: f64,
    },

    #[error("probability row (state {state}, action {action}) sums to {sum}, beyond tolerance")]
    RowSumOutOfTolerance { state: usize, action: usize, sum: f64 },

    #[error("chain is not irreducible")]
    NotIrreducible,

    #[error("chain is not aperiodic (period {period})")]
    NotAperiodic { period: u64 },

    #[error("chain has no unique stationary distribution")]
    NoUniqueStationary,

    #[error("feature basis violates the critic assumptions: {0}")]
    FeatureAssumption(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("actor parameters diverged at step {step} (max |theta| = {norm:.3e})")]
    Divergence { step: u64, norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

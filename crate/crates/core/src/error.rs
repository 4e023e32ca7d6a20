use thiserror::Error;

use crate::perm::{Permutation, Word};

/// Errors produced while building or checking universal cycles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("window too large: window {window} exceeds word length {len}")]
    WindowTooLarge { window: usize, len: usize },

    #[error("window size must be at least 1")]
    ZeroWindow,

    #[error("unsupported incomparability pattern in window {0}")]
    UnsupportedPattern(Word),

    #[error("not a permutation of 1..{len}: {entries:?}")]
    InvalidPermutation { entries: Vec<i64>, len: usize },

    #[error("order too small: n = {n}, need n >= {min}")]
    OrderTooSmall { n: usize, min: usize },

    #[error("order too large: n = {n}, at most {max} supported")]
    OrderTooLarge { n: usize, max: usize },

    #[error("shortening count {i} out of range 0..={max}")]
    ShorteningOutOfRange { i: usize, max: usize },

    #[error("{0} is not a cluster of this graph")]
    UnknownCluster(Permutation),

    #[error("invalid twin-cycle selection: {0}")]
    InvalidSelection(String),

    #[error("tour member {0} has no matching edge (tour family inconsistent with compression)")]
    InconsistentTour(Permutation),

    #[error("graph not Eulerian: {0}")]
    NotEulerian(String),

    #[error("start cluster {0} has no edges")]
    StartIsolated(Permutation),

    #[error("inconsistent trail at step {step}: {reason}")]
    InconsistentTrail { step: usize, reason: String },

    #[error("glue precondition violated: {0}")]
    GluePrecondition(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by construction and evaluation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid exponent {0}: must be >= 1 (or infinity)")]
    InvalidExponent(f64),
    #[error("exponents q={q} and p={p} are not a dual pair (1/q + 1/p must equal 1)")]
    NotDualPair { q: f64, p: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("layer index {index} out of range for depth {depth}")]
    LayerOutOfRange { index: usize, depth: usize },
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("invalid class specification: {0}")]
    InvalidSpec(String),
    #[error("class specification is not canonical: {0}")]
    NotCanonical(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("networks are not a single-layer perturbation pair: {0}")]
    NotPerturbationPair(String),
    #[error("network is infeasible for the requested radius/exponents: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

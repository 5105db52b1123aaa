//! Error type shared by all solvers in this crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cone is not pointed (contains a line)")]
    NotPointed,

    #[error("column {index} of the generator matrix is zero")]
    ZeroColumn { index: usize },

    #[error("all generators are zero")]
    AllZeroGenerators,

    #[error("region is unbounded in coordinate {coordinate}")]
    UnboundedRegion { coordinate: usize },

    #[error("enumeration region too large: {size} candidate points (limit {limit})")]
    RegionTooLarge { size: String, limit: u64 },

    #[error("generators must have gcd 1, found gcd {gcd}")]
    GcdNotOne { gcd: String },

    #[error("Frobenius numbers are defined for one-row matrices, got {rows} rows")]
    MultiRow { rows: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

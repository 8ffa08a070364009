use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at q = {0}")]
    PoleAtValue(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("label out of range: {0}")]
    LabelOutOfRange(String),
    #[error("target is not a permutation of the bottom: {0}")]
    NotAPermutation(String),
    #[error("path does not fit the word: {0}")]
    PathMismatch(String),
    #[error("paths end at different weights: {0}")]
    WeightMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid relation pattern: {0}")]
    InvalidPattern(String),
    #[error("solution space is not one-dimensional: {0}")]
    NonUniqueSolution(String),
    #[error("local intersection form vanishes: {0}")]
    DegenerateKappa(String),
    #[error("no explicit recursion for n = {0}")]
    UnsupportedRank(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

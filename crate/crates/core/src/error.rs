use std::fmt;

use thiserror::Error;

/// Stage of the decoder at which a received word was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureStage {
    /// The Hankel system built from the syndrome has no non-zero kernel vector.
    Kernel,
    /// The locator vector has no zeros.
    Locator,
    /// The magnitude system is inconsistent on the residual syndrome equations.
    Magnitudes,
    /// The corrected word still has a non-zero syndrome.
    FinalSyndrome,
}

impl fmt::Display for FailureStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FailureStage::Kernel => "kernel",
            FailureStage::Locator => "locator",
            FailureStage::Magnitudes => "magnitudes",
            FailureStage::FinalSyndrome => "final-syndrome",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("modulus is not a monic irreducible polynomial of degree {degree} over GF({p})")]
    ReducibleModulus { p: u64, degree: u32 },
    #[error("value {value} out of range for a field of order {order}")]
    OutOfRange { value: u64, order: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{a} has no multiplicative order modulo {m}")]
    NoOrder { a: u64, m: u64 },
    #[error("characteristic {p} divides length {n}: no primitive {n}-th root of unity exists")]
    CharacteristicDividesLength { p: u64, n: u64 },
    #[error("{n} does not divide the multiplicative group order {group_order}")]
    NoRoot { n: u64, group_order: u64 },
    #[error("element does not have exact order {n}")]
    NotPrimitiveRoot { n: u64 },
    #[error("step {k} is not coprime to length {n}")]
    InvalidStep { n: u64, k: u64 },
    #[error("dimension {r} out of range 1..={n}")]
    DimensionOutOfRange { r: usize, n: usize },
    #[error("evaluation points must be distinct and non-zero")]
    InvalidEvaluationPoints,
    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("rate {0} is not strictly between 0 and 1")]
    RateOutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("instance too large for exhaustive search: {0}")]
    GuardExceeded(String),
    #[error("no codeword within distance {t}")]
    Undecodable { t: usize },
    #[error("too many errors (detected at {stage} stage)")]
    TooManyErrors { stage: FailureStage },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

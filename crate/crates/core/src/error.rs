use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rotation parameter is not unimodular (|lambda| = {modulus})")]
    NonUnimodularRotation { modulus: f64 },
    #[error("polynomial does not vanish at the origin (c0 = {re} + {im}i)")]
    NotVanishingAtOrigin { re: f64, im: f64 },
    #[error("not a normalized polynomial: {reason}")]
    NotNormalized { reason: &'static str },
    #[error("invalid degree {degree}: {reason}")]
    InvalidDegree { degree: usize, reason: &'static str },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("root iteration did not converge in {0} iterations")]
    DidNotConverge(usize),
    #[error("trigonometric polynomial is negative somewhere (min {min_value} at t = {argmin_t})")]
    NotNonnegative { min_value: f64, argmin_t: f64 },
    #[error("trigonometric polynomial is identically zero")]
    ZeroTrig,
    #[error("unit-circle root cluster of odd size {size} near angle {angle}")]
    OddUnitClusterAfterTolerance { size: usize, angle: f64 },
    #[error("root pairing failed: {inside} roots inside the circle, {outside} outside")]
    UnpairedRoots { inside: usize, outside: usize },
    #[error("polynomial is not extremal: |a_n| = {modulus}, expected {expected}")]
    NotExtremal { modulus: f64, expected: f64 },
    #[error("expected {expected} middle coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

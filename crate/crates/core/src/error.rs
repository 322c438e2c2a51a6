use thiserror::Error;

use crate::arith::Sign;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order {0:?}: expected an integer >= 2 or `oo`")]
    InvalidOrder(String),

    #[error("{triple} is not hyperbolic: chi is {chi}")]
    NotHyperbolic { triple: String, chi: Sign },

    #[error("k = {k} is not a unit modulo 2m = {two_m}")]
    NotUnit { k: u128, two_m: u128 },

    #[error("zero curvature at {triple}, k = {k}")]
    ZeroCurvature { triple: String, k: u128 },

    #[error("{hyperbolic} hyperbolic conjugates of {triple} not divisible by #H = {h}")]
    NonDivisible { triple: String, hyperbolic: u128, h: u128 },

    #[error("prime {q} divides a*b = {ab}")]
    PrimeDividesPair { q: u64, ab: u128 },

    #[error("{0} is too large for an exhaustive scan")]
    TooLarge(String),

    #[error("post-verification failed for {triple}: adim {got}, expected {want}")]
    PostVerification { triple: String, got: u128, want: u128 },

    #[error("oracle could not decide the sign of kappa for {triple}, k = {k}")]
    Inconclusive { triple: String, k: u128 },

    #[error("{0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Breaches of an internal invariant, as opposed to bad input.
    pub fn is_invariant(&self) -> bool {
        matches!(
            self,
            Error::ZeroCurvature { .. } | Error::NonDivisible { .. } | Error::PostVerification { .. }
        )
    }
}

//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ChainError {
    /// A constructor argument violated its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A profile failed one of its admissibility checks.
    #[error("profile rejected: {0}")]
    ProfileRejected(String),

    /// An initial gap fell outside the admissible band around the rest spacing.
    #[error("gap {gap:.6e} behind particle {site} outside [{lo:.6e}, {hi:.6e}]")]
    GapOutOfBand {
        site: usize,
        gap: f64,
        lo: f64,
        hi: f64,
    },

    /// Two particles approached closer than the collision threshold during
    /// time integration.
    #[error("collision at t = {t:.6}: gap {gap:.3e} behind particle {site}")]
    Collision { t: f64, site: usize, gap: f64 },

    /// A pair distance entered the region where the potential is undefined.
    #[error("pair distance {dist:.6e} below the defined range (core starts at {limit:.6e})")]
    UndefinedCore { dist: f64, limit: f64 },

    /// An iterative root solve hit its iteration cap.
    #[error("root solve did not converge within {0} iterations")]
    NoConvergence(usize),

    /// A requested evaluation point lies outside the valid domain.
    #[error("point {value:.6} outside {domain}")]
    OutOfDomain { value: f64, domain: String },

    /// Serialization is only defined for finite sine-series profiles.
    #[error("profile has no finite sine-series form: {0}")]
    NotSerializable(String),

    /// A profile text block failed to parse.
    #[error("bad profile text at line {line}: {reason}")]
    BadProfileText { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, ChainError>;

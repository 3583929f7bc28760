//! Error types shared across the crate.

use thiserror::Error;

/// Parity restriction attached to an identity family or catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityConstraint {
    /// No restriction.
    None,
    /// Requires `m` odd.
    MOdd,
    /// Requires `m` even.
    MEven,
    /// Requires `n` odd.
    NOdd,
    /// Requires `n` even.
    NEven,
}

impl ParityConstraint {
    /// Whether the pair `(m, n)` satisfies the constraint.
    pub fn admits(self, m: i64, n: i64) -> bool {
        match self {
            ParityConstraint::None => true,
            ParityConstraint::MOdd => m.rem_euclid(2) == 1,
            ParityConstraint::MEven => m.rem_euclid(2) == 0,
            ParityConstraint::NOdd => n.rem_euclid(2) == 1,
            ParityConstraint::NEven => n.rem_euclid(2) == 0,
        }
    }

    /// Short human-readable form, e.g. `"m odd"`.
    pub fn label(self) -> &'static str {
        match self {
            ParityConstraint::None => "none",
            ParityConstraint::MOdd => "m odd",
            ParityConstraint::MEven => "m even",
            ParityConstraint::NOdd => "n odd",
            ParityConstraint::NEven => "n even",
        }
    }
}

/// Errors raised by the exact and certified kernels.
///
/// A `false` verification result is never reported through this type:
/// errors signal caller mistakes (parity, arity, bad parameters) or an
/// internal precision fault, while falsified identities are ordinary
/// return values.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator in rational construction")]
    ZeroDenominator,

    #[error("pole in arctangent combination: {0}")]
    CombinePole(&'static str),

    #[error("parity violation: {context} requires {required}, got {got}")]
    ParityViolation {
        context: String,
        required: &'static str,
        got: i64,
    },

    #[error("sequence too short: need at least {needed} entries, have {len}")]
    SequenceTooShort { needed: usize, len: usize },

    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precision cap exceeded at {cap_bits} bits (internal error)")]
    PrecisionCapExceeded { cap_bits: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

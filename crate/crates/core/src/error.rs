use thiserror::Error;

/// Errors produced by the value types and operators.
///
/// Parsing and formula evaluation have their own richer error types in
/// [`crate::dsl`]; everything else funnels through here.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {0} outside [0, 1]")]
    OutOfRange(f64),

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("intervals [{a_lo}, {a_hi}] and [{b_lo}, {b_hi}] overlap")]
    OverlappingIntervals {
        a_lo: f64,
        a_hi: f64,
        b_lo: f64,
        b_hi: f64,
    },

    #[error("a subunitary set needs at least one interval")]
    EmptySet,

    #[error("priority order must name each of T, I, F exactly once")]
    InvalidPriority,

    #[error("need at least {min} variables, got {got}")]
    TooFewVariables { got: usize, min: usize },

    #[error("arity {got} exceeds the enumeration guard of {max}")]
    ArityGuard { got: usize, max: usize },

    #[error("component vectors have lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("zero-sum triple cannot be rescaled")]
    ZeroSum,

    #[error("target norm {0} must be positive")]
    NonPositiveNorm(f64),

    #[error("operands are defined over different universes")]
    UniverseMismatch,

    #[error("universe must be non-empty and element names unique")]
    InvalidUniverse,

    #[error("set does not cover universe element {0:?}")]
    MissingElement(String),

    #[error("unknown universe element {0:?}")]
    UnknownElement(String),

    #[error("element {0:?} assigned more than once")]
    DuplicateElement(String),

    #[error("family member name {0:?} is duplicated or reserved")]
    BadMemberName(String),
}

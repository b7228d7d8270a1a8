//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by lattice, recurrence, and detection operations.
///
/// Mathematical *outcomes* (a regularity failure, a `NotClassical` verdict)
/// are data, not errors; only contract violations and genuinely undefined
/// evaluations surface here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two interpolation points share an abscissa.
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    /// A q-linear lattice was evaluated at a non-half-integer argument.
    #[error("q-linear lattice evaluated at non-half-integer argument {0}")]
    NonHalfIntegerArgument(String),

    /// Could not collect enough distinct sampling abscissae for an operator.
    /// Cannot occur for a valid lattice; kept as a defensive check.
    #[error("degenerate sampling: not enough distinct lattice values")]
    DegenerateSampling,

    /// Lattice constants violate the structural invariants.
    #[error("invalid lattice: {0}")]
    InvalidLattice(&'static str),

    /// Pearson coefficients violate the structural invariants.
    #[error("invalid Pearson data: {0}")]
    InvalidPearsonData(&'static str),

    /// Recurrence table rejected (length mismatch or a zero C_k).
    #[error("invalid recurrence table: {0}")]
    InvalidTable(&'static str),

    /// A recurrence-coefficient formula has a non-removable zero denominator
    /// at this index; non-regularity has been reached.
    #[error("division by zero in recurrence formula at n = {n}")]
    DivisionByZeroInFormula { n: usize },

    /// The four-coefficient inversion is undefined when C_2 = 0.
    #[error("inversion undefined: C2 = 0")]
    C2Zero,

    /// A moment-indexed operation was given too short a moment list.
    #[error("insufficient moments: need {needed}, got {got}")]
    InsufficientMoments { needed: usize, got: usize },

    /// A recurrence table is shorter than the verification range demands.
    #[error("table too short: {len} rows, need {needed}")]
    TableTooShort { len: usize, needed: usize },

    /// An index lies outside the finite range an operation is defined on.
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// Para-Krawtchouk parameters violate their admissibility conditions.
    #[error("invalid para-Krawtchouk parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Crate-wide error type. Variant names follow the operation contracts.
#[derive(Debug, Error)]
pub enum Error {
    /// The element is not exactly zero but its valuation exceeded the
    /// precision-escalation cap. Callers must test exact zero first.
    #[error("valuation undetermined at precision cap {cap} p-adic digits")]
    AmbiguousValuation { cap: u32 },

    /// Only conductors of the form `p^a * t` with `t | p-1` embed into the
    /// ramified cyclotomic tower over `Q_p` that the oracle models.
    #[error("conductor {m} is not of the form p^a*t with t | p-1 for p={p}")]
    UnsupportedConductor { p: u64, m: u64 },

    #[error("character has conductor 0; this operation needs conductor >= 1")]
    TrivialCharacter,

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("weight n={n} is not below q={q}: the triangular basis formula does not apply")]
    WeightTooLarge { n: u32, q: u64 },

    #[error("coefficient at (k={k}, beta={beta}) lies outside pi^(-km) N_k(beta)")]
    InvalidCoeffs { k: i64, beta: String },

    #[error("representation parameters inconsistent with regime: {0}")]
    RegimeMismatch(String),

    #[error("cannot decompose {0} as pi^j times a unit of the base field")]
    NonUnit(String),

    #[error("point or precision outside the computed table: {0}")]
    HorizonExceeded(String),

    #[error("expansion does not vanish outside O_F: row {level} is not constant on W1-cosets")]
    NotVanishing { level: i64 },

    #[error("zero has no inverse")]
    DivisionByZero,

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

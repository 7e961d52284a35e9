use thiserror::Error;

/// Errors surfaced by the invariant calculus.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("evaluation is missing an assignment for unknown `{0}`")]
    MissingUnknown(String),

    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("division by a non-constant or zero polynomial")]
    BadDivisor,

    #[error("equation is not linear in its unknowns: `{0}`")]
    NonLinear(String),

    #[error("inconsistent linear system: reduced to `{0} = 0`")]
    Inconsistent(String),

    #[error("hypersurface degree must be at least 3, got {0}")]
    InvalidDegree(i64),

    #[error("degenerate twist choice: the c2 coefficient vanishes for c1={c1}, t={t}")]
    DegenerateTwist { c1: i64, t: i64 },

    #[error("empty degree range")]
    EmptyRange,

    #[error("twist {n} is in the special range [0, {e}]: a resolution is required")]
    SpecialRange { n: i64, e: i64 },

    #[error("resolution shape incompatible with (d, g, e): {0}")]
    IncompatibleShape(String),

    #[error("resolution has no generators")]
    NoGenerators,

    #[error("negative multiplicity {mult} at twist {twist}")]
    NegativeMultiplicity { twist: i64, mult: String },

    #[error("not a curve complex: {0}")]
    NotCurveComplex(String),

    #[error("insufficient multiplicity at twist {twist}: cannot cancel {count}")]
    InsufficientMultiplicity { twist: i64, count: String },

    #[error("complex is not self-dualizable at level e={e}: {reason}")]
    NotSelfDual { e: i64, reason: String },

    #[error("symbolic multiplicity where an integer is required: `{0}`")]
    SymbolicMultiplicity(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

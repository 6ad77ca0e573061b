use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {from} does not divide {to}")]
    IncompatibleConductor { from: u32, to: u32 },
    #[error("fuel exhausted: {0}")]
    FuelExhausted(String),
    #[error("axiom failure in {name}: {failed}")]
    AxiomFailure { name: String, failed: String },
    #[error("element is not group-like")]
    NotGrouplike,
    #[error("group-like element is not an involution")]
    NotInvolutiveGrouplike,
    #[error("character enumeration incomplete: {missing} characters lie outside Q(zeta{conductor})")]
    IncompleteCharacters { missing: usize, conductor: u32 },
    #[error("set not closed under multiplication")]
    NotClosed,
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown scalar `{0}`")]
    UnknownScalar(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("basis not closed: {0}")]
    BasisNotClosed(String),
    #[error("missing structure: {0}")]
    MissingStructure(String),
    #[error("unknown builtin `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("datum is admissible but not a super datum: {0}")]
    SuperCriteriaFailure(String),
    #[error("matrix is not a Hopf automorphism")]
    NotAutomorphism,
    #[error("generator images do not extend: {0}")]
    ExtensionFailure(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("undeclared variable `{name}` at byte {offset}")]
    UndeclaredVariable { name: String, offset: usize },

    #[error("negative exponent at byte {offset}")]
    NegativeExponent { offset: usize },

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("exponent vector has length {got}, ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },

    #[error("monomial orderings differ")]
    OrderingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("coefficient {0} is not representable in the coefficient field")]
    NotRepresentable(String),

    #[error("reduction step cap of {cap} exceeded")]
    CapExceeded { cap: u64 },

    #[error("colon by the zero ideal requested")]
    ZeroDivisorRequest,

    #[error("ideal is not zero-dimensional (Krull dimension {dim})")]
    NotZeroDimensional { dim: usize },

    #[error("seeded computation `{what}` disagrees between seeds: {first} vs {second}")]
    GenericitySuspect {
        what: String,
        first: String,
        second: String,
    },

    #[error("genericity failure in {context}: expected codimension {expected}, found {actual}")]
    GenericityFail {
        context: String,
        expected: usize,
        actual: usize,
    },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("curve input not supported: {0}")]
    NotUnibranchSupported(String),

    #[error("rank defect: {0}")]
    RankDefect(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("shape mismatch: {0}")]
    Shape(String),
}

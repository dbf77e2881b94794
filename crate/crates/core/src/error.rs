use thiserror::Error;

/// Errors raised by the library. Decoding failures are not errors; they are
/// reported through [`crate::decoder::DecodeOutcome`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{e} exceeds the supported maximum of 2^20")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("invalid field modulus: {0}")]
    BadModulus(String),
    #[error("element {value} is out of range for a field of size {q}")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("evaluation points are not pairwise distinct")]
    RepeatedPoints,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("polynomial degree {degree} violates bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("invalid decoder parameters: {0}")]
    InvalidParams(String),
    #[error("{i:?} is not below {j:?} in the product order")]
    NotDominated { i: Vec<u32>, j: Vec<u32> },
    #[error("invalid Pade problem: {0}")]
    InvalidProblem(String),
    #[error("instance too large for exhaustive search ({0} candidates)")]
    TooLarge(u128),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

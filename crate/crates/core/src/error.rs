use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be prime, got {0}")]
    NotPrime(u64),
    #[error("modulus {0} outside the supported range 2 <= p < 2^31")]
    ModulusOutOfRange(u64),
    #[error("field elements from different moduli ({0} vs {1})")]
    ModulusMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,

    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroInput,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("generator degrees must be positive")]
    InvalidDegree,
    #[error("quotient is not Artinian (degree of regularity is infinite)")]
    NotArtinian,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("Hilbert oracle claims {claimed} standard monomials in degree {degree}, only {actual} remain")]
    OracleViolation {
        degree: u32,
        claimed: u64,
        actual: u64,
    },
    #[error("step degree {degree} exceeds the cap {cap}")]
    TimeoutDegree { degree: u32, cap: u32 },

    #[error("degree {0} is below every generator degree")]
    EmptyMatrix(u32),
    #[error("no Groebner basis extracted up to degree {0}")]
    NotReached(u32),
    #[error("matrix multiplication exponent must satisfy 2 <= omega < 3, got {0}")]
    InvalidExponent(f64),

    #[error("quotient not Artinian up to the degree cap {0}")]
    NotArtinianWithinCap(u32),
    #[error("cap exceeded: {parameter} = {value} > {cap}")]
    CapExceeded {
        parameter: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("no degree fall up to the degree cap {0}")]
    NoFallWithinCap(u32),
    #[error("precondition not verified: {0}")]
    PreconditionUnverified(String),
    #[error("instance generation failed after {retries} attempts: {reason}")]
    GenerationFailed { retries: u32, reason: String },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("golden data: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime, got {0}")]
    NotPrime(u64),
    #[error("p = {0} is too large for word-sized arithmetic")]
    ModulusTooLarge(u64),
    #[error("nilpotency index k must be at least 1")]
    InvalidNilpotency,
    #[error("automorphism parameter s = {s} is zero modulo p = {p}")]
    DegenerateAutomorphism { p: u64, s: u64 },
    #[error("operands belong to different rings")]
    ContextMismatch,
    #[error("coefficient vector has {got} entries, the ring needs {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("{0} is not a unit")]
    NotUnit(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor's leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("index {index} out of range {lo}..={hi}")]
    OutOfRange { index: usize, lo: usize, hi: usize },
    #[error("code length n must be at least 1")]
    InvalidLength,
    #[error("generator list is empty")]
    NoGenerators,
    #[error("the zero code has no generator form")]
    ZeroCode,
    #[error("enumeration of {required} items exceeds the guard of {guard}")]
    GuardExceeded { required: String, guard: u64 },
    #[error("generators do not have the shape of a classified form: {0}")]
    InvalidForm(String),
    #[error("message does not match the form: {0}")]
    MessageBound(String),
    #[error("{0} does not divide x^n - 1 over the base field")]
    NotDivisor(String),
    #[error("two error patterns share the syndrome {0}")]
    SyndromeCollision(String),
    #[error("syndrome {0} is not in the table")]
    Uncorrectable(String),
    #[error("word is not a codeword")]
    NotCodeword,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

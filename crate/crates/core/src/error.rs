use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different fields")]
    DescriptorMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("matrix is singular")]
    Singular,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("exhaustive root search over GF({modulus}) exceeds the bound {bound}")]
    ModulusTooLarge { modulus: u64, bound: u64 },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("matrix is not multiplicity-free")]
    NotMultiplicityFree,
    #[error("bad eigenvalue ordering: {0}")]
    BadOrdering(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("no split decomposition exists for the given orderings")]
    SplitDoesNotExist,
    #[error("vanishing pattern violated: {0}")]
    PatternViolation(String),
    #[error("matrix is not irreducible tridiagonal")]
    NotIrreducibleTridiagonal,
    #[error("the pair is not a Leonard system for the given orderings")]
    NotLeonard,
    #[error("parameter array invariant violated: {0}")]
    InvariantViolation(String),
    #[error("certificate self-check failed: {0}")]
    CertificateCheck(String),
    #[error("no valid sample found within {attempts} attempts")]
    SamplingBudgetExhausted { attempts: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

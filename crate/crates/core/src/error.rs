use thiserror::Error;

/// Errors raised by the library.
///
/// `InvariantViolation` marks a failed internal cross-check (two independent
/// computations disagreeing); everything else is a rejected input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("polynomial degree {0} exceeds the supported maximum of {max}", max = crate::linalg::factor::MAX_FACTOR_DEGREE)]
    DegreeTooLarge(usize),
    #[error("polynomial {0} is not irreducible over Q")]
    Reducible(String),
    #[error("not a Seifert matrix: {0}")]
    NotSeifert(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{zeta}^{n} != 1 in F_{p}")]
    NotRootOfUnity { zeta: u64, n: u64, p: u64 },
    #[error("F_{p} has no primitive {n}-th root of unity")]
    NoPrimitiveRoot { n: u64, p: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error("malformed knot description: {0}")]
    KnotFormat(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

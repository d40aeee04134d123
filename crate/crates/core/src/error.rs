use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the supported limit of {limit}")]
    FieldTooLarge { p: u64, m: u32, limit: u64 },
    #[error("modulus {0:?} is not a monic primitive polynomial")]
    BadModulus(Vec<u32>),
    #[error("element {elem} is not in GF({q})")]
    BadElement { elem: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("generator matrix has rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("{what} needs {needed} steps, over the budget of {budget} (raise {var})")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u128,
        var: &'static str,
    },
    #[error("MacWilliams transform produced a non-integral or negative entry at weight {weight}")]
    MacWilliams { weight: usize },
    #[error("projective point {point} occurs {count} times, more than s = {s}")]
    MultiplicityExceeded { point: usize, count: usize, s: usize },
    #[error("degenerate result: {0}")]
    Degenerate(String),
    #[error("invalid multiplicity {value} for projective point {point}")]
    BadMultiplicity { point: usize, value: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("construction check failed: {0}")]
    Verification(String),
    #[error("denominator 1 + a^{i} + a^{two_i} vanishes at i = {i}", two_i = 2 * i)]
    VanishingDenominator { i: u32 },
    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

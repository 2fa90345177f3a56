use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants are grouped loosely by the module that raises them; the CLI
/// maps every variant to exit code 1 and prints it as an `{"error": ..}`
/// record.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("denominator of {value} is divisible by {p}")]
    NotIntegralAt { value: String, p: u64 },

    #[error("ideal above {p} is ramified")]
    Ramified { p: u64 },

    #[error("singular curve: discriminant is zero")]
    SingularCurve,

    #[error("curve has bad reduction at the prime above {p}")]
    BadReduction { p: u64 },

    #[error("field of size {q} exceeds enumeration cap {cap}; raise it with --cap (hard limit {hard})")]
    FieldTooLarge { q: u64, cap: u64, hard: u64 },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("factor pattern {0:?} is not the cycle type of an element of A5")]
    NonIcosahedralPattern(Vec<usize>),

    #[error("ideal above {p} (sqrt5 -> {root}) lies in the excluded set")]
    Excluded { p: u64, root: u64 },

    #[error("integrity failure at p = {p}: {detail}")]
    Integrity { p: u64, detail: String },

    #[error("trace at p = {p} cannot be resolved: {detail}")]
    Unresolved { p: u64, detail: String },

    #[error("tau = {0} is not in the upper half plane")]
    NotUpperHalfPlane(String),

    #[error("expected a positive real, got {0}")]
    NotPositive(f64),

    #[error("theta value vanishes numerically at tau = {0}")]
    ThetaVanishes(String),

    #[error("character is not primitive")]
    NotPrimitive,

    #[error("table is not a Dirichlet character: {0}")]
    BadCharacter(String),

    #[error("L-value vanishes; check the parity of weight against the character")]
    ZeroLValue,

    #[error("5-adic precision insufficient: {0}")]
    Precision(String),

    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("coefficient at index {index} is not 5-integral")]
    NotFiveIntegral { index: usize },

    #[error("finite-difference step {h} too large for Im(tau) = {y}")]
    StepTooLarge { h: f64, y: f64 },

    #[error("j = {0} is a singular value of the Klein system")]
    KleinSingular(String),

    #[error("degenerate principal quintic (A = 0)")]
    DegenerateQuintic,

    #[error("Moebius map has zero determinant")]
    ZeroDeterminant,

    #[error("degree drops under substitution: leading coefficient {0} vanishes")]
    DegreeDrop(String),

    #[error("solver failed after {starts} starts; best relative residual {best_residual:e}")]
    SolverFailure { starts: usize, best_residual: f64 },

    #[error("n_max {n_max} exceeds cap {cap}")]
    OverCap { n_max: usize, cap: usize },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

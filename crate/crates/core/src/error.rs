use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0:?} is reducible over Z_p")]
    Reducible(Vec<u32>),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u32> },
    #[error("no registered Conway polynomial for GF({p}^{m})")]
    UnregisteredField { p: u32, m: u32 },
    #[error("operands belong to different fields")]
    CtxMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("operands belong to different skew polynomial rings")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("both arguments are zero")]
    BothZero,
    #[error("constant coefficient of the modulus is zero")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("zero polynomial has no lex-degree")]
    ZeroPolynomial,
    #[error("the two moduli do not define a free quotient (S-polynomial does not reduce to zero)")]
    NonCommutingModuli,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("enumeration budget exceeded (distance bounds so far: {lower}..={upper})")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("search space of {candidates} candidates exceeds the budget of {budget}")]
    SearchBudgetExceeded { candidates: u64, budget: u64 },
    #[error("generator degree {deg} out of range for length {n}")]
    DegreeOutOfRange { deg: usize, n: usize },
    #[error("g is not a two-sided divisor of f")]
    NotTwoSidedDivisor,
    #[error("lex-degree {lexdeg:?} out of range for an {s}x{l} array")]
    LexdegOutOfRange { lexdeg: (u32, u32), s: usize, l: usize },

    #[error("witness point does not live in the requested extension")]
    ExtensionTooSmall,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("exponent vector is all zero")]
    MvecAllZero,
    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

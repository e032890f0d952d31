use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet order must be at least 1, got q={0}")]
    InvalidAlphabet(u32),

    #[error("exponent {value} is out of range for q={q}")]
    InvalidExponent { value: u32, q: u32 },

    #[error("sequences must be nonempty")]
    EmptySequence,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("alphabet mismatch: q={left} vs q={right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("a set needs at least one row")]
    EmptySet,

    #[error("{0} has not been verified as complementary")]
    NotVerified(&'static str),

    #[error("expected a set of size {expected}, found {found}")]
    WrongSetSize { expected: usize, found: usize },

    #[error("inadmissible coefficients: {identity} does not vanish")]
    Inadmissible { identity: String },

    #[error("q={0} is odd; no element of U_q equals -1")]
    OddAlphabet(u32),

    #[error("the first pair of a Turyn product must be binary (exponents in {{0, q/2}})")]
    NotBinary,

    #[error("not a complementary set: first nonzero off-peak sum at shift {shift}")]
    NotComplementary { shift: usize },

    #[error("internal construction produced an unverifiable set: {0}")]
    ConstructionFailed(String),

    #[error("no construction path: {0}")]
    Unconstructible(String),

    #[error("q={0} is not supported here (supported: 2, 4)")]
    UnsupportedAlphabet(u32),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("seed '{name}': {reason}")]
    Seed { name: String, reason: String },

    #[error("search exceeded the work bound of {limit} nodes")]
    WorkBound { limit: u64 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

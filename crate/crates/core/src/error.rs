use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("denominator factor {0} has zero constant term; no power-series expansion exists")]
    NonExpandable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("group closure exceeded {cap} elements; the group is probably infinite")]
    CapExceeded { cap: usize },

    #[error("series is not symmetric: coefficient of t1^{a} t2^{b} differs from t1^{b} t2^{a}")]
    Asymmetric { a: u32, b: u32 },

    #[error("letter {letter} is outside the alphabet 1..={alphabet}")]
    AlphabetMismatch { letter: usize, alphabet: usize },

    #[error("matrix supplied for traceless slot {slot} has nonzero trace")]
    NotTraceless { slot: usize },

    #[error("{what} = {value} exceeds the feasibility cap {cap} (override with {env})")]
    ResourceCap {
        what: &'static str,
        value: usize,
        cap: usize,
        env: &'static str,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

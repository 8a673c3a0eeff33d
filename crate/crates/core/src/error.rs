use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("unsupported field order {0}: not a prime, and not a prime power in the built-in table")]
    UnsupportedOrder(usize),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("no Paley construction for q = {0} (needs a supported prime power, q ≡ 1 or 3 mod 4)")]
    NoPaley(usize),

    #[error("no real Hadamard of order {0}; pass --complex")]
    NoRealHadamard(usize),

    #[error("order {order} exceeds the configured maximum {max}")]
    TooLarge { order: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed design: {0}")]
    MalformedDesign(String),

    #[error("design has non-constant block size")]
    NonConstantBlockSize,

    #[error("at least {needed} bases required, got {got}")]
    TooFewBases { needed: usize, got: usize },

    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}

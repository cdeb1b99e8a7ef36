use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("class has {got} coefficients but the lattice basis has {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation needs a rank {expected} bundle, got rank {got}")]
    RankMismatch { expected: u32, got: u32 },

    #[error("product has total degree {got}, expected {expected}")]
    WrongDegree { expected: u32, got: u32 },

    #[error("-K^3 = {0} is odd; the anticanonical degree of a Gorenstein Fano threefold is even")]
    OddDegree(i64),

    #[error("{0}")]
    OutOfRange(String),

    #[error("bundle over P^1 needs at least one summand")]
    EmptyBundle,

    #[error("weight vector must be non-empty with positive entries")]
    InvalidWeights,

    #[error("weights {0:?} are not normalized")]
    NotNormalized(Vec<u64>),

    #[error("-K_P - X has degree {0}, must be positive")]
    NonPositiveDegree(i64),

    #[error("surface {0} is not handled here")]
    UnsupportedSurface(String),

    #[error("chi floor must be 36 or 37, got {0}")]
    InvalidChiFloor(i64),

    #[error("no case matches selector '{selector}'; valid ids: {}", valid.join(", "))]
    UnknownSelector { selector: String, valid: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;

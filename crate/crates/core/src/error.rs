use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid degree {0}")]
    InvalidDegree(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable x{0} repeated in a multilinear term")]
    RepeatedVariable(usize),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown association type index {index} in degree {degree}")]
    UnknownType { degree: usize, index: usize },

    #[error("characteristic {0} is not 0 or a prime")]
    BadCharacteristic(u64),

    #[error("characteristic {characteristic} must exceed {bound}")]
    CharacteristicTooSmall { characteristic: u64, bound: u64 },

    #[error("value {0} is not representable in the field")]
    NotRepresentable(String),

    #[error("singular matrix where an invertible one is required")]
    Singular,

    #[error("identity vanishes identically in the sign representation")]
    DegenerateIdentity,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("Leibniz identity fails at (e{0}, e{1}, e{2})")]
    NotLeibniz(usize, usize, usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

use crate::lattice::RootVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed matrix: {0}")]
    InvalidMatrix(String),

    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),

    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,

    #[error("operation requires a symmetric (simply-laced) matrix")]
    NotSymmetric,

    #[error("matrix is decomposable into {0} components")]
    Decomposable(usize),

    #[error("wrong type: expected {expected}, found {found}")]
    WrongType { expected: String, found: String },

    #[error("operation is only defined for the rank-3 algebra F")]
    WrongAlgebra,

    #[error("unknown preset '{0}'")]
    UnknownPreset(String),

    #[error("vertex index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector {vector} has length {found}, expected rank {expected}")]
    RankMismatch {
        vector: RootVector,
        expected: usize,
        found: usize,
    },

    #[error("vector {0} is not in the positive root lattice")]
    NotPositive(RootVector),

    #[error("could not parse vector '{0}'")]
    ParseVector(String),

    #[error("zero divisor with nonzero right-hand side at {0}")]
    DegenerateDivisor(RootVector),

    #[error("internal consistency failure at {vector}: {value} is not a nonnegative integer")]
    Integrality { vector: RootVector, value: String },

    #[error("1 - (a|a)/2 is not a nonnegative integer for norm {0}")]
    OddNorm(i64),

    #[error("lattice dimension d = {0} is below the minimum of 3")]
    InvalidDimension(u32),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

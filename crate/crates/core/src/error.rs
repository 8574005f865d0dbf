use thiserror::Error;

/// Errors raised by the library. Indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("diagonal entry a_{{{i},{i}}} is not 2", i = .0 + 1)]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry a_{{{},{}}} is positive", .0 + 1, .1 + 1)]
    PositiveOffDiagonal(usize, usize),
    #[error("a_{{{},{}}} = 0 but a_{{{},{}}} != 0", .0 + 1, .1 + 1, .1 + 1, .0 + 1)]
    ZeroAsymmetry(usize, usize),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("matrix is decomposable; classification requires an indecomposable matrix")]
    Decomposable,
    #[error("matrix is not of hyperbolic type")]
    NotHyperbolic,
    #[error("rank {0} is too large for this operation (limit {1})")]
    RankTooLarge(usize, usize),
    #[error("index {index} out of range for rank {rank}", index = .index + 1)]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector is not a root")]
    ZeroVector,
    #[error("vector has coordinates of both signs")]
    MixedSigns,
    #[error("vector is not positive")]
    NonPositive,
    #[error("vector has positive norm, so it is not imaginary")]
    NotImaginary,
    #[error("hyperboloid norm value must be <= 0")]
    PositiveNorm,
    #[error("vector is not a generated real root within the bound")]
    NotARoot,
    #[error("bound must be at least {min}")]
    InvalidBound { min: i64 },
    #[error("integer overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

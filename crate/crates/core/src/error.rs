use thiserror::Error;

/// Errors produced by constructions, conversions, spectra and searches.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not a tournament: {0}")]
    NotATournament(String),

    #[error("bad modulus {0}: expected a prime congruent to 3 mod 4")]
    BadModulus(u64),

    #[error("vertex index {index} out of range for a tournament of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("tournament is not almost regular")]
    NotAlmostRegular,

    #[error("tournament is not doubly regular")]
    NotDoublyRegular,

    #[error("matrix is not a skew Hadamard matrix")]
    NotSkewHadamard,

    #[error("normalization did not produce an all-ones first row")]
    NormalizationFailed,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("Seidel polynomial has a nonzero coefficient in degree {degree} where skew-symmetry forces zero")]
    ImaginaryResidue { degree: usize },

    #[error("eigenvalue grouping is ambiguous at tolerance {tol:e} (gap {gap:e})")]
    GroupingAmbiguous { tol: f64, gap: f64 },

    #[error("grouping tolerance {0:e} outside (0, 1e-3]")]
    InvalidTolerance(f64),

    #[error("embedded eigenvalue cluster near {value} has odd size {size}")]
    UnpairedEmbedding { value: f64, size: usize },

    #[error("sample point {re}{im:+}i coincides with an eigenvalue")]
    PoleAtSample { re: f64, im: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("search space of 2^{bits} codes exceeds the limit of 2^{limit}")]
    TooLarge { bits: u32, limit: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("counterexample found: {0}")]
    CounterexampleFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared across the crate.

use thiserror::Error;

/// Which algebraic symmetry a curvature tensor entry violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    /// `R_{i j̄ k l̄} = conj(R_{j ī l k̄})`
    Conjugate,
    /// `R_{i j̄ k l̄} = R_{k j̄ i l̄}`
    FirstPair,
    /// `R_{i j̄ k l̄} = R_{i l̄ k j̄}`
    SecondPair,
    /// Hermitian symmetry of a metric or bundle curvature slice.
    Hermitian,
}

impl std::fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SymmetryKind::Conjugate => "conjugate",
            SymmetryKind::FirstPair => "first-pair",
            SymmetryKind::SecondPair => "second-pair",
            SymmetryKind::Hermitian => "hermitian",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{kind} symmetry violated at (i,j,k,l)=({},{},{},{}): residual {residual:.3e} exceeds tolerance {tol:.3e}", indices.0, indices.1, indices.2, indices.3)]
    SymmetryViolation {
        kind: SymmetryKind,
        indices: (usize, usize, usize, usize),
        residual: f64,
        tol: f64,
    },

    #[error("non-finite entry at flat index {0}")]
    NonFinite(usize),

    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("metric is not positive definite (Cholesky failed)")]
    SingularMetric,

    #[error("direction vector has zero norm")]
    ZeroVector,

    #[error("frame is not unitary: residual {0:.3e}")]
    NonUnitaryFrame(f64),

    #[error("weights must not be identically zero")]
    ZeroWeights,

    #[error("lambda = {lambda} too small: must exceed max bundle eigenvalue {max_xi}")]
    LambdaTooSmall { lambda: f64, max_xi: f64 },

    #[error("empty grid or sample set")]
    EmptyGrid,

    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedFamilyRank { family: &'static str, rank: u32 },

    #[error("node index {node} out of range 1..={rank}")]
    NodeOutOfRange { node: u32, rank: u32 },

    #[error("descriptor outside the quadratic bisectional curvature theorem's range: {0}")]
    OutOfTheoremRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("tensor file format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Validation and numerical failures surfaced by the toolkit.
///
/// Every variant names the violated contract and carries the measured
/// deviation, so callers (and the CLI) can report exactly which check failed.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A matrix or vector had the wrong dimension for the operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Matrix is not Hermitian within tolerance.
    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {max_asymmetry:.3e} exceeds 1e-10")]
    NotHermitian { max_asymmetry: f64 },

    /// Matrix has an eigenvalue below the accepted negative tolerance.
    #[error("matrix is not positive semidefinite: eigenvalue {min_eigenvalue:.3e} below -1e-10")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// Density matrix trace differs from one.
    #[error("trace is not one: |trace - 1| = {deviation:.3e} exceeds 1e-10")]
    TraceNotOne { deviation: f64 },

    /// State vector is not normalized.
    #[error("state vector is not unit norm: |norm - 1| = {deviation:.3e} exceeds 1e-12")]
    NotUnitNorm { deviation: f64 },

    /// Matrix expected to be unitary is not.
    #[error("matrix is not unitary: max |(U^dag U - I)_ij| = {deviation:.3e} exceeds 1e-10")]
    NotUnitary { deviation: f64 },

    /// The spin-flip spectrum produced an eigenvalue too negative to clip.
    #[error("spin-flip spectrum inconsistent: eigenvalue {eigenvalue:.3e} below -1e-10")]
    SpectralConsistency { eigenvalue: f64 },

    /// State is not diagonal in the Bell basis.
    #[error("state is not Bell-diagonal: max Bell-basis off-diagonal {max_off_diagonal:.3e} exceeds 1e-8")]
    NotBellDiagonal { max_off_diagonal: f64 },

    /// Kraus operators do not satisfy the completeness relation.
    #[error("Kraus operators incomplete: max |(sum K^dag K - I)_ij| = {deviation:.3e} exceeds 1e-12")]
    KrausIncomplete { deviation: f64 },

    /// A scalar parameter was outside its documented range.
    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// Requested rank is not in 1..=4.
    #[error("rank {rank} outside 1..=4")]
    InvalidRank { rank: usize },

    /// Requested matrix dimension is not supported (2 or 4).
    #[error("dimension {dim} unsupported (expected 2 or 4)")]
    InvalidDimension { dim: usize },

    /// No CHSH violation is possible for this mixing weight.
    #[error("no violation threshold exists for p = {p}: need p > 1/sqrt(2)")]
    NoViolationPossible { p: f64 },

    /// The Jacobi eigensolver failed to reach its off-diagonal tolerance.
    #[error("Jacobi sweep cap reached with off-diagonal max {off_diagonal:.3e}")]
    JacobiNoConvergence { off_diagonal: f64 },

    /// A state file could not be parsed into a 4x4 complex matrix.
    #[error("malformed state file: {detail}")]
    StateFormat { detail: String },

    /// Underlying I/O failure while reading or writing a state file.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

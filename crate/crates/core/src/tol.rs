//! Numerical tolerances used across the crate.
//!
//! Every comparison against an analytic identity goes through one of these
//! constants, so the accuracy contract of the whole toolkit is visible in one
//! place. The ordering tests at the bottom pin the intended hierarchy:
//! solver-level tolerances are strictly tighter than validation tolerances,
//! which are tighter than the slack granted to end-to-end identities.

/// Max |a_ij - conj(a_ji)| accepted before a matrix is rejected as
/// non-Hermitian. Rounding in products of Hermitian factors stays orders of
/// magnitude below this.
pub const HERMITICITY: f64 = 1e-10;

/// Eigenvalues of a nominally PSD matrix may undershoot zero by at most this
/// much; values in [-PSD_EIG, 0) are clipped to zero, anything lower is an
/// error.
pub const PSD_EIG: f64 = 1e-10;

/// Positive eigenvalues below this floor are treated as exact zeros when the
/// matrix is PSD by construction. Cancellation in the matrix products that
/// build such matrices leaves debris of order 1e-16; square-rooting that
/// debris would smear 1e-8 into otherwise-exact spectra of rank-deficient
/// states, so it is floored away. True spectra of interest sit far above
/// this threshold.
pub const EIG_ZERO_FLOOR: f64 = 1e-13;

/// Convergence threshold for the cyclic Jacobi eigensolver: largest
/// off-diagonal modulus after a sweep.
pub const JACOBI_OFF_DIAG: f64 = 1e-13;

/// Hard cap on Jacobi sweeps; 4x4 Hermitian problems converge in well under
/// ten.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Max |trace - 1| accepted for a density matrix.
pub const TRACE: f64 = 1e-10;

/// Max |norm - 1| accepted for a pure-state vector.
pub const UNIT_NORM: f64 = 1e-12;

/// Max |(U^dag U - I)_ij| accepted for a unitary.
pub const UNITARITY: f64 = 1e-10;

/// Max |(sum_i K_i^dag K_i - I)_ij| accepted for a Kraus set.
pub const KRAUS_COMPLETENESS: f64 = 1e-12;

/// Max Bell-basis off-diagonal modulus for a state to count as Bell-diagonal.
pub const BELL_DIAGONAL: f64 = 1e-8;

/// Agreement demanded between two independent routes to the same quantity
/// (closed form vs direct pipeline, operator-trace vs correlation-matrix CHSH
/// value).
pub const DUAL_ROUTE: f64 = 1e-10;

/// Slack granted to analytic predictions checked over random ensembles
/// (rotated-Werner identities, inequality bounds on sampled states).
pub const PREDICTION: f64 = 1e-9;

/// Accuracy demanded of the brute-force CHSH maximizer relative to the
/// closed-form maximum, at the reference search resolution.
pub const BRUTE_FORCE: f64 = 1e-3;

/// Tolerance for closed-form family sweeps on fixed grids (Werner family,
/// purity), where every step is a few rounding errors away from exact.
pub const GRID_CLOSED_FORM: f64 = 1e-12;

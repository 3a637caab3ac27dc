//! Two-qubit entanglement and nonlocality toolkit.
//!
//! The crate is organized around a small chain of concepts:
//!
//! * [`linalg`] — dense complex matrices (2x2 and 4x4), a cyclic Jacobi
//!   eigensolver for Hermitian matrices, Kronecker products, the PSD matrix
//!   square root, and the spin-flip machinery used by the concurrence.
//! * [`states`] — pure states and density matrices of a qubit pair, the
//!   Werner family, and deterministic random-state generators.
//! * [`measures`] — concurrence, the correlation matrix, the CHSH quantity
//!   `M`, the nonlocality measure `N`, and CHSH values for explicit
//!   measurement settings.
//! * [`channels`] — phase-damping and amplitude-damping Kraus channels acting
//!   on one qubit of the pair, with closed-form predictions for the evolved
//!   Werner family.
//! * [`werner_analysis`] — unitary-rotated Werner states and the identities
//!   connecting their entanglement to their nonlocality.
//!
//! Basis convention throughout: two-qubit vectors and matrices are written in
//! the product basis |00>, |01>, |10>, |11>, with qubit A the left (most
//! significant) factor.

pub mod channels;
pub mod error;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod rng;
pub mod states;
pub mod tol;
pub mod werner_analysis;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, EigenResult};
pub use measures::{ChshSetting, CorrelationMatrix, CorrelationReport};
pub use rng::RngStream;
pub use states::{DensityMatrix, PureState};

/// Complex double-precision scalar used across the crate.
pub type Complex64 = num_complex::Complex<f64>;

//! Two-qubit states: pure vectors, density matrices, the Werner family, and
//! deterministic random-state generators.
//!
//! Random states follow the Ginibre recipe: fill a matrix with independent
//! standard complex Gaussians, form G G^dag, and normalize the trace. Random
//! unitaries are the Q factor of a Gram-Schmidt QR of a square Ginibre
//! matrix; Gram-Schmidt produces a positive real R diagonal, which is exactly
//! the convention under which Q is Haar-distributed.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, kron, ComplexMatrix};
use crate::rng::RngStream;
use crate::tol;
use crate::Complex64;

/// Normalized two-qubit state vector in the |00>, |01>, |10>, |11> basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amps: [Complex64; 4],
}

impl PureState {
    /// Wrap amplitudes that are already normalized (|norm - 1| <= 1e-12).
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let deviation = (norm - 1.0).abs();
        if deviation > tol::UNIT_NORM {
            return Err(Error::NotUnitNorm { deviation });
        }
        Ok(PureState { amps })
    }

    /// Normalize arbitrary amplitudes; rejects a near-zero vector.
    pub fn from_unnormalized(amps: [Complex64; 4]) -> Result<Self> {
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < tol::UNIT_NORM {
            return Err(Error::NotUnitNorm { deviation: 1.0 });
        }
        let mut out = amps;
        for z in &mut out {
            *z /= norm;
        }
        Ok(PureState { amps: out })
    }

    pub fn amps(&self) -> &[Complex64; 4] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Promote to the rank-1 density matrix |psi><psi|.
    pub fn to_density(&self) -> DensityMatrix {
        let m = ComplexMatrix::from_fn(4, |i, j| self.amps[i] * self.amps[j].conj());
        DensityMatrix::new(m).expect("projector of a unit vector is a valid state")
    }

}

/// The Bell state (|00> + |11>) / sqrt(2).
pub fn bell_phi_plus() -> PureState {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    PureState {
        amps: [
            Complex64::new(h, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(h, 0.0),
        ],
    }
}

/// Validated 4x4 density matrix: Hermitian within 1e-10, unit trace within
/// 1e-10, and positive semidefinite down to eigenvalue -1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validate and wrap a candidate matrix, reporting the first violated
    /// invariant (dimension, Hermiticity, trace, positivity — in that order).
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if mat.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: mat.dim() });
        }
        let asym = mat.hermiticity_deviation();
        if asym > tol::HERMITICITY {
            return Err(Error::NotHermitian { max_asymmetry: asym });
        }
        let tr = mat.trace();
        let trace_dev = (tr - Complex64::new(1.0, 0.0)).norm();
        if trace_dev > tol::TRACE {
            return Err(Error::TraceNotOne { deviation: trace_dev });
        }
        let eig = hermitian_eig(&mat, false)?;
        let min = eig.values[eig.values.len() - 1];
        if min < -tol::PSD_EIG {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue: min });
        }
        Ok(DensityMatrix { mat })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }
}

/// Werner state: p |phi+><phi+| + (1 - p) I/4 for p in [0, 1].
///
/// Diagonal ((1+p)/4, (1-p)/4, (1-p)/4, (1+p)/4) with real corners p/2; its
/// eigenvalues are (1+3p)/4 once and (1-p)/4 three times.
pub fn werner(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange { name: "p", value: p, min: 0.0, max: 1.0 });
    }
    let mut m = ComplexMatrix::zeros(4);
    let outer = Complex64::new((1.0 + p) / 4.0, 0.0);
    let inner = Complex64::new((1.0 - p) / 4.0, 0.0);
    let corner = Complex64::new(p / 2.0, 0.0);
    m.set(0, 0, outer);
    m.set(3, 3, outer);
    m.set(1, 1, inner);
    m.set(2, 2, inner);
    m.set(0, 3, corner);
    m.set(3, 0, corner);
    DensityMatrix::new(m)
}

/// Purity Tr(rho^2); 1 for pure states, 1/4 for the maximally mixed state.
pub fn purity(rho: &DensityMatrix) -> f64 {
    (rho.matrix() * rho.matrix()).trace().re
}

/// Haar-random pure state: four standard complex Gaussian amplitudes,
/// normalized. Consumes exactly eight uniform words per draw.
pub fn random_pure(rng: &mut RngStream) -> PureState {
    loop {
        let amps = [
            rng.next_complex_gaussian(),
            rng.next_complex_gaussian(),
            rng.next_complex_gaussian(),
            rng.next_complex_gaussian(),
        ];
        if let Ok(state) = PureState::from_unnormalized(amps) {
            return state;
        }
    }
}

/// Random mixed state of the given rank (1..=4) from the Ginibre ensemble:
/// rho = G G^dag / Tr(G G^dag) with G a 4 x rank complex Gaussian matrix,
/// entries drawn row by row.
pub fn random_mixed(rank: usize, rng: &mut RngStream) -> Result<DensityMatrix> {
    if !(1..=4).contains(&rank) {
        return Err(Error::InvalidRank { rank });
    }
    let mut g = vec![[Complex64::new(0.0, 0.0); 4]; 4];
    for row in g.iter_mut().take(4) {
        for col in row.iter_mut().take(rank) {
            *col = rng.next_complex_gaussian();
        }
    }
    let mut m = ComplexMatrix::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..rank {
                acc += g[i][k] * g[j][k].conj();
            }
            m.set(i, j, acc);
        }
    }
    let tr = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / tr))
}

/// Haar-random unitary of dimension 2 or 4.
///
/// Gram-Schmidt QR of a square Ginibre matrix (entries drawn row by row),
/// with one re-orthogonalization pass to pin the unitarity error near
/// machine precision.
pub fn random_unitary(dim: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    if dim != 2 && dim != 4 {
        return Err(Error::InvalidDimension { dim });
    }
    'redraw: loop {
        let mut cols: Vec<Vec<Complex64>> = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
        for i in 0..dim {
            for col in cols.iter_mut().take(dim) {
                col[i] = rng.next_complex_gaussian();
            }
        }
        for j in 0..dim {
            // Two projection passes: plain Gram-Schmidt, then a cleanup pass.
            for _ in 0..2 {
                for k in 0..j {
                    let proj: Complex64 = (0..dim).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                    for i in 0..dim {
                        let correction = proj * cols[k][i];
                        cols[j][i] -= correction;
                    }
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < tol::UNIT_NORM {
                continue 'redraw;
            }
            for z in &mut cols[j] {
                *z /= norm;
            }
        }
        let u = ComplexMatrix::from_fn(dim, |i, j| cols[j][i]);
        debug_assert!(u.unitarity_deviation() <= tol::UNITARITY);
        return Ok(u);
    }
}

/// Conjugate a state by a local product unitary: (ua (x) ub) rho (..)^dag.
///
/// Both factors must be 2x2 and unitary within 1e-10.
pub fn apply_local_unitary(
    rho: &DensityMatrix,
    ua: &ComplexMatrix,
    ub: &ComplexMatrix,
) -> Result<DensityMatrix> {
    for u in [ua, ub] {
        if u.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: u.dim() });
        }
        let dev = u.unitarity_deviation();
        if dev > tol::UNITARITY {
            return Err(Error::NotUnitary { deviation: dev });
        }
    }
    let u = kron(ua, ub)?;
    DensityMatrix::new(&(&u * rho.matrix()) * &u.adjoint())
}

/// Columns are the four Bell states built from |phi+> by local Paulis:
/// (|00>+|11>)/sqrt(2), (|00>-|11>)/sqrt(2), (|01>+|10>)/sqrt(2),
/// (|01>-|10>)/sqrt(2).
pub fn bell_basis_matrix() -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_rows4([
        [(h, 0.0), (h, 0.0), (0.0, 0.0), (0.0, 0.0)],
        [(0.0, 0.0), (0.0, 0.0), (h, 0.0), (h, 0.0)],
        [(0.0, 0.0), (0.0, 0.0), (h, 0.0), (-h, 0.0)],
        [(h, 0.0), (-h, 0.0), (0.0, 0.0), (0.0, 0.0)],
    ])
}

//! The unitary-rotated Werner family rho_WU = U rho_W(p) U^dag.
//!
//! Because the maximally mixed part is unitarily invariant, every such state
//! is the mixture p |phi><phi| + (1 - p) I/4 where |phi> = U |phi+>. Its
//! measures therefore depend on U only through |phi>:
//!
//! * Nonlocality: N(rho_WU) = sqrt(max(0, p^2 (1 + N(phi)^2) - 1)), with
//!   N(phi) = C(phi) for pure states ([`property1_predicted_n`]).
//! * Concurrence: C(rho_WU) = max(0, p C(phi) - (1 - p)/2)
//!   ([`property2_predicted_c`]).
//!
//! The concurrence formula rests on the structure of the spin-flip spectrum
//! of rho_WU: the two smallest eigenvalues are pinned at (1 - p)^2 / 16 and
//! the top two satisfy explicit sum and product rules;
//! [`check_proof_eigenstructure`] measures all three identities directly.
//!
//! [`violation_threshold_c`] gives the concurrence beyond which rho_WU
//! violates the CHSH inequality (only defined for p > 1/sqrt(2); below that
//! no rotation can produce a violation), and [`werner_n_of_c`] is the
//! nonlocality-vs-concurrence curve of the plain Werner family.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::{wootters_lambdas, ComplexMatrix};
use crate::measures::concurrence_pure;
use crate::states::{bell_phi_plus, werner, DensityMatrix, PureState};
use crate::tol;
use crate::Complex64;

/// One rotated-Werner instance: the mixing weight, the rotation, the rotated
/// Bell state and the resulting density matrix, constructed together by
/// [`make_case`] so they cannot drift apart.
#[derive(Debug, Clone)]
pub struct WernerUnitaryCase {
    p: f64,
    unitary: ComplexMatrix,
    phi: PureState,
    rho_wu: DensityMatrix,
}

impl WernerUnitaryCase {
    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }

    /// The rotated Bell state U |phi+>.
    pub fn phi(&self) -> &PureState {
        &self.phi
    }

    /// The rotated Werner state U rho_W(p) U^dag.
    pub fn rho_wu(&self) -> &DensityMatrix {
        &self.rho_wu
    }
}

/// Build a rotated-Werner case from a mixing weight p in [0, 1] and a 4x4
/// unitary (unitarity deviation at most 1e-10).
pub fn make_case(p: f64, unitary: ComplexMatrix) -> Result<WernerUnitaryCase> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange { name: "p", value: p, min: 0.0, max: 1.0 });
    }
    if unitary.dim() != 4 {
        return Err(Error::InvalidDimension { dim: unitary.dim() });
    }
    let deviation = unitary.unitarity_deviation();
    if deviation > tol::UNITARITY {
        return Err(Error::NotUnitary { deviation });
    }
    let w = werner(p)?;
    let rotated = &(&unitary * w.matrix()) * &unitary.adjoint();
    let rho_wu = DensityMatrix::new(rotated)?;
    let amps = unitary.mul_vec(bell_phi_plus().amps());
    // Normalize rather than trust the 1e-10 unitarity budget to stay inside
    // the stricter pure-state norm tolerance.
    let phi = PureState::from_unnormalized([amps[0], amps[1], amps[2], amps[3]])?;
    Ok(WernerUnitaryCase { p, unitary, phi, rho_wu })
}

/// Predicted nonlocality sqrt(max(0, p^2 (1 + C(phi)^2) - 1)), using that
/// N = C on pure states. Agrees with the direct Horodecki computation on
/// rho_WU within 1e-9.
pub fn property1_predicted_n(case: &WernerUnitaryCase) -> f64 {
    let c = concurrence_pure(&case.phi);
    (case.p * case.p * (1.0 + c * c) - 1.0).max(0.0).sqrt()
}

/// Predicted concurrence max(0, p C(phi) - (1 - p)/2). Agrees with the
/// direct spin-flip computation on rho_WU within 1e-9.
pub fn property2_predicted_c(case: &WernerUnitaryCase) -> f64 {
    let c = concurrence_pure(&case.phi);
    (case.p * c - (1.0 - case.p) / 2.0).max(0.0)
}

/// Measured deviations of the spin-flip spectrum of rho_WU from the three
/// structural identities behind the concurrence formula.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenstructureReport {
    /// Spin-flip eigenvalues, descending.
    pub lambdas: [f64; 4],
    /// max |lambda_{3,4} - (1 - p)^2 / 16|.
    pub pair_deviation: f64,
    /// |lambda_1 + lambda_2 - (p^2 C(phi)^2 + (1 + 3p)(1 - p)/8)|.
    pub sum_deviation: f64,
    /// |lambda_1 lambda_2 - ((1 + 3p)(1 - p)/16)^2|.
    pub product_deviation: f64,
}

impl EigenstructureReport {
    pub fn max_deviation(&self) -> f64 {
        self.pair_deviation
            .max(self.sum_deviation)
            .max(self.product_deviation)
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        self.max_deviation() <= tolerance
    }

    /// Names of the identities violated beyond the tolerance.
    pub fn failures(&self, tolerance: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.pair_deviation > tolerance {
            out.push("smallest-pair identity lambda3 = lambda4 = (1-p)^2/16");
        }
        if self.sum_deviation > tolerance {
            out.push("sum identity lambda1 + lambda2");
        }
        if self.product_deviation > tolerance {
            out.push("product identity lambda1 * lambda2");
        }
        out
    }
}

/// Compare the spin-flip spectrum of rho_WU against the structural
/// identities; all deviations should sit within 1e-9.
pub fn check_proof_eigenstructure(case: &WernerUnitaryCase) -> Result<EigenstructureReport> {
    let lambdas = wootters_lambdas(&case.rho_wu)?;
    let p = case.p;
    let c = concurrence_pure(&case.phi);
    let pinned = (1.0 - p) * (1.0 - p) / 16.0;
    let pair_deviation = (lambdas[2] - pinned).abs().max((lambdas[3] - pinned).abs());
    let sum_target = p * p * c * c + (1.0 + 3.0 * p) * (1.0 - p) / 8.0;
    let sum_deviation = (lambdas[0] + lambdas[1] - sum_target).abs();
    let product_target = {
        let q = (1.0 + 3.0 * p) * (1.0 - p) / 16.0;
        q * q
    };
    let product_deviation = (lambdas[0] * lambdas[1] - product_target).abs();
    Ok(EigenstructureReport { lambdas, pair_deviation, sum_deviation, product_deviation })
}

/// Concurrence threshold for CHSH violation in the rotated-Werner family:
/// C_p = sqrt(1 - p^2) - (1 - p)/2, defined for p in (1/sqrt(2), 1]. A case
/// with C(rho_WU) above C_p has N > 0, below has N = 0. As p decreases to
/// 1/sqrt(2) the threshold rises to (3 sqrt(2) - 2)/4; at or below that
/// weight no rotation yields a violation and the function errors instead.
pub fn violation_threshold_c(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange { name: "p", value: p, min: 0.0, max: 1.0 });
    }
    if p <= FRAC_1_SQRT_2 {
        return Err(Error::NoViolationPossible { p });
    }
    Ok((1.0 - p * p).max(0.0).sqrt() - (1.0 - p) / 2.0)
}

/// Nonlocality of a plain Werner state as a function of its concurrence:
/// N = (1/3) sqrt(max(0, 8c + 8c^2 - 7)). Zero below the onset concurrence
/// (3 sqrt(2) - 2)/4. Requires c in [0, 1] up to 1e-12 slack.
pub fn werner_n_of_c(c: f64) -> Result<f64> {
    if !(-tol::UNIT_NORM..=1.0 + tol::UNIT_NORM).contains(&c) {
        return Err(Error::ParameterOutOfRange { name: "c", value: c, min: 0.0, max: 1.0 });
    }
    let c = c.clamp(0.0, 1.0);
    Ok((8.0 * c + 8.0 * c * c - 7.0).max(0.0).sqrt() / 3.0)
}

/// Extend a unit vector to an orthonormal basis: Gram-Schmidt over the seed
/// followed by the standard basis, skipping candidates that collapse. Two
/// projection passes per vector keep orthogonality near machine precision.
fn orthonormal_completion(seed: &[Complex64; 4]) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = vec![seed.to_vec()];
    for k in 0..4 {
        if basis.len() == 4 {
            break;
        }
        let mut v = vec![Complex64::new(0.0, 0.0); 4];
        v[k] = Complex64::new(1.0, 0.0);
        for _ in 0..2 {
            for b in &basis {
                let overlap: Complex64 = b.iter().zip(&v).map(|(bi, vi)| bi.conj() * vi).sum();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= overlap * bi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            for z in &mut v {
                *z /= norm;
            }
            basis.push(v);
        }
    }
    assert_eq!(basis.len(), 4, "a unit vector plus the standard basis spans C^4");
    basis
}

/// A unitary mapping one pure state onto another: complete both to
/// orthonormal bases and pair them up. Used to realize a prescribed rotated
/// Bell state U |phi+> = |target>.
pub fn state_transfer_unitary(from: &PureState, to: &PureState) -> Result<ComplexMatrix> {
    let e = orthonormal_completion(from.amps());
    let f = orthonormal_completion(to.amps());
    let u = ComplexMatrix::from_fn(4, |i, j| (0..4).map(|k| f[k][i] * e[k][j].conj()).sum());
    let deviation = u.unitarity_deviation();
    if deviation > tol::UNITARITY {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(u)
}

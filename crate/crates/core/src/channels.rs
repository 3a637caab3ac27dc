//! One-sided noise channels: Kraus maps applied to qubit A of a two-qubit
//! state, plus closed-form concurrence and nonlocality for the channel acting
//! on the Werner family.
//!
//! Both channels are parameterized by a retention amplitude epsilon in
//! [0, 1]; epsilon = 1 is the identity map and epsilon = 0 destroys all
//! coherence on A.
//!
//! * Phase damping: K0 = diag(1, eps), K1 = diag(0, sqrt(1 - eps^2)).
//!   On Werner(p) the output has T = diag(p eps, -p eps, p),
//!   C = max(0, p eps - (1 - p)/2) and N = sqrt(max(0, p^2 (1 + eps^2) - 1)).
//! * Amplitude damping: K0 = diag(1, eps),
//!   K1 = [[0, sqrt(1 - eps^2)], [0, 0]].
//!   On Werner(p) the output has T = diag(p eps, -p eps, p eps^2),
//!   C = max(0, p eps - (eps/2) sqrt((1 - p)(2 - eps^2 - p eps^2))) and
//!   N = sqrt(max(0, 2 p^2 eps^2 - 1)).
//!
//! Three named slices of these families are exposed directly:
//! [`mnms`] (phase damping at p = 1) keeps N = C = eps, the largest
//! nonlocality any state of that concurrence can carry; [`mnes`] (amplitude
//! damping at p = 1) pins N to the floor sqrt(max(0, 2 eps^2 - 1)), the
//! smallest; [`ncms`] (amplitude damping at p = 0) has zero correlation
//! matrix and zero concurrence at every eps.

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix};
use crate::states::{werner, DensityMatrix};
use crate::tol;

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::ParameterOutOfRange { name, value, min: 0.0, max: 1.0 });
    }
    Ok(())
}

/// A single-qubit channel given by 2x2 Kraus operators satisfying the
/// completeness relation sum K^dag K = I within 1e-12.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    label: &'static str,
    epsilon: f64,
    ops: Vec<ComplexMatrix>,
}

impl KrausChannel {
    pub fn new(label: &'static str, epsilon: f64, ops: Vec<ComplexMatrix>) -> Result<Self> {
        let mut sum = ComplexMatrix::zeros(2);
        for k in &ops {
            if k.dim() != 2 {
                return Err(Error::InvalidDimension { dim: k.dim() });
            }
            sum = &sum + &(&k.adjoint() * k);
        }
        let deviation = sum.max_abs_diff(&ComplexMatrix::identity(2));
        if deviation > tol::KRAUS_COMPLETENESS {
            return Err(Error::KrausIncomplete { deviation });
        }
        Ok(KrausChannel { label, epsilon, ops })
    }

    pub fn label(&self) -> &'static str {
        self.label
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }
}

/// Phase damping with retention amplitude eps: decoheres the A qubit in the
/// computational basis without moving population.
pub fn pd_channel(epsilon: f64) -> Result<KrausChannel> {
    check_unit_interval("epsilon", epsilon)?;
    let damp = (1.0 - epsilon * epsilon).max(0.0).sqrt();
    let k0 = ComplexMatrix::from_rows2([[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (epsilon, 0.0)]]);
    let k1 = ComplexMatrix::from_rows2([[(0.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (damp, 0.0)]]);
    KrausChannel::new("phase-damping", epsilon, vec![k0, k1])
}

/// Amplitude damping with retention amplitude eps: decays |1> toward |0> on
/// the A qubit.
pub fn ad_channel(epsilon: f64) -> Result<KrausChannel> {
    check_unit_interval("epsilon", epsilon)?;
    let damp = (1.0 - epsilon * epsilon).max(0.0).sqrt();
    let k0 = ComplexMatrix::from_rows2([[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (epsilon, 0.0)]]);
    let k1 = ComplexMatrix::from_rows2([[(0.0, 0.0), (damp, 0.0)], [(0.0, 0.0), (0.0, 0.0)]]);
    KrausChannel::new("amplitude-damping", epsilon, vec![k0, k1])
}

/// Apply a single-qubit channel to qubit A:
/// rho -> sum_i (K_i (x) I) rho (K_i (x) I)^dag.
///
/// The output is revalidated as a density matrix so numerical drift in the
/// Kraus algebra cannot leak invalid states downstream.
pub fn apply_on_a(rho: &DensityMatrix, channel: &KrausChannel) -> Result<DensityMatrix> {
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::zeros(4);
    for k in channel.ops() {
        let lifted = kron(k, &id)?;
        out = &out + &(&(&lifted * rho.matrix()) * &lifted.adjoint());
    }
    DensityMatrix::new(out)
}

/// Closed-form concurrence and nonlocality of a channel output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelPrediction {
    pub concurrence: f64,
    pub nonlocality: f64,
}

/// Concurrence and nonlocality of phase damping applied to Werner(p):
/// C = max(0, p eps - (1 - p)/2), N = sqrt(max(0, p^2 (1 + eps^2) - 1)).
pub fn pd_closed_form(p: f64, epsilon: f64) -> Result<ChannelPrediction> {
    check_unit_interval("p", p)?;
    check_unit_interval("epsilon", epsilon)?;
    let concurrence = (p * epsilon - (1.0 - p) / 2.0).max(0.0);
    let nonlocality = (p * p * (1.0 + epsilon * epsilon) - 1.0).max(0.0).sqrt();
    Ok(ChannelPrediction { concurrence, nonlocality })
}

/// Concurrence and nonlocality of amplitude damping applied to Werner(p):
/// C = max(0, p eps - (eps/2) sqrt((1 - p)(2 - eps^2 - p eps^2))),
/// N = sqrt(max(0, 2 p^2 eps^2 - 1)).
pub fn ad_closed_form(p: f64, epsilon: f64) -> Result<ChannelPrediction> {
    check_unit_interval("p", p)?;
    check_unit_interval("epsilon", epsilon)?;
    let e2 = epsilon * epsilon;
    let radicand = ((1.0 - p) * (2.0 - e2 - p * e2)).max(0.0);
    let concurrence = (p * epsilon - (epsilon / 2.0) * radicand.sqrt()).max(0.0);
    let nonlocality = (2.0 * p * p * e2 - 1.0).max(0.0).sqrt();
    Ok(ChannelPrediction { concurrence, nonlocality })
}

/// Maximally nonlocal mixed state at concurrence eps: phase damping applied
/// to the Bell state (Werner p = 1). Satisfies N = C = eps.
pub fn mnms(epsilon: f64) -> Result<DensityMatrix> {
    apply_on_a(&werner(1.0)?, &pd_channel(epsilon)?)
}

/// Maximally entangled state of minimal nonlocality at concurrence eps:
/// amplitude damping applied to the Bell state (Werner p = 1). Satisfies
/// C = eps and N = sqrt(max(0, 2 eps^2 - 1)), the lower edge of the band.
pub fn mnes(epsilon: f64) -> Result<DensityMatrix> {
    apply_on_a(&werner(1.0)?, &ad_channel(epsilon)?)
}

/// Fully uncorrelated slice: amplitude damping applied to the maximally
/// mixed state (Werner p = 0). The correlation matrix vanishes and the
/// concurrence is zero for every eps.
pub fn ncms(epsilon: f64) -> Result<DensityMatrix> {
    apply_on_a(&werner(0.0)?, &ad_channel(epsilon)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{
        bell_nonlocality, concurrence, correlation_matrix, inequality_bounds,
    };

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
    }

    #[test]
    fn channels_are_complete_across_epsilon() {
        for i in 0..=20 {
            let eps = i as f64 / 20.0;
            assert!(pd_channel(eps).is_ok(), "pd at eps = {eps}");
            assert!(ad_channel(eps).is_ok(), "ad at eps = {eps}");
        }
    }

    #[test]
    fn incomplete_kraus_set_is_rejected() {
        let k0 = ComplexMatrix::from_rows2([[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (0.5, 0.0)]]);
        assert!(matches!(
            KrausChannel::new("broken", 0.5, vec![k0]),
            Err(Error::KrausIncomplete { .. })
        ));
        let k4 = ComplexMatrix::identity(4);
        assert!(matches!(
            KrausChannel::new("wrong-dim", 0.5, vec![k4]),
            Err(Error::InvalidDimension { dim: 4 })
        ));
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(pd_channel(-0.1).is_err());
        assert!(ad_channel(1.1).is_err());
        assert!(pd_closed_form(1.2, 0.5).is_err());
        assert!(ad_closed_form(0.5, -0.2).is_err());
    }

    #[test]
    fn identity_channel_is_a_fixed_point() {
        let ch = pd_channel(1.0).unwrap();
        let rho = werner(0.73).unwrap();
        let out = apply_on_a(&rho, &ch).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) <= 1e-15);
    }

    #[test]
    fn pd_closed_form_reference_values() {
        let pred = pd_closed_form(0.9, 0.5).unwrap();
        assert_close(pred.concurrence, 0.40, 1e-15, "pd concurrence");
        assert_close(pred.nonlocality, 0.11180339887499027, 1e-15, "pd nonlocality");
        // At p = 1 phase damping keeps C = eps exactly.
        let pred = pd_closed_form(1.0, 0.37).unwrap();
        assert_eq!(pred.concurrence, 0.37);
    }

    #[test]
    fn ad_closed_form_reference_values() {
        let pred = ad_closed_form(0.95, 0.9).unwrap();
        assert_close(pred.concurrence, 0.78975, 1e-12, "ad concurrence");
        assert_close(pred.nonlocality, 0.6797425983414604, 1e-12, "ad nonlocality");
    }

    #[test]
    fn pd_output_correlation_matrix_is_diagonal() {
        let (p, eps) = (0.7, 0.6);
        let out = apply_on_a(&werner(p).unwrap(), &pd_channel(eps).unwrap()).unwrap();
        let t = correlation_matrix(&out);
        let expect = [p * eps, -p * eps, p];
        for m in 0..3 {
            for n in 0..3 {
                let want = if m == n { expect[m] } else { 0.0 };
                assert_close(t.entry(m, n), want, 1e-14, "pd t entry");
            }
        }
    }

    #[test]
    fn ad_output_correlation_matrix_is_diagonal() {
        let (p, eps) = (0.7, 0.6);
        let out = apply_on_a(&werner(p).unwrap(), &ad_channel(eps).unwrap()).unwrap();
        let t = correlation_matrix(&out);
        let expect = [p * eps, -p * eps, p * eps * eps];
        for m in 0..3 {
            for n in 0..3 {
                let want = if m == n { expect[m] } else { 0.0 };
                assert_close(t.entry(m, n), want, 1e-14, "ad t entry");
            }
        }
    }

    #[test]
    fn mnms_has_equal_concurrence_and_nonlocality() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let rho = mnms(eps).unwrap();
            let c = concurrence(&rho).unwrap();
            let n = bell_nonlocality(&rho);
            assert_close(c, eps, 1e-10, "mnms concurrence");
            assert_close(n, eps, 1e-10, "mnms nonlocality");
        }
    }

    #[test]
    fn mnes_sits_on_the_lower_bound() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let rho = mnes(eps).unwrap();
            let c = concurrence(&rho).unwrap();
            let n = bell_nonlocality(&rho);
            assert_close(c, eps, 1e-10, "mnes concurrence");
            let want_n = (2.0 * eps * eps - 1.0).max(0.0).sqrt();
            assert_close(n, want_n, 1e-7, "mnes nonlocality");
            let (lower, _) = inequality_bounds(c.clamp(0.0, 1.0)).unwrap();
            assert!(n <= lower + 1e-7, "mnes above floor: n = {n}, floor = {lower}");
        }
    }

    #[test]
    fn ncms_is_fully_uncorrelated() {
        for i in 0..=10 {
            let eps = i as f64 / 10.0;
            let rho = ncms(eps).unwrap();
            assert!(correlation_matrix(&rho).max_abs() <= 1e-12, "ncms T at eps = {eps}");
            assert_eq!(concurrence(&rho).unwrap(), 0.0, "ncms concurrence at eps = {eps}");
        }
    }

    #[test]
    fn closed_forms_match_direct_computation_on_grid() {
        for i in 0..=10 {
            for j in 0..=10 {
                let p = i as f64 / 10.0;
                let eps = j as f64 / 10.0;
                let w = werner(p).unwrap();

                let out = apply_on_a(&w, &pd_channel(eps).unwrap()).unwrap();
                let pred = pd_closed_form(p, eps).unwrap();
                assert_close(concurrence(&out).unwrap(), pred.concurrence, 1e-10, "pd C");
                assert_close(bell_nonlocality(&out), pred.nonlocality, 1e-10, "pd N");

                let out = apply_on_a(&w, &ad_channel(eps).unwrap()).unwrap();
                let pred = ad_closed_form(p, eps).unwrap();
                assert_close(concurrence(&out).unwrap(), pred.concurrence, 1e-10, "ad C");
                assert_close(bell_nonlocality(&out), pred.nonlocality, 1e-10, "ad N");
            }
        }
    }
}

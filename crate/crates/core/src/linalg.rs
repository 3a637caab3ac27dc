//! Dense complex linear algebra for 2x2 and 4x4 matrices.
//!
//! Everything the correlation measures need lives here: a row-major complex
//! matrix type, Pauli constructors, Kronecker products, a cyclic Jacobi
//! eigensolver for Hermitian matrices, the PSD matrix square root, and the
//! spin-flip transform behind the concurrence.

use crate::error::{Error, Result};
use crate::states::DensityMatrix;
use crate::tol;
use crate::Complex64;

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Square complex matrix in row-major storage.
///
/// Dimension is restricted to 2 (single-qubit operators) or 4 (two-qubit
/// operators); constructors assert this. Two-qubit objects use the product
/// basis |00>, |01>, |10>, |11> with qubit A as the left factor.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension (2 or 4).
    pub fn zeros(dim: usize) -> Self {
        assert!(dim == 2 || dim == 4, "matrix dimension must be 2 or 4");
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Identity matrix of the given dimension (2 or 4).
    pub fn identity(dim: usize) -> Self {
        let mut m = ComplexMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, cx(1.0, 0.0));
        }
        m
    }

    /// Build a matrix entrywise from a closure over (row, column).
    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(dim: usize, mut f: F) -> Self {
        let mut m = ComplexMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build a 4x4 matrix from rows of (re, im) pairs.
    pub fn from_rows4(rows: [[(f64, f64); 4]; 4]) -> Self {
        ComplexMatrix::from_fn(4, |i, j| cx(rows[i][j].0, rows[i][j].1))
    }

    /// Build a 2x2 matrix from rows of (re, im) pairs.
    pub fn from_rows2(rows: [[(f64, f64); 2]; 2]) -> Self {
        ComplexMatrix::from_fn(2, |i, j| cx(rows[i][j].0, rows[i][j].1))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(i, j).conj())
    }

    /// Transpose without conjugation.
    pub fn transpose(&self) -> Self {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }

    /// Multiply every entry by a real scalar.
    pub fn scale(&self, s: f64) -> Self {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(i, j) * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Matrix-vector product; `v.len()` must equal the dimension.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest modulus of the entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimensions must match");
        (0..self.dim * self.dim)
            .map(|k| (self.data[k] - other.data[k]).norm())
            .fold(0.0, f64::max)
    }

    /// Largest |a_ij - conj(a_ji)|; zero for an exactly Hermitian matrix.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Largest |(U^dag U - I)_ij|; zero for an exactly unitary matrix.
    pub fn unitarity_deviation(&self) -> f64 {
        let gram = &self.adjoint() * self;
        gram.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimensions must match");
        ComplexMatrix::from_fn(self.dim, |i, j| {
            (0..self.dim).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimensions must match");
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimensions must match");
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

/// Pauli x: [[0, 1], [1, 0]].
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_rows2([[(0.0, 0.0), (1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]])
}

/// Pauli y: [[0, -i], [i, 0]].
pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows2([[(0.0, 0.0), (0.0, -1.0)], [(0.0, 1.0), (0.0, 0.0)]])
}

/// Pauli z: [[1, 0], [0, -1]].
pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_rows2([[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (-1.0, 0.0)]])
}

/// The three Pauli matrices in (x, y, z) order.
pub fn paulis() -> [ComplexMatrix; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}

/// Kronecker product of two 2x2 matrices; the left factor acts on qubit A.
///
/// `out[2i+k][2j+l] = a[i][j] * b[k][l]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: a.dim() });
    }
    if b.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: b.dim() });
    }
    Ok(ComplexMatrix::from_fn(4, |r, c| {
        a.get(r / 2, c / 2) * b.get(r % 2, c % 2)
    }))
}

/// Eigendecomposition of a Hermitian matrix.
///
/// `values` are real and sorted in descending order. When requested,
/// `vectors` holds the matching orthonormal eigenvectors as columns, so that
/// `H = V diag(values) V^dag` within 1e-10 entrywise.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub values: Vec<f64>,
    pub vectors: Option<ComplexMatrix>,
}

/// Largest off-diagonal modulus; the Jacobi convergence measure.
fn max_off_diagonal(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut off = 0.0f64;
    for p in 0..n {
        for q in (p + 1)..n {
            off = off.max(a.get(p, q).norm());
        }
    }
    off
}

/// One complex Jacobi rotation annihilating the (p, q) entry of `a`,
/// accumulated into `v` when eigenvectors are tracked.
///
/// The rotation is the 2x2 unitary [[u*c, u*s], [-s, c]] embedded at rows and
/// columns (p, q), where u is the unit phase of a_pq and (c, s) the classic
/// real Jacobi pair. Diagonal entries update as a_pp - t|a_pq| and
/// a_qq + t|a_pq|, which keeps structured zeros exact.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut Option<ComplexMatrix>, p: usize, q: usize) {
    let n = a.dim();
    let h = a.get(p, q);
    let habs = h.norm();
    if habs == 0.0 {
        return;
    }
    let alpha = a.get(p, p).re;
    let beta = a.get(q, q).re;
    let theta = (beta - alpha) / (2.0 * habs);
    // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0; the asymptote guard
    // avoids overflow in theta^2 for near-zero pivots.
    let t = if theta.abs() > 1e100 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let u = h / habs;

    a.set(p, p, cx(alpha - t * habs, 0.0));
    a.set(q, q, cx(beta + t * habs, 0.0));
    a.set(p, q, cx(0.0, 0.0));
    a.set(q, p, cx(0.0, 0.0));
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a.get(r, p);
        let arq = a.get(r, q);
        let new_rp = u * c * arp - s * arq;
        let new_rq = u * s * arp + c * arq;
        a.set(r, p, new_rp);
        a.set(p, r, new_rp.conj());
        a.set(r, q, new_rq);
        a.set(q, r, new_rq.conj());
    }
    if let Some(vm) = v {
        for r in 0..n {
            let vrp = vm.get(r, p);
            let vrq = vm.get(r, q);
            vm.set(r, p, u * c * vrp - s * vrq);
            vm.set(r, q, u * s * vrp + c * vrq);
        }
    }
}

/// Eigendecomposition of a Hermitian 2x2 or 4x4 matrix by cyclic complex
/// Jacobi rotations.
///
/// The input must be Hermitian within 1e-10 (entrywise asymmetry); the solver
/// works on the Hermitian average (m + m^dag)/2 and iterates full sweeps
/// until the largest off-diagonal modulus drops below 1e-13, with a hard cap
/// of 100 sweeps.
pub fn hermitian_eig(m: &ComplexMatrix, want_vectors: bool) -> Result<EigenResult> {
    let asym = m.hermiticity_deviation();
    if asym > tol::HERMITICITY {
        return Err(Error::NotHermitian { max_asymmetry: asym });
    }
    let n = m.dim();
    let mut a = ComplexMatrix::from_fn(n, |i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5);
    let mut v = if want_vectors {
        Some(ComplexMatrix::identity(n))
    } else {
        None
    };

    let mut converged = false;
    for _ in 0..=tol::JACOBI_MAX_SWEEPS {
        if max_off_diagonal(&a) < tol::JACOBI_OFF_DIAG {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::JacobiNoConvergence {
            off_diagonal: max_off_diagonal(&a),
        });
    }

    let raw: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw[j].partial_cmp(&raw[i]).unwrap().then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| raw[i]).collect();
    let vectors = v.map(|vm| ComplexMatrix::from_fn(n, |r, c| vm.get(r, order[c])));
    Ok(EigenResult { values, vectors })
}

/// Clip the spectrum of a matrix that is PSD by construction.
///
/// Values in [-1e-10, 0) are rounding undershoot and clip to zero; positive
/// values below the 1e-13 floor are cancellation debris from products whose
/// exact value is zero and are likewise zeroed (rank-deficient inputs would
/// otherwise grow square-rooted noise of order 1e-8). A value below -1e-10
/// is returned as the offending eigenvalue.
fn clip_psd_spectrum(values: &[f64]) -> std::result::Result<Vec<f64>, f64> {
    let mut out = Vec::with_capacity(values.len());
    for &v in values {
        if v < -tol::PSD_EIG {
            return Err(v);
        }
        out.push(if v < tol::EIG_ZERO_FLOOR { 0.0 } else { v });
    }
    Ok(out)
}

/// Positive-semidefinite square root via eigendecomposition.
///
/// Requires a Hermitian input with eigenvalues no lower than -1e-10;
/// eigenvalues in [-1e-10, 0) are clipped to zero before the square root.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(m, true)?;
    let vals = clip_psd_spectrum(&eig.values)
        .map_err(|ev| Error::NotPositiveSemidefinite { min_eigenvalue: ev })?;
    let v = eig.vectors.expect("eigenvectors requested");
    let n = m.dim();
    Ok(ComplexMatrix::from_fn(n, |i, j| {
        (0..n)
            .map(|k| v.get(i, k) * v.get(j, k).conj() * vals[k].sqrt())
            .sum()
    }))
}

/// Spin-flip transform: (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y).
///
/// For two qubits this is an involution: applying it twice returns the input
/// bit-for-bit, because sigma_y (x) sigma_y has exact entries in {0, 1, -1}.
pub fn spin_flip(rho: &DensityMatrix) -> ComplexMatrix {
    let yy = kron(&pauli_y(), &pauli_y()).expect("Pauli matrices are 2x2");
    &(&yy * &rho.matrix().conjugate()) * &yy
}

/// Eigenvalues of rho * spin_flip(rho), descending, all clipped to be >= 0.
///
/// Computed as the spectrum of the similar Hermitian matrix
/// sqrt(rho) * spin_flip(rho) * sqrt(rho), so the Jacobi solver applies. An
/// eigenvalue below -1e-10 reports an internal consistency error.
pub fn wootters_lambdas(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let s = psd_sqrt(rho.matrix())?;
    let a = &(&s * &spin_flip(rho)) * &s;
    let eig = hermitian_eig(&a, false)?;
    let vals = clip_psd_spectrum(&eig.values)
        .map_err(|ev| Error::SpectralConsistency { eigenvalue: ev })?;
    Ok([vals[0], vals[1], vals[2], vals[3]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_phi_plus, werner, DensityMatrix};

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        let k = kron(&i2, &i2).unwrap();
        assert_eq!(k.max_abs_diff(&ComplexMatrix::identity(4)), 0.0);
    }

    #[test]
    fn kron_pauli_zz_is_diag_signs() {
        let k = kron(&pauli_z(), &pauli_z()).unwrap();
        let expect = ComplexMatrix::from_rows4([
            [(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
            [(0.0, 0.0), (-1.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
            [(0.0, 0.0), (0.0, 0.0), (-1.0, 0.0), (0.0, 0.0)],
            [(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)],
        ]);
        assert_eq!(k.max_abs_diff(&expect), 0.0);
    }

    #[test]
    fn kron_pauli_yy_is_real_antidiagonal() {
        // (-i)(-i) = -1 at the top-right corner, then +1, +1, -1 down the
        // antidiagonal; every entry is real.
        let k = kron(&pauli_y(), &pauli_y()).unwrap();
        let expect = ComplexMatrix::from_rows4([
            [(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)],
            [(0.0, 0.0), (0.0, 0.0), (1.0, 0.0), (0.0, 0.0)],
            [(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
            [(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
        ]);
        assert_eq!(k.max_abs_diff(&expect), 0.0);
    }

    #[test]
    fn kron_rejects_wrong_dimension() {
        let i4 = ComplexMatrix::identity(4);
        let i2 = ComplexMatrix::identity(2);
        assert!(matches!(
            kron(&i4, &i2),
            Err(Error::DimensionMismatch { expected: 2, got: 4 })
        ));
    }

    #[test]
    fn eig_of_diagonal_sorts_descending() {
        let m = ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex64::new((i + 1) as f64, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let eig = hermitian_eig(&m, false).unwrap();
        assert_eq!(eig.values, vec![4.0, 3.0, 2.0, 1.0]);
    }

    #[test]
    fn eig_of_pauli_x_is_plus_minus_one() {
        let eig = hermitian_eig(&pauli_x(), true).unwrap();
        assert_close(eig.values[0], 1.0, 1e-14, "lambda_1");
        assert_close(eig.values[1], -1.0, 1e-14, "lambda_2");
    }

    #[test]
    fn eig_of_maximally_mixed_is_quarter() {
        let m = ComplexMatrix::identity(4).scale(0.25);
        let eig = hermitian_eig(&m, false).unwrap();
        for v in eig.values {
            assert_eq!(v, 0.25);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(4);
        m.set(0, 1, Complex64::new(0.5, 0.0));
        match hermitian_eig(&m, false) {
            Err(Error::NotHermitian { max_asymmetry }) => {
                assert_close(max_asymmetry, 0.5, 1e-15, "asymmetry")
            }
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    /// Dense Hermitian matrix with no special structure, for decomposition
    /// quality checks.
    fn dense_hermitian() -> ComplexMatrix {
        ComplexMatrix::from_rows4([
            [(2.0, 0.0), (0.3, 0.4), (-0.1, 0.2), (0.5, -0.6)],
            [(0.3, -0.4), (1.0, 0.0), (0.7, 0.1), (0.0, 0.3)],
            [(-0.1, -0.2), (0.7, -0.1), (-0.5, 0.0), (0.2, 0.2)],
            [(0.5, 0.6), (0.0, -0.3), (0.2, -0.2), (0.8, 0.0)],
        ])
    }

    #[test]
    fn eig_reconstructs_dense_hermitian() {
        let h = dense_hermitian();
        let eig = hermitian_eig(&h, true).unwrap();
        let v = eig.vectors.as_ref().unwrap();
        let recon = ComplexMatrix::from_fn(4, |i, j| {
            (0..4)
                .map(|k| v.get(i, k) * v.get(j, k).conj() * eig.values[k])
                .sum()
        });
        assert!(recon.max_abs_diff(&h) <= 1e-11, "reconstruction");
        // Columns are unit eigenvectors: H v = lambda v.
        for k in 0..4 {
            let col: Vec<Complex64> = (0..4).map(|r| v.get(r, k)).collect();
            let norm: f64 = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert_close(norm, 1.0, 1e-12, "eigenvector norm");
            let hv = h.mul_vec(&col);
            for r in 0..4 {
                assert!((hv[r] - col[r] * eig.values[k]).norm() <= 1e-11, "residual");
            }
        }
        // The spectrum is invariant under the trace.
        let sum: f64 = eig.values.iter().sum();
        assert_close(sum, h.trace().re, 1e-12, "trace");
    }

    #[test]
    fn psd_sqrt_of_diagonal() {
        let m = ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex64::new([4.0, 1.0, 0.0, 0.0][i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let s = psd_sqrt(&m).unwrap();
        let expect = ComplexMatrix::from_fn(4, |i, j| {
            if i == j {
                Complex64::new([2.0, 1.0, 0.0, 0.0][i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        assert_eq!(s.max_abs_diff(&expect), 0.0);
    }

    #[test]
    fn psd_sqrt_of_projector_is_itself() {
        // A rank-1 projector equals its own square root.
        let rho = bell_phi_plus().to_density();
        let s = psd_sqrt(rho.matrix()).unwrap();
        assert!(s.max_abs_diff(rho.matrix()) <= 1e-12);
    }

    #[test]
    fn psd_sqrt_rejects_indefinite() {
        let m = kron(&pauli_z(), &pauli_z()).unwrap();
        assert!(matches!(
            psd_sqrt(&m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn spin_flip_fixes_maximally_mixed() {
        let rho = DensityMatrix::new(ComplexMatrix::identity(4).scale(0.25)).unwrap();
        assert_eq!(spin_flip(&rho).max_abs_diff(rho.matrix()), 0.0);
    }

    #[test]
    fn spin_flip_swaps_product_basis_projectors() {
        // |00><00| maps to |11><11|.
        let mut m = ComplexMatrix::zeros(4);
        m.set(0, 0, Complex64::new(1.0, 0.0));
        let rho = DensityMatrix::new(m).unwrap();
        let flipped = spin_flip(&rho);
        let mut expect = ComplexMatrix::zeros(4);
        expect.set(3, 3, Complex64::new(1.0, 0.0));
        assert_eq!(flipped.max_abs_diff(&expect), 0.0);
    }

    #[test]
    fn spin_flip_fixes_bell_state() {
        let rho = bell_phi_plus().to_density();
        assert!(spin_flip(&rho).max_abs_diff(rho.matrix()) <= 1e-15);
    }

    #[test]
    fn spin_flip_is_involution_bit_exact() {
        let rho = werner(0.37).unwrap();
        let once = spin_flip(&rho);
        let back = &(&kron(&pauli_y(), &pauli_y()).unwrap() * &once.conjugate())
            * &kron(&pauli_y(), &pauli_y()).unwrap();
        assert_eq!(back.max_abs_diff(rho.matrix()), 0.0);
    }

    #[test]
    fn lambdas_of_bell_state_are_one_and_zeros() {
        let rho = bell_phi_plus().to_density();
        let l = wootters_lambdas(&rho).unwrap();
        assert_close(l[0], 1.0, 1e-12, "lambda_1");
        assert_eq!(&l[1..], &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn lambdas_of_maximally_mixed_are_sixteenths() {
        let rho = DensityMatrix::new(ComplexMatrix::identity(4).scale(0.25)).unwrap();
        let l = wootters_lambdas(&rho).unwrap();
        for v in l {
            assert_close(v, 1.0 / 16.0, 1e-15, "lambda");
        }
    }

    #[test]
    fn lambdas_of_product_projector_vanish() {
        // |01><01| and its spin flip have orthogonal supports.
        let mut m = ComplexMatrix::zeros(4);
        m.set(1, 1, Complex64::new(1.0, 0.0));
        let rho = DensityMatrix::new(m).unwrap();
        assert_eq!(wootters_lambdas(&rho).unwrap(), [0.0; 4]);
    }

    #[test]
    fn lambdas_of_werner_give_known_combination() {
        // werner(0.8) spectrum under the spin-flip product: sqrt-lambdas are
        // (0.85, 0.05, 0.05, 0.05), combining to 0.7.
        let rho = werner(0.8).unwrap();
        let l = wootters_lambdas(&rho).unwrap();
        let c = l[0].sqrt() - l[1].sqrt() - l[2].sqrt() - l[3].sqrt();
        assert_close(c, 0.7, 1e-13, "sqrt-lambda combination");
        assert_close(l[0], 0.7225, 1e-13, "lambda_1");
    }
}

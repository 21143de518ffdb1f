//! Exact complex linear algebra for Hilbert-space dimensions 2 and 4.
//!
//! Everything here is dense, fixed-size, and deterministic: states and
//! operators carry their dimension (2 for one qubit, 4 for two) and use
//! inline storage. The eigensolver is a cyclic complex Jacobi iteration
//! (see [`eigh`]), which at these sizes is exact to near machine precision
//! and reproducible bit-for-bit across platforms and thread counts.

mod eigh;

pub use eigh::eigh;

use crate::error::{Result, SimError};
use num_complex::Complex64 as C64;

pub const MAX_DIM: usize = 4;

/// Tolerance on the Hermiticity defect |H[i][j] − conj(H[j][i])|.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Tolerance on the state norm defect |Σ|aᵢ|² − 1|.
pub const NORM_TOL: f64 = 1e-9;

/// Pauli axis selector for [`pauli`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A normalized pure state of one or two qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    dim: usize,
    amp: [C64; MAX_DIM],
}

impl StateVector {
    /// Build a state from amplitudes, enforcing the norm invariant.
    pub fn new(amplitudes: &[C64]) -> Result<Self> {
        let dim = amplitudes.len();
        if dim != 2 && dim != 4 {
            return Err(SimError::InvalidArgument(format!(
                "state dimension must be 2 or 4, got {dim}"
            )));
        }
        let mut amp = [C64::new(0.0, 0.0); MAX_DIM];
        let mut norm2 = 0.0;
        for (i, a) in amplitudes.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(SimError::InvalidArgument(format!(
                    "non-finite amplitude at index {i}"
                )));
            }
            amp[i] = *a;
            norm2 += a.norm_sqr();
        }
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(SimError::InvalidArgument(format!(
                "state not normalized: |Σ|aᵢ|² − 1| = {:.3e}",
                (norm2 - 1.0).abs()
            )));
        }
        Ok(StateVector { dim, amp })
    }

    /// Computational basis state |index⟩.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(SimError::InvalidArgument(format!(
                "basis index {index} out of range for dim {dim}"
            )));
        }
        let mut amp = [C64::new(0.0, 0.0); MAX_DIM];
        amp[index] = C64::new(1.0, 0.0);
        if dim != 2 && dim != 4 {
            return Err(SimError::InvalidArgument(format!(
                "state dimension must be 2 or 4, got {dim}"
            )));
        }
        Ok(StateVector { dim, amp })
    }

    /// The σ^z-aligned product state |↑…↑⟩ (basis index 0).
    pub fn all_up(n_qubits: usize) -> Result<Self> {
        match n_qubits {
            1 => Self::basis(2, 0),
            2 => Self::basis(4, 0),
            n => Err(SimError::InvalidArgument(format!(
                "n_qubits must be 1 or 2, got {n}"
            ))),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amp[..self.dim]
    }

    pub fn norm(&self) -> f64 {
        self.amp[..self.dim]
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim != other.dim {
            return Err(SimError::InvalidArgument(format!(
                "dimension mismatch: {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(self
            .amp
            .iter()
            .zip(other.amp.iter())
            .take(self.dim)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// |⟨self|other⟩|², the population overlap.
    pub fn overlap(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Entrywise complex conjugate (time-reversal companion state).
    pub fn conjugated(&self) -> StateVector {
        let mut amp = self.amp;
        for a in amp.iter_mut() {
            *a = a.conj();
        }
        StateVector { dim: self.dim, amp }
    }

    /// Construct without the norm check; callers must guarantee normalization.
    pub(crate) fn from_parts(dim: usize, amp: [C64; MAX_DIM]) -> Self {
        StateVector { dim, amp }
    }
}

/// A dim×dim Hermitian matrix (dim 2 or 4), row-major inline storage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    m: [C64; MAX_DIM * MAX_DIM],
}

impl HermitianOperator {
    /// Validate Hermiticity and finiteness of a full entry table.
    pub fn new(dim: usize, entries: &[C64]) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(SimError::InvalidArgument(format!(
                "operator dimension must be 2 or 4, got {dim}"
            )));
        }
        if entries.len() != dim * dim {
            return Err(SimError::InvalidArgument(format!(
                "expected {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let mut m = [C64::new(0.0, 0.0); MAX_DIM * MAX_DIM];
        for (k, e) in entries.iter().enumerate() {
            if !e.re.is_finite() || !e.im.is_finite() {
                return Err(SimError::InvalidArgument(format!(
                    "non-finite entry at flat index {k}"
                )));
            }
            let (i, j) = (k / dim, k % dim);
            m[i * MAX_DIM + j] = *e;
        }
        let op = HermitianOperator { dim, m };
        let dev = op.hermiticity_defect();
        if dev > HERMITICITY_TOL {
            return Err(SimError::NonHermitian { max_deviation: dev });
        }
        Ok(op)
    }

    pub fn zeros(dim: usize) -> Self {
        HermitianOperator {
            dim,
            m: [C64::new(0.0, 0.0); MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Self::zeros(dim);
        for i in 0..dim {
            op.m[i * MAX_DIM + i] = C64::new(1.0, 0.0);
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.m[i * MAX_DIM + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: C64) {
        self.m[i * MAX_DIM + j] = v;
    }

    /// max |H[i][j] − conj(H[j][i])| over all entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.m[..].iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    /// self += c · other (both operands must share the dimension, and the
    /// coefficient must be real so Hermiticity is preserved).
    pub fn add_scaled(&mut self, c: f64, other: &HermitianOperator) {
        debug_assert_eq!(self.dim, other.dim);
        for k in 0..MAX_DIM * MAX_DIM {
            self.m[k] += c * other.m[k];
        }
    }

    /// Matrix product as a general (not necessarily Hermitian) dense result.
    pub fn mul(&self, other: &HermitianOperator) -> [C64; MAX_DIM * MAX_DIM] {
        let d = self.dim;
        let mut out = [C64::new(0.0, 0.0); MAX_DIM * MAX_DIM];
        for i in 0..d {
            for j in 0..d {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..d {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out[i * MAX_DIM + j] = acc;
            }
        }
        out
    }

    /// H|ψ⟩ as a raw (unnormalized) amplitude array.
    pub fn apply(&self, psi: &StateVector) -> [C64; MAX_DIM] {
        let d = self.dim;
        let mut out = [C64::new(0.0, 0.0); MAX_DIM];
        for i in 0..d {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..d {
                acc += self.get(i, j) * psi.amp[j];
            }
            out[i] = acc;
        }
        out
    }
}

/// Eigen-decomposition of a Hermitian operator: ascending eigenvalues and
/// orthonormal eigenvector columns with a deterministic phase convention
/// (the largest-magnitude component of each eigenvector is real-positive).
#[derive(Debug, Clone, Copy)]
pub struct SpectralDecomposition {
    pub source_dim: usize,
    pub eigenvalues: [f64; MAX_DIM],
    /// Column k of `vectors` is the eigenvector of `eigenvalues[k]`.
    vectors: [C64; MAX_DIM * MAX_DIM],
}

impl SpectralDecomposition {
    pub(crate) fn from_parts(
        source_dim: usize,
        eigenvalues: [f64; MAX_DIM],
        vectors: [C64; MAX_DIM * MAX_DIM],
    ) -> Self {
        SpectralDecomposition {
            source_dim,
            eigenvalues,
            vectors,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues[..self.source_dim]
    }

    #[inline]
    pub fn vector_component(&self, level: usize, i: usize) -> C64 {
        self.vectors[i * MAX_DIM + level]
    }

    /// The eigenvector of the `level`-th eigenvalue as a normalized state.
    pub fn eigenstate(&self, level: usize) -> StateVector {
        let mut amp = [C64::new(0.0, 0.0); MAX_DIM];
        for i in 0..self.source_dim {
            amp[i] = self.vector_component(level, i);
        }
        StateVector::from_parts(self.source_dim, amp)
    }

    /// ⟨level_a| M |level_b⟩ for an arbitrary operator M of matching dim.
    pub fn matrix_element(&self, level_a: usize, m: &HermitianOperator, level_b: usize) -> C64 {
        let d = self.source_dim;
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..d {
            let mut row = C64::new(0.0, 0.0);
            for j in 0..d {
                row += m.get(i, j) * self.vector_component(level_b, j);
            }
            acc += self.vector_component(level_a, i).conj() * row;
        }
        acc
    }

    /// max entry of |H − V Λ V†|, for the reconstruction invariant.
    pub fn reconstruction_defect(&self, h: &HermitianOperator) -> f64 {
        let d = self.source_dim;
        let mut dev: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..d {
                    acc += self.vector_component(k, i)
                        * self.eigenvalues[k]
                        * self.vector_component(k, j).conj();
                }
                dev = dev.max((acc - h.get(i, j)).norm());
            }
        }
        dev
    }

    /// max entry of |V†V − I|, for the orthonormality invariant.
    pub fn orthonormality_defect(&self) -> f64 {
        let d = self.source_dim;
        let mut dev: f64 = 0.0;
        for a in 0..d {
            for b in 0..d {
                let mut acc = C64::new(0.0, 0.0);
                for i in 0..d {
                    acc += self.vector_component(a, i).conj() * self.vector_component(b, i);
                }
                let target = if a == b { 1.0 } else { 0.0 };
                dev = dev.max((acc - target).norm());
            }
        }
        dev
    }
}

/// σ^axis acting on qubit `qubit` (identity elsewhere). Qubit 0 is the left
/// tensor factor, so `pauli(Z, 0, 2)` = σ^z ⊗ I = diag(1, 1, −1, −1).
pub fn pauli(axis: Axis, qubit: usize, n_qubits: usize) -> Result<HermitianOperator> {
    if n_qubits != 1 && n_qubits != 2 {
        return Err(SimError::InvalidArgument(format!(
            "n_qubits must be 1 or 2, got {n_qubits}"
        )));
    }
    if qubit >= n_qubits {
        return Err(SimError::InvalidArgument(format!(
            "qubit index {qubit} out of range for {n_qubits} qubit(s)"
        )));
    }
    let dim = 1usize << n_qubits;
    let mut op = HermitianOperator::zeros(dim);
    // Bit of the basis index addressed by `qubit`; qubit 0 is the high bit.
    let shift = n_qubits - 1 - qubit;
    for row in 0..dim {
        let bit = (row >> shift) & 1;
        match axis {
            Axis::Z => {
                let sign = if bit == 0 { 1.0 } else { -1.0 };
                op.set(row, row, C64::new(sign, 0.0));
            }
            Axis::X => {
                let col = row ^ (1 << shift);
                op.set(row, col, C64::new(1.0, 0.0));
            }
            Axis::Y => {
                let col = row ^ (1 << shift);
                // ⟨row|σ^y|col⟩ = −i if the qubit flips 1→0 ... +i if 0→1.
                let val = if bit == 0 {
                    C64::new(0.0, -1.0)
                } else {
                    C64::new(0.0, 1.0)
                };
                op.set(row, col, val);
            }
        }
    }
    Ok(op)
}

/// ⟨ψ| A |ψ⟩ as a real number; the imaginary residue (≤ 1e−10 for valid
/// Hermitian input) is discarded.
pub fn expectation(psi: &StateVector, a: &HermitianOperator) -> Result<f64> {
    if psi.dim() != a.dim() {
        return Err(SimError::InvalidArgument(format!(
            "dimension mismatch: state dim {} vs operator dim {}",
            psi.dim(),
            a.dim()
        )));
    }
    let ap = a.apply(psi);
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..psi.dim() {
        acc += psi.amp[i].conj() * ap[i];
    }
    debug_assert!(acc.im.abs() <= 1e-10, "imaginary residue {:.3e}", acc.im);
    Ok(acc.re)
}

/// One exact unitary step ψ′ = exp(−i H dt) ψ, computed through the
/// eigendecomposition of H, so the norm is preserved to eigensolver accuracy.
pub fn evolve_step(psi: &StateVector, h: &HermitianOperator, dt: f64) -> Result<StateVector> {
    if psi.dim() != h.dim() {
        return Err(SimError::InvalidArgument(format!(
            "dimension mismatch: state dim {} vs operator dim {}",
            psi.dim(),
            h.dim()
        )));
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(SimError::InvalidArgument(format!(
            "dt must be positive and finite, got {dt}"
        )));
    }
    let decomp = eigh(h)?;
    Ok(evolve_with(&decomp, psi, dt))
}

/// exp(−i H dt) ψ reusing a precomputed decomposition of H.
pub fn evolve_with(decomp: &SpectralDecomposition, psi: &StateVector, dt: f64) -> StateVector {
    let d = decomp.source_dim;
    debug_assert_eq!(d, psi.dim());
    // c_k = ⟨v_k|ψ⟩, then ψ′ = Σ_k e^{−i λ_k dt} c_k |v_k⟩.
    let mut coeff = [C64::new(0.0, 0.0); MAX_DIM];
    for k in 0..d {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..d {
            acc += decomp.vector_component(k, i).conj() * psi.amp[i];
        }
        let phase = -decomp.eigenvalues[k] * dt;
        coeff[k] = acc * C64::new(phase.cos(), phase.sin());
    }
    let mut amp = [C64::new(0.0, 0.0); MAX_DIM];
    for i in 0..d {
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..d {
            acc += decomp.vector_component(k, i) * coeff[k];
        }
        amp[i] = acc;
    }
    StateVector::from_parts(d, amp)
}

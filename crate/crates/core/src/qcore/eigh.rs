//! Cyclic complex Jacobi eigensolver for 2×2 and 4×4 Hermitian matrices.
//!
//! Each rotation first strips the phase of the pivot entry and then applies
//! the classical real Jacobi rotation, so every update is exactly unitary.
//! Sweeps repeat until the off-diagonal Frobenius norm drops below
//! 1e−13 · max(1, ‖H‖_F).

use super::{HermitianOperator, SpectralDecomposition, MAX_DIM};
use crate::error::{Result, SimError};
use num_complex::Complex64 as C64;

const MAX_SWEEPS: usize = 64;

/// Eigen-decompose a Hermitian operator with ascending eigenvalues and the
/// deterministic real-positive phase convention on eigenvectors.
pub fn eigh(h: &HermitianOperator) -> Result<SpectralDecomposition> {
    let dev = h.hermiticity_defect();
    if dev > super::HERMITICITY_TOL {
        return Err(SimError::NonHermitian { max_deviation: dev });
    }
    let d = h.dim();
    let tol = 1e-13 * h.frobenius_norm().max(1.0);

    // Working copy of H and accumulated eigenvector matrix V (H = V Λ V†).
    let mut a = [C64::new(0.0, 0.0); MAX_DIM * MAX_DIM];
    let mut v = [C64::new(0.0, 0.0); MAX_DIM * MAX_DIM];
    for i in 0..d {
        v[i * MAX_DIM + i] = C64::new(1.0, 0.0);
        for j in 0..d {
            a[i * MAX_DIM + j] = h.get(i, j);
        }
    }

    for _sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..d {
            for j in (i + 1)..d {
                off += a[i * MAX_DIM + j].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= tol {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                rotate(&mut a, &mut v, d, p, q);
            }
        }
    }

    // Diagonal of the converged matrix holds the eigenvalues.
    let mut order: [usize; MAX_DIM] = [0, 1, 2, 3];
    let mut eig = [0.0f64; MAX_DIM];
    for i in 0..d {
        eig[i] = a[i * MAX_DIM + i].re;
    }
    order[..d].sort_by(|&x, &y| eig[x].partial_cmp(&eig[y]).unwrap());

    let mut eigenvalues = [0.0f64; MAX_DIM];
    let mut vectors = [C64::new(0.0, 0.0); MAX_DIM * MAX_DIM];
    for (k, &src) in order[..d].iter().enumerate() {
        eigenvalues[k] = eig[src];
        // Phase convention: largest-magnitude component real-positive,
        // ties broken by the lowest index.
        let mut imax = 0;
        let mut best = -1.0;
        for i in 0..d {
            let mag = v[i * MAX_DIM + src].norm();
            if mag > best + 1e-15 {
                best = mag;
                imax = i;
            }
        }
        let pivot = v[imax * MAX_DIM + src];
        let phase = if pivot.norm() > 0.0 {
            pivot.conj() / pivot.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        for i in 0..d {
            vectors[i * MAX_DIM + k] = v[i * MAX_DIM + src] * phase;
        }
    }

    Ok(SpectralDecomposition::from_parts(d, eigenvalues, vectors))
}

/// Zero the (p, q) pivot of `a` with the unitary J = diag-phase · Givens,
/// updating a ← J†aJ and v ← vJ.
fn rotate(a: &mut [C64; MAX_DIM * MAX_DIM], v: &mut [C64; MAX_DIM * MAX_DIM], d: usize, p: usize, q: usize) {
    let apq = a[p * MAX_DIM + q];
    let habs = apq.norm();
    if habs == 0.0 {
        return;
    }
    let phase = apq / habs; // e^{iφ}
    let app = a[p * MAX_DIM + p].re;
    let aqq = a[q * MAX_DIM + q].re;

    // With J's Givens block [[c, −s], [s, c]], the pivot is zeroed by
    // tan(2θ) = 2|h|/(app − aqq); t is the smaller-magnitude root.
    let tau = (app - aqq) / (2.0 * habs);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column entries of J in the (p, q) plane:
    //   J[p][p] = c            J[p][q] = −s
    //   J[q][p] = s·e^{−iφ}    J[q][q] = c·e^{−iφ}
    let jqp = s * phase.conj();
    let jqq = c * phase.conj();

    // a ← a J
    for i in 0..d {
        let aip = a[i * MAX_DIM + p];
        let aiq = a[i * MAX_DIM + q];
        a[i * MAX_DIM + p] = aip * c + aiq * jqp;
        a[i * MAX_DIM + q] = aip * (-s) + aiq * jqq;
    }
    // a ← J† a
    for j in 0..d {
        let apj = a[p * MAX_DIM + j];
        let aqj = a[q * MAX_DIM + j];
        a[p * MAX_DIM + j] = apj * c + aqj * jqp.conj();
        a[q * MAX_DIM + j] = apj * (-s) + aqj * jqq.conj();
    }
    // Clean the pivot pair and the rotated diagonal of rounding dust.
    a[p * MAX_DIM + q] = C64::new(0.0, 0.0);
    a[q * MAX_DIM + p] = C64::new(0.0, 0.0);
    a[p * MAX_DIM + p] = C64::new(a[p * MAX_DIM + p].re, 0.0);
    a[q * MAX_DIM + q] = C64::new(a[q * MAX_DIM + q].re, 0.0);

    // v ← v J
    for i in 0..d {
        let vip = v[i * MAX_DIM + p];
        let viq = v[i * MAX_DIM + q];
        v[i * MAX_DIM + p] = vip * c + viq * jqp;
        v[i * MAX_DIM + q] = vip * (-s) + viq * jqq;
    }
}

//! Four-band model on stacked triangular lattices (A↑, B↑, B↓, C↓): Bloch
//! Hamiltonian, band dispersions, the qubit↔lattice parameter
//! identification, and a plaquette (link-variable) Chern number for any
//! band.
//!
//! Geometry: unit lattice constant, nearest-neighbor displacements a_j of
//! length 1/√3 connecting B to A/C, and next-nearest displacements b_j of
//! length 1 oriented so that Σ_j sin(K·b_j) = +3√3/2 at the corner
//! K = (4π/3, 0). Nearest-neighbor hopping enters through the Bloch form
//! factor in the zone-periodic gauge, so H(k + G) = H(k) exactly and the
//! dispersing pair carries the honeycomb dispersion with amplitude 2t₁; at
//! the corners the form factor vanishes and the sublattices decouple, which
//! is where the band topology is decided.

use crate::error::{Result, SimError};
use crate::qcore::{eigh, HermitianOperator};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Hopping phase on the second-neighbor bonds (flux −Φ₀/4 per plaquette).
pub const HOPPING_PHASE: f64 = PI / 2.0;

/// Nearest-neighbor displacements a_j (B sublattice to A/C), length 1/√3.
pub fn nn_displacements() -> [[f64; 2]; 3] {
    let r3 = 3.0_f64.sqrt();
    [
        [0.5, 0.5 / r3],
        [-0.5, 0.5 / r3],
        [0.0, -1.0 / r3],
    ]
}

/// Second-neighbor displacements b_j, oriented for Σ sin(K·b_j) = +3√3/2.
pub fn nnn_displacements() -> [[f64; 2]; 3] {
    let r3 = 3.0_f64.sqrt();
    [[-1.0, 0.0], [0.5, -0.5 * r3], [0.5, 0.5 * r3]]
}

/// Reciprocal primitive vectors of the triangular lattice.
pub fn reciprocal_vectors() -> ([f64; 2], [f64; 2]) {
    let r3 = 3.0_f64.sqrt();
    ([2.0 * PI, -2.0 * PI / r3], [0.0, 4.0 * PI / r3])
}

/// Zone corner K = (4π/3, 0); K′ = −K is inequivalent.
pub const K_CORNER: [f64; 2] = [4.0 * PI / 3.0, 0.0];
pub const K_PRIME_CORNER: [f64; 2] = [-4.0 * PI / 3.0, 0.0];

/// Model parameters in a common energy unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaldaneParams {
    /// Nearest-neighbor hopping (B ↔ A/C); sets the dispersing-band scale.
    pub t1: f64,
    /// Second-neighbor hopping on A and C (with phase ±π/2).
    pub t2: f64,
    /// On-site hybridization of the two B states.
    pub t3: f64,
    /// Zeeman splitting of the internal spin states.
    pub h_z: f64,
}

impl HaldaneParams {
    pub fn new(t1: f64, t2: f64, t3: f64, h_z: f64) -> Result<Self> {
        if !(t1 > 0.0) || !t1.is_finite() {
            return Err(SimError::InvalidArgument(format!(
                "t1 must be positive (sets the energy scale), got {t1}"
            )));
        }
        if !t2.is_finite() || !t3.is_finite() || !h_z.is_finite() {
            return Err(SimError::InvalidArgument("non-finite parameter".into()));
        }
        Ok(HaldaneParams { t1, t2, t3, h_z })
    }
}

/// Qubit-sphere parameters mapped onto the lattice:
/// 3√3·t₂ = H_r, −t₃ = g, 2h_z = H_0, with t₁ chosen to keep the ground
/// band separated away from the corners.
pub fn from_qubit_params(h_r: f64, g: f64, h_0: f64, scale: f64) -> Result<HaldaneParams> {
    if !(h_r > 0.0) {
        return Err(SimError::DegenerateManifold { h_r });
    }
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(SimError::InvalidArgument(format!(
            "scale must be positive, got {scale}"
        )));
    }
    let t2 = h_r / (3.0 * 3.0_f64.sqrt()) / scale;
    let t3 = -g / scale;
    let h_z = 0.5 * h_0 / scale;
    let t1 = (5.0 * t2.abs()).max(t3.abs()).max(h_z.abs());
    HaldaneParams::new(t1, t2, t3, h_z)
}

/// A sampled Bloch point: the 4×4 Hamiltonian and its sorted band energies.
#[derive(Debug, Clone)]
pub struct BlochPoint {
    pub k: [f64; 2],
    pub h_k: HermitianOperator,
    pub band_energies: [f64; 4],
}

fn dot(k: &[f64; 2], v: &[f64; 2]) -> f64 {
    k[0] * v[0] + k[1] * v[1]
}

/// Nearest-neighbor Bloch form factor in the zone-periodic gauge
/// (displacements measured relative to a_1, which shifts them onto lattice
/// vectors): f(k) = −t₁ (1 + e^{ik·(a_2−a_1)} + e^{ik·(a_3−a_1)}).
fn form_factor(t1: f64, k: &[f64; 2]) -> C64 {
    let nn = nn_displacements();
    let d2 = [nn[1][0] - nn[0][0], nn[1][1] - nn[0][1]];
    let d3 = [nn[2][0] - nn[0][0], nn[2][1] - nn[0][1]];
    let p2 = dot(k, &d2);
    let p3 = dot(k, &d3);
    -t1 * (C64::new(1.0, 0.0)
        + C64::new(p2.cos(), p2.sin())
        + C64::new(p3.cos(), p3.sin()))
}

/// Σ_j sin(k·b_j), the second-neighbor flux form factor (±3√3/2 at K/K′).
pub fn nnn_sine_sum(k: &[f64; 2]) -> f64 {
    nnn_displacements().iter().map(|b| dot(k, b).sin()).sum()
}

/// Σ_j cos(k·a_j); vanishes at the zone corners, decoupling the sublattices.
pub fn nn_cosine_sum(k: &[f64; 2]) -> f64 {
    nn_displacements().iter().map(|a| dot(k, a).cos()).sum()
}

/// Assemble the Bloch Hamiltonian in the basis (A↑, B↑, B↓, C↓).
pub fn bloch_hamiltonian(p: &HaldaneParams, k: [f64; 2]) -> Result<BlochPoint> {
    let s = p.t2 * 2.0 * nnn_sine_sum(&k);
    let f = form_factor(p.t1, &k);
    let z = C64::new(0.0, 0.0);
    let re = |x: f64| C64::new(x, 0.0);
    let entries = [
        re(-s - p.h_z), f, f, z,
        f.conj(), re(-p.h_z), re(p.t3), f,
        f.conj(), re(p.t3), re(p.h_z), f,
        z, f.conj(), f.conj(), re(s + p.h_z),
    ];
    let h_k = HermitianOperator::new(4, &entries)?;
    let decomp = eigh(&h_k)?;
    let mut band_energies = [0.0; 4];
    band_energies.copy_from_slice(decomp.eigenvalues());
    Ok(BlochPoint {
        k,
        h_k,
        band_energies,
    })
}

/// Band energies along a path of k-points.
pub fn band_dispersion(p: &HaldaneParams, k_path: &[[f64; 2]]) -> Result<Vec<[f64; 4]>> {
    if k_path.is_empty() {
        return Err(SimError::InvalidArgument("empty k-path".into()));
    }
    k_path
        .iter()
        .map(|&k| Ok(bloch_hamiltonian(p, k)?.band_energies))
        .collect()
}

/// Straight cut through K′, Γ and K with `n` samples.
pub fn corner_cut_path(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let s = i as f64 / (n - 1).max(1) as f64;
            [
                K_PRIME_CORNER[0] + s * (K_CORNER[0] - K_PRIME_CORNER[0]),
                K_PRIME_CORNER[1] + s * (K_CORNER[1] - K_PRIME_CORNER[1]),
            ]
        })
        .collect()
}

pub const DEFAULT_CHERN_GRID: usize = 48;

/// Plaquette (link-variable) Chern number of one band on an N×N
/// discretization of the zone. Exactly an integer when it returns; errors
/// if the band touches a neighbor anywhere on the grid.
pub fn lattice_chern(p: &HaldaneParams, band: usize, n: usize) -> Result<i64> {
    if band > 3 {
        return Err(SimError::InvalidArgument(format!(
            "band index must be 0..=3, got {band}"
        )));
    }
    if n < 4 {
        return Err(SimError::InvalidArgument(format!(
            "grid must be at least 4×4, got {n}"
        )));
    }
    // Band eigenvectors over the periodic grid, k = (s/N)G1 + (t/N)G2.
    let (g1, g2) = reciprocal_vectors();
    let mut vectors: Vec<[C64; 4]> = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let k = [
                (s as f64 / n as f64) * g1[0] + (t as f64 / n as f64) * g2[0],
                (s as f64 / n as f64) * g1[1] + (t as f64 / n as f64) * g2[1],
            ];
            let point = bloch_hamiltonian(p, k)?;
            let gap_above = if band < 3 {
                point.band_energies[band + 1] - point.band_energies[band]
            } else {
                f64::INFINITY
            };
            let gap_below = if band > 0 {
                point.band_energies[band] - point.band_energies[band - 1]
            } else {
                f64::INFINITY
            };
            if gap_above <= 1e-10 || gap_below <= 1e-10 {
                return Err(SimError::Gapless {
                    kx: k[0],
                    ky: k[1],
                    gap: gap_above.min(gap_below),
                });
            }
            let decomp = eigh(&point.h_k)?;
            let mut v = [C64::new(0.0, 0.0); 4];
            for (i, vi) in v.iter_mut().enumerate() {
                *vi = decomp.vector_component(band, i);
            }
            vectors.push(v);
        }
    }

    let overlap = |a: &[C64; 4], b: &[C64; 4]| -> C64 {
        a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
    };
    let at = |s: usize, t: usize| &vectors[(s % n) * n + (t % n)];

    let mut total = 0.0;
    for s in 0..n {
        for t in 0..n {
            let u1 = overlap(at(s, t), at(s + 1, t));
            let u2 = overlap(at(s + 1, t), at(s + 1, t + 1));
            let u3 = overlap(at(s + 1, t + 1), at(s, t + 1));
            let u4 = overlap(at(s, t + 1), at(s, t));
            let phase = (u1 * u2 * u3 * u4).arg();
            total += phase;
        }
    }
    // Orientation pinned to the sphere convention (enclosed degeneracy
    // contributes +1): the t₂-only ground band carries +2.
    let chern = -total / (2.0 * PI);
    let rounded = chern.round();
    if (chern - rounded).abs() > 1e-6 {
        return Err(SimError::InvalidArgument(format!(
            "plaquette sum {chern} is not an integer; grid too coarse"
        )));
    }
    Ok(rounded as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berry::monopole_count;
    use crate::rng::CounterRng;
    use crate::units::mhz_to_rad_ns;

    #[test]
    fn corner_form_factors() {
        // Σ cos(K·a_j) = 0: the sublattices decouple at the corners.
        assert!(nn_cosine_sum(&K_CORNER).abs() < 1e-12);
        assert!(nn_cosine_sum(&K_PRIME_CORNER).abs() < 1e-12);
        assert!(form_factor(1.0, &K_CORNER).norm() < 1e-12);
        // Σ sin(K·b_j) = +3√3/2 with the pinned orientation.
        let target = 1.5 * 3.0_f64.sqrt();
        assert!((nnn_sine_sum(&K_CORNER) - target).abs() < 1e-12);
        assert!((nnn_sine_sum(&K_PRIME_CORNER) + target).abs() < 1e-12);
    }

    #[test]
    fn bloch_hamiltonian_is_periodic_and_hermitian() {
        let p = HaldaneParams::new(1.0, 0.12, -0.3, 0.2).unwrap();
        let mut rng = CounterRng::new(77, 12);
        for _ in 0..1000 {
            let k = [rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0)];
            let h = bloch_hamiltonian(&p, k).unwrap().h_k;
            assert!(h.hermiticity_defect() <= 1e-12);
            // Zone periodicity in the periodic gauge.
            let (g1, _) = reciprocal_vectors();
            let kg = [k[0] + g1[0], k[1] + g1[1]];
            let hg = bloch_hamiltonian(&p, kg).unwrap().h_k;
            for i in 0..4 {
                for j in 0..4 {
                    assert!((h.get(i, j) - hg.get(i, j)).norm() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn nearest_neighbor_only_model_has_flat_and_graphene_bands() {
        let p = HaldaneParams::new(1.0, 0.0, 0.0, 0.0).unwrap();
        // At the corner all four energies vanish.
        let at_k = bloch_hamiltonian(&p, K_CORNER).unwrap().band_energies;
        for e in at_k {
            assert!(e.abs() < 1e-12);
        }
        // Generic k: two exactly flat zero modes plus a ±2t₁|Σe^{ik·a}| pair.
        let mut rng = CounterRng::new(3, 13);
        for _ in 0..200 {
            let k = [rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)];
            let e = bloch_hamiltonian(&p, k).unwrap().band_energies;
            assert!(e[1].abs() < 1e-10 && e[2].abs() < 1e-10, "flat bands at {k:?}");
            let amplitude = form_factor(1.0, &k).norm();
            assert!((e[3] - 2.0 * amplitude).abs() < 1e-10);
            assert!((e[0] + 2.0 * amplitude).abs() < 1e-10);
        }
        // The dispersing pair at Γ reaches ±6t₁ (graphene with 2t₁ hopping).
        let at_gamma = bloch_hamiltonian(&p, [0.0, 0.0]).unwrap().band_energies;
        assert!((at_gamma[3] - 6.0).abs() < 1e-12);
    }

    #[test]
    fn spectra_are_symmetric_under_zeeman_reversal() {
        // A↔C exchange maps (h_z, k) → (−h_z, −k) with the bands relabeled,
        // so the two parameter sets share their spectrum at opposite
        // momenta (and hence over the whole zone).
        let plus = HaldaneParams::new(1.0, 0.1, -0.2, 0.3).unwrap();
        let minus = HaldaneParams::new(1.0, 0.1, -0.2, -0.3).unwrap();
        let mut rng = CounterRng::new(9, 14);
        for _ in 0..200 {
            let k = [rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)];
            let ep = bloch_hamiltonian(&plus, k).unwrap().band_energies;
            let em = bloch_hamiltonian(&minus, [-k[0], -k[1]]).unwrap().band_energies;
            for (a, b) in ep.iter().zip(em.iter()) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn corner_spectrum_reproduces_the_qubit_sectors() {
        let h_r = mhz_to_rad_ns(10.0);
        let h_0 = mhz_to_rad_ns(6.0);
        let g = mhz_to_rad_ns(4.0);
        let p = from_qubit_params(h_r, g, h_0, 1.0).unwrap();
        let e = bloch_hamiltonian(&p, K_CORNER).unwrap().band_energies;
        let expected = crate::berry::sector_energies(h_r, h_0, g);
        for (a, b) in e.iter().zip(expected.iter()) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn qubit_identification_values() {
        let h_r = mhz_to_rad_ns(10.0);
        let p = from_qubit_params(h_r, 0.0, 0.0, 1.0).unwrap();
        assert!((p.t2 - h_r / (3.0 * 3.0_f64.sqrt())).abs() < 1e-15);
        assert_eq!(p.t3, 0.0);
        assert_eq!(p.h_z, 0.0);

        let g = mhz_to_rad_ns(4.0);
        let p = from_qubit_params(h_r, g, 0.0, 1.0).unwrap();
        assert!((p.t3 + g).abs() < 1e-15);

        let h_0 = mhz_to_rad_ns(6.0);
        let p = from_qubit_params(h_r, 0.0, h_0, 1.0).unwrap();
        assert!((p.h_z - 0.5 * h_0).abs() < 1e-15);
    }

    #[test]
    fn lattice_chern_phases() {
        // Pure t₂: the ground state winds A → C, Chern 2.
        let p = HaldaneParams::new(1.0, 0.2, 0.0, 0.0).unwrap();
        assert_eq!(lattice_chern(&p, 0, 24).unwrap(), 2);
        // Dominant hybridization: the symmetric B state sinks, Chern 0.
        let p = HaldaneParams::new(1.5, 0.1, -1.5, 0.0).unwrap();
        assert_eq!(lattice_chern(&p, 0, 24).unwrap(), 0);
        // Dominant Zeeman: winding between two sublattices only, Chern 1.
        let p = HaldaneParams::new(1.5, 0.1, 0.0, 1.5).unwrap();
        assert_eq!(lattice_chern(&p, 0, 24).unwrap(), 1);
    }

    #[test]
    fn lattice_chern_is_stable_under_grid_refinement() {
        for (t3, h_z) in [(0.0, 0.0), (-1.5, 0.0), (0.0, 1.5), (-0.4, 0.6)] {
            let p = HaldaneParams::new(1.5, 0.1, t3, h_z).unwrap();
            let coarse = lattice_chern(&p, 0, 24).unwrap();
            let fine = lattice_chern(&p, 0, 48).unwrap();
            assert_eq!(coarse, fine);
        }
    }

    #[test]
    fn lattice_chern_matches_the_monopole_oracle() {
        let h_r = mhz_to_rad_ns(10.0);
        let mut rng = CounterRng::new(1234, 15);
        let mut done = 0;
        while done < 5 {
            let h_0 = mhz_to_rad_ns(rng.uniform(0.0, 25.0));
            let g = mhz_to_rad_ns(rng.uniform(0.0, 18.0));
            let set = crate::berry::degeneracy_loci(h_0, g);
            if set.boundary_margin(h_r) <= 0.05 * h_r {
                continue;
            }
            done += 1;
            let count = monopole_count(h_0, g, h_r).unwrap().rounded.unwrap();
            let p = from_qubit_params(h_r, g, h_0, 1.0).unwrap();
            let ch = lattice_chern(&p, 0, 24).unwrap();
            assert_eq!(ch, count, "h_0={h_0} g={g}");
        }
    }

    #[test]
    fn gap_closure_at_a_phase_boundary_is_an_error() {
        // g = H_r at H_0 = 0 puts a degeneracy exactly at the corner.
        let h_r = mhz_to_rad_ns(10.0);
        let p = from_qubit_params(h_r, h_r, 0.0, 1.0).unwrap();
        assert!(matches!(
            lattice_chern(&p, 0, 24),
            Err(SimError::Gapless { .. })
        ));
    }

    #[test]
    fn total_chern_over_all_bands_vanishes() {
        let p = HaldaneParams::new(1.5, 0.1, -0.4, 0.6).unwrap();
        let total: i64 = (0..4).map(|b| lattice_chern(&p, b, 24).unwrap()).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn dispersion_path_covers_both_corners() {
        let path = corner_cut_path(101);
        assert_eq!(path.len(), 101);
        assert_eq!(path[0], K_PRIME_CORNER);
        assert_eq!(path[100], K_CORNER);
        let p = HaldaneParams::new(1.0, 0.1, 0.0, 0.0).unwrap();
        let bands = band_dispersion(&p, &path).unwrap();
        assert_eq!(bands.len(), 101);
        assert!(band_dispersion(&p, &[]).is_err());
    }
}

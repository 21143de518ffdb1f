//! Pulse schedules and the instantaneous Hamiltonian they generate.
//!
//! All schedules are parameterized control-vector evaluators over
//! `t ∈ [0, T_total]`:
//!
//! * meridian — `H_X(t) = H_r sin(πt/T_f)`, `H_Z(t) = H_0 + H_r cos(πt/T_f)`:
//!   motion along the φ = φ_plane meridian of a sphere of radius `H_r`
//!   whose center sits at `H_Z = H_0`.
//! * elliptic — independent in-plane and axial amplitudes
//!   (`H_X_max sin`, `H_Z_max cos`), an ellipsoidal manifold.
//! * two-qubit — both qubits get the meridian drive; the `H_0` bias applies
//!   to qubit 1 only and the exchange coupling `g` is rectangular on
//!   `[0, T_f]`.
//! * adiabatic-prep — linear turn-on to a target control vector over
//!   `T_ramp`, then constant for `T_hold`.
//!
//! The Hamiltonian convention is
//! `𝓗 = −(1/2) Σ_q H_q(t)·σ_q + (g/2)(σ₁^x σ₂^x + σ₁^y σ₂^y)`
//! with ħ = 1 and all magnitudes in rad/ns.

use crate::error::{Result, SimError};
use crate::qcore::{pauli, Axis, HermitianOperator};
use std::f64::consts::PI;

/// Instantaneous control fields: per-qubit (H_X, H_Y, H_Z) plus coupling g.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlVector {
    pub n_qubits: usize,
    /// `fields[q] = [H_X, H_Y, H_Z]` for qubit q, rad/ns.
    pub fields: [[f64; 3]; 2],
    /// Exchange coupling g, rad/ns (zero for a single qubit).
    pub g: f64,
}

impl ControlVector {
    pub fn single(x: f64, y: f64, z: f64) -> Self {
        ControlVector {
            n_qubits: 1,
            fields: [[x, y, z], [0.0; 3]],
            g: 0.0,
        }
    }

    pub fn two(q1: [f64; 3], q2: [f64; 3], g: f64) -> Self {
        ControlVector {
            n_qubits: 2,
            fields: [q1, q2],
            g,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.g.is_finite()
            && self
                .fields
                .iter()
                .all(|f| f.iter().all(|v| v.is_finite()))
    }

    /// Euclidean magnitude of qubit `q`'s field.
    pub fn field_magnitude(&self, q: usize) -> f64 {
        let f = self.fields[q];
        (f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleKind {
    Meridian,
    Elliptic,
    TwoQubit,
    AdiabaticPrep,
}

impl ScheduleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScheduleKind::Meridian => "meridian",
            ScheduleKind::Elliptic => "elliptic",
            ScheduleKind::TwoQubit => "two_qubit",
            ScheduleKind::AdiabaticPrep => "adiabatic_prep",
        }
    }
}

/// A time-parameterized control schedule; `control_at` is a pure function
/// of the stored parameters, so schedules can be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlSchedule {
    pub kind: ScheduleKind,
    pub n_qubits: usize,
    /// Ramp duration (pole-to-pole time) in ns.
    pub t_f: f64,
    /// Total schedule duration; equals `t_f` except for adiabatic prep.
    pub t_total: f64,
    pub h_r: f64,
    pub h_0: f64,
    pub g: f64,
    pub h_x_max: f64,
    pub h_z_max: f64,
    /// Azimuth of the ramp plane; 0 puts the drive on σ^x.
    pub phi_plane: f64,
    /// Prep-only: target vector and ramp/hold split.
    pub target: Option<ControlVector>,
    pub t_ramp: f64,
    pub t_hold: f64,
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(SimError::InvalidArgument(format!(
            "{name} must be positive and finite, got {v}"
        )));
    }
    Ok(())
}

/// Single-qubit constant-radius ramp along the φ_plane = 0 meridian.
pub fn meridian_ramp(h_r: f64, h_0: f64, t_f: f64) -> Result<ControlSchedule> {
    meridian_ramp_at(h_r, h_0, t_f, 0.0)
}

/// Meridian ramp with the in-plane drive rotated to azimuth `phi_plane`.
pub fn meridian_ramp_at(h_r: f64, h_0: f64, t_f: f64, phi_plane: f64) -> Result<ControlSchedule> {
    if !(h_r > 0.0) {
        return Err(SimError::DegenerateManifold { h_r });
    }
    check_positive("T_f", t_f)?;
    if !h_0.is_finite() || !phi_plane.is_finite() {
        return Err(SimError::InvalidArgument("non-finite parameter".into()));
    }
    Ok(ControlSchedule {
        kind: ScheduleKind::Meridian,
        n_qubits: 1,
        t_f,
        t_total: t_f,
        h_r,
        h_0,
        g: 0.0,
        h_x_max: h_r,
        h_z_max: h_r,
        phi_plane,
        target: None,
        t_ramp: 0.0,
        t_hold: 0.0,
    })
}

/// Single-qubit ellipsoidal-manifold ramp with independent amplitudes.
pub fn elliptic_ramp(h_x_max: f64, h_z_max: f64, t_f: f64) -> Result<ControlSchedule> {
    if !(h_x_max > 0.0) {
        return Err(SimError::DegenerateManifold { h_r: h_x_max });
    }
    if !(h_z_max > 0.0) {
        return Err(SimError::DegenerateManifold { h_r: h_z_max });
    }
    check_positive("T_f", t_f)?;
    Ok(ControlSchedule {
        kind: ScheduleKind::Elliptic,
        n_qubits: 1,
        t_f,
        t_total: t_f,
        h_r: h_x_max,
        h_0: 0.0,
        g: 0.0,
        h_x_max,
        h_z_max,
        phi_plane: 0.0,
        target: None,
        t_ramp: 0.0,
        t_hold: 0.0,
    })
}

/// Two-qubit simultaneous meridian ramp; `h_0` biases qubit 1 only and the
/// coupling `g` is on rectangularly for the whole window.
pub fn two_qubit_ramp(h_r: f64, h_0: f64, g: f64, t_f: f64) -> Result<ControlSchedule> {
    if !(h_r > 0.0) {
        return Err(SimError::DegenerateManifold { h_r });
    }
    check_positive("T_f", t_f)?;
    if !h_0.is_finite() || !g.is_finite() {
        return Err(SimError::InvalidArgument("non-finite parameter".into()));
    }
    Ok(ControlSchedule {
        kind: ScheduleKind::TwoQubit,
        n_qubits: 2,
        t_f,
        t_total: t_f,
        h_r,
        h_0,
        g,
        h_x_max: h_r,
        h_z_max: h_r,
        phi_plane: 0.0,
        target: None,
        t_ramp: 0.0,
        t_hold: 0.0,
    })
}

/// Linear turn-on of every control component from zero to `target` over
/// `t_ramp`, then constant for `t_hold`.
pub fn adiabatic_prep_schedule(
    target: ControlVector,
    t_ramp: f64,
    t_hold: f64,
) -> Result<ControlSchedule> {
    if !target.is_finite() {
        return Err(SimError::InvalidArgument("non-finite target".into()));
    }
    check_positive("T_ramp", t_ramp)?;
    check_positive("T_hold", t_hold)?;
    Ok(ControlSchedule {
        kind: ScheduleKind::AdiabaticPrep,
        n_qubits: target.n_qubits,
        t_f: t_ramp + t_hold,
        t_total: t_ramp + t_hold,
        h_r: 0.0,
        h_0: 0.0,
        g: target.g,
        h_x_max: 0.0,
        h_z_max: 0.0,
        phi_plane: 0.0,
        target: Some(target),
        t_ramp,
        t_hold,
    })
}

pub const DEFAULT_PREP_RAMP_NS: f64 = 500.0;
pub const DEFAULT_PREP_HOLD_NS: f64 = 500.0;

impl ControlSchedule {
    /// Evaluate the control vector at time `t ∈ [0, T_total]`.
    pub fn control_at(&self, t: f64) -> Result<ControlVector> {
        if !(0.0..=self.t_total + 1e-12).contains(&t) {
            return Err(SimError::InvalidArgument(format!(
                "t = {t} outside schedule window [0, {}]",
                self.t_total
            )));
        }
        Ok(match self.kind {
            ScheduleKind::Meridian => {
                let theta = PI * (t / self.t_f).clamp(0.0, 1.0);
                let inplane = self.h_r * theta.sin();
                ControlVector::single(
                    inplane * self.phi_plane.cos(),
                    inplane * self.phi_plane.sin(),
                    self.h_0 + self.h_r * theta.cos(),
                )
            }
            ScheduleKind::Elliptic => {
                let theta = PI * (t / self.t_f).clamp(0.0, 1.0);
                ControlVector::single(
                    self.h_x_max * theta.sin(),
                    0.0,
                    self.h_z_max * theta.cos(),
                )
            }
            ScheduleKind::TwoQubit => {
                let theta = PI * (t / self.t_f).clamp(0.0, 1.0);
                let x = self.h_r * theta.sin();
                let z = self.h_r * theta.cos();
                ControlVector::two([x, 0.0, self.h_0 + z], [x, 0.0, z], self.g)
            }
            ScheduleKind::AdiabaticPrep => {
                let target = self.target.expect("prep schedule carries a target");
                let s = (t / self.t_ramp).clamp(0.0, 1.0);
                let mut cv = target;
                for f in cv.fields.iter_mut() {
                    for v in f.iter_mut() {
                        *v *= s;
                    }
                }
                cv.g = target.g * s;
                cv
            }
        })
    }

    /// The instantaneous Hamiltonian
    /// `𝓗(t) = −(1/2) Σ_q H_q(t)·σ_q + (g/2)(σ₁^x σ₂^x + σ₁^y σ₂^y)`.
    pub fn hamiltonian_at(&self, t: f64) -> Result<HermitianOperator> {
        let cv = self.control_at(t)?;
        hamiltonian_from_controls(&cv)
    }

    /// In-plane drive amplitude at time `t` (the weight of the dynamical
    /// Chern integrand).
    pub fn inplane_at(&self, t: f64) -> f64 {
        let theta = PI * (t / self.t_f).clamp(0.0, 1.0);
        self.h_x_max * theta.sin()
    }

    /// Adiabaticity measure `A = T_f √(H_X_max² + H_Z_max²) / 2π`
    /// (equal to `T_f · H_r / 2π` for constant-radius ramps).
    pub fn adiabaticity(&self) -> Result<f64> {
        match self.kind {
            ScheduleKind::Meridian | ScheduleKind::TwoQubit => Ok(self.t_f * self.h_r / (2.0 * PI)),
            ScheduleKind::Elliptic => Ok(self.t_f
                * (self.h_x_max * self.h_x_max + self.h_z_max * self.h_z_max).sqrt()
                / (2.0 * PI)),
            ScheduleKind::AdiabaticPrep => Err(SimError::Unsupported(
                "adiabaticity measure is defined only for ramp schedules".into(),
            )),
        }
    }

    /// True when the σ^z-aligned product state |↑…↑⟩ is the ground state of
    /// the schedule's initial Hamiltonian. Ramps launched from an excited
    /// start measure the curvature of the band the start state lives in,
    /// not the ground band, so sweep cells violating this carry a flag.
    pub fn ground_start(&self) -> bool {
        match self.kind {
            ScheduleKind::Meridian | ScheduleKind::Elliptic => self.h_0 + self.h_z_max > 0.0,
            // Sector energies at θ = 0: E(↑↑) = −(H_r + H_0/2) must lie
            // below the ↑↓-sector ground −√(H_0²/4 + g²), which reduces to
            // g² < H_r (H_r + H_0).
            ScheduleKind::TwoQubit => self.g * self.g < self.h_r * (self.h_r + self.h_0),
            ScheduleKind::AdiabaticPrep => true,
        }
    }
}

/// Assemble the Hamiltonian for an arbitrary control vector.
pub fn hamiltonian_from_controls(cv: &ControlVector) -> Result<HermitianOperator> {
    if !cv.is_finite() {
        return Err(SimError::InvalidArgument(
            "non-finite control vector".into(),
        ));
    }
    let n = cv.n_qubits;
    if n != 1 && n != 2 {
        return Err(SimError::InvalidArgument(format!(
            "n_qubits must be 1 or 2, got {n}"
        )));
    }
    let dim = 1usize << n;
    let mut h = HermitianOperator::zeros(dim);
    for q in 0..n {
        let f = cv.fields[q];
        for (axis, comp) in [(Axis::X, f[0]), (Axis::Y, f[1]), (Axis::Z, f[2])] {
            if comp != 0.0 {
                h.add_scaled(-0.5 * comp, &pauli(axis, q, n)?);
            }
        }
    }
    if n == 2 && cv.g != 0.0 {
        let xx = mul_hermitian(&pauli(Axis::X, 0, 2)?, &pauli(Axis::X, 1, 2)?);
        let yy = mul_hermitian(&pauli(Axis::Y, 0, 2)?, &pauli(Axis::Y, 1, 2)?);
        h.add_scaled(0.5 * cv.g, &xx);
        h.add_scaled(0.5 * cv.g, &yy);
    }
    Ok(h)
}

/// Product of two commuting Hermitian factors (σ_1^a σ_2^a), still Hermitian.
fn mul_hermitian(a: &HermitianOperator, b: &HermitianOperator) -> HermitianOperator {
    let raw = a.mul(b);
    let mut out = HermitianOperator::zeros(a.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            out.set(i, j, raw[i * crate::qcore::MAX_DIM + j]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::eigh;
    use crate::rng::CounterRng;
    use crate::units::mhz_to_rad_ns;

    #[test]
    fn meridian_endpoints_match_fig2_parameters() {
        let h_r = mhz_to_rad_ns(10.0);
        let s = meridian_ramp(h_r, 0.0, 600.0).unwrap();
        let at0 = s.control_at(0.0).unwrap();
        assert!((at0.fields[0][0]).abs() < 1e-15);
        assert!((at0.fields[0][2] - h_r).abs() < 1e-15);
        let mid = s.control_at(300.0).unwrap();
        assert!((mid.fields[0][0] - h_r).abs() < 1e-12);
        assert!(mid.fields[0][2].abs() < 1e-12);
        // θ(T_f) = π exactly.
        let end = s.control_at(600.0).unwrap();
        assert!(end.fields[0][0].abs() < 1e-12);
        assert!((end.fields[0][2] + h_r).abs() < 1e-12);
    }

    #[test]
    fn meridian_with_large_bias_never_crosses_zero_field() {
        let h_r = mhz_to_rad_ns(10.0);
        let h_0 = mhz_to_rad_ns(12.0);
        let s = meridian_ramp(h_r, h_0, 600.0).unwrap();
        for k in 0..=100 {
            let t = 600.0 * k as f64 / 100.0;
            let cv = s.control_at(t).unwrap();
            assert!(cv.fields[0][2] > 0.0);
        }
        let end = s.control_at(600.0).unwrap();
        assert!((end.fields[0][2] - (h_0 - h_r)).abs() < 1e-12);
    }

    #[test]
    fn meridian_rejects_degenerate_manifold() {
        assert!(matches!(
            meridian_ramp(0.0, 0.0, 100.0),
            Err(SimError::DegenerateManifold { .. })
        ));
        assert!(meridian_ramp(1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn constant_radius_invariant_holds() {
        let h_r = mhz_to_rad_ns(7.5);
        let h_0 = mhz_to_rad_ns(3.0);
        let m = meridian_ramp(h_r, h_0, 400.0).unwrap();
        let tq = two_qubit_ramp(h_r, h_0, mhz_to_rad_ns(2.0), 400.0).unwrap();
        for k in 0..=257 {
            let t = 400.0 * k as f64 / 257.0;
            let cv = m.control_at(t).unwrap();
            let r = (cv.fields[0][0].powi(2) + (cv.fields[0][2] - h_0).powi(2)).sqrt();
            assert!((r - h_r).abs() <= 1e-12 * h_r);
            let cv2 = tq.control_at(t).unwrap();
            let r1 = (cv2.fields[0][0].powi(2) + (cv2.fields[0][2] - h_0).powi(2)).sqrt();
            let r2 = (cv2.fields[1][0].powi(2) + cv2.fields[1][2].powi(2)).sqrt();
            assert!((r1 - h_r).abs() <= 1e-12 * h_r);
            assert!((r2 - h_r).abs() <= 1e-12 * h_r);
        }
    }

    #[test]
    fn elliptic_reduces_to_meridian_on_the_circle() {
        let h_r = mhz_to_rad_ns(10.0);
        let e = elliptic_ramp(h_r, h_r, 400.0).unwrap();
        let m = meridian_ramp(h_r, 0.0, 400.0).unwrap();
        for k in 0..=57 {
            let t = 400.0 * k as f64 / 57.0;
            assert_eq!(e.control_at(t).unwrap(), m.control_at(t).unwrap());
        }
    }

    #[test]
    fn elliptic_starts_on_the_z_axis() {
        let e = elliptic_ramp(1.0, 2.0, 100.0).unwrap();
        let cv = e.control_at(0.0).unwrap();
        assert_eq!(cv.fields[0], [0.0, 0.0, 2.0]);
    }

    #[test]
    fn adiabaticity_values_from_the_study() {
        // T_f = 600 ns at H_r/2π = 10 MHz gives A = 6; doubling T_f doubles A.
        let h_r = mhz_to_rad_ns(10.0);
        let a6 = meridian_ramp(h_r, 0.0, 600.0).unwrap().adiabaticity().unwrap();
        assert!((a6 - 6.0).abs() < 1e-12);
        let a1 = meridian_ramp(h_r, 0.0, 100.0).unwrap().adiabaticity().unwrap();
        assert!((a1 - 1.0).abs() < 1e-12);
        let a12 = meridian_ramp(h_r, 0.0, 1200.0).unwrap().adiabaticity().unwrap();
        assert!((a12 - 2.0 * a6).abs() < 1e-12);

        let e = elliptic_ramp(mhz_to_rad_ns(10.0), mhz_to_rad_ns(10.0), 400.0).unwrap();
        let a = e.adiabaticity().unwrap();
        assert!((a - 0.4 * 200.0_f64.sqrt()).abs() < 1e-12, "A = {a}");
        assert!((a - 5.656854249492381).abs() < 1e-9);

        let prep = adiabatic_prep_schedule(ControlVector::single(0.0, 0.0, 1.0), 500.0, 500.0)
            .unwrap();
        assert!(matches!(prep.adiabaticity(), Err(SimError::Unsupported(_))));
    }

    #[test]
    fn two_qubit_ramp_endpoints_and_decoupled_limit() {
        let h_r = mhz_to_rad_ns(10.0);
        let h_0 = mhz_to_rad_ns(6.0);
        let g = mhz_to_rad_ns(4.0);
        let s = two_qubit_ramp(h_r, h_0, g, 1000.0).unwrap();
        let at0 = s.control_at(0.0).unwrap();
        assert_eq!(at0.fields[0], [0.0, 0.0, h_0 + h_r]);
        assert_eq!(at0.fields[1], [0.0, 0.0, h_r]);
        assert_eq!(at0.g, g);
        let end = s.control_at(1000.0).unwrap();
        assert!((end.fields[0][2] - (h_0 - h_r)).abs() < 1e-12);

        // g = 0, H_0 = 0 is two independent meridian copies.
        let dec = two_qubit_ramp(h_r, 0.0, 0.0, 1000.0).unwrap();
        let m = meridian_ramp(h_r, 0.0, 1000.0).unwrap();
        for k in 0..=31 {
            let t = 1000.0 * k as f64 / 31.0;
            let cv = dec.control_at(t).unwrap();
            let mv = m.control_at(t).unwrap();
            assert_eq!(cv.fields[0], mv.fields[0]);
            assert_eq!(cv.fields[1], mv.fields[0]);
            assert_eq!(cv.g, 0.0);
        }
    }

    #[test]
    fn prep_schedule_is_linear_then_constant() {
        let target = ControlVector::single(0.3, -0.1, 0.7);
        let s = adiabatic_prep_schedule(target, 500.0, 500.0).unwrap();
        assert!((s.t_total - 1000.0).abs() < 1e-12);
        let mid = s.control_at(250.0).unwrap();
        for i in 0..3 {
            assert!((mid.fields[0][i] - target.fields[0][i] / 2.0).abs() < 1e-12);
        }
        for &t in &[500.0, 700.0, 1000.0] {
            assert_eq!(s.control_at(t).unwrap(), target);
        }
    }

    #[test]
    fn single_qubit_hamiltonian_at_the_north_pole() {
        let h_r = mhz_to_rad_ns(10.0);
        let h_0 = mhz_to_rad_ns(3.0);
        let s = meridian_ramp(h_r, h_0, 600.0).unwrap();
        let h = s.hamiltonian_at(0.0).unwrap();
        // 𝓗 = −(1/2)(H_0 + H_r) σ^z.
        assert!((h.get(0, 0).re + 0.5 * (h_0 + h_r)).abs() < 1e-15);
        assert!((h.get(1, 1).re - 0.5 * (h_0 + h_r)).abs() < 1e-15);
        assert!(h.get(0, 1).norm() < 1e-15);
    }

    #[test]
    fn two_qubit_hamiltonian_matches_the_sector_block_structure() {
        let h_r = mhz_to_rad_ns(10.0);
        let h_0 = mhz_to_rad_ns(6.0);
        let g = mhz_to_rad_ns(4.0);
        let s = two_qubit_ramp(h_r, h_0, g, 1000.0).unwrap();
        let h = s.hamiltonian_at(0.0).unwrap();
        // Diagonal: −(H_r + H_0/2), −H_0/2, +H_0/2, +(H_r + H_0/2).
        assert!((h.get(0, 0).re + (h_r + 0.5 * h_0)).abs() < 1e-14);
        assert!((h.get(1, 1).re + 0.5 * h_0).abs() < 1e-14);
        assert!((h.get(2, 2).re - 0.5 * h_0).abs() < 1e-14);
        assert!((h.get(3, 3).re - (h_r + 0.5 * h_0)).abs() < 1e-14);
        // Flip-flop block carries the coupling; nothing else at θ = 0.
        assert!((h.get(1, 2).re - g).abs() < 1e-14);
        assert!(h.get(1, 2).im.abs() < 1e-15);
        assert!(h.get(0, 3).norm() < 1e-15);
        assert!(h.get(0, 1).norm() < 1e-15);

        // ↑↓ sector eigenvalues ±√(H_0²/4 + g²) appear in the spectrum.
        let d = eigh(&h).unwrap();
        let expect = (0.25 * h_0 * h_0 + g * g).sqrt();
        let close = |x: f64| d.eigenvalues().iter().any(|&e| (e - x).abs() < 1e-12);
        assert!(close(expect) && close(-expect));
    }

    #[test]
    fn hamiltonian_is_hermitian_for_random_schedules_and_times() {
        let mut rng = CounterRng::new(11, 6);
        for _ in 0..1000 {
            let h_r = rng.uniform(0.01, 0.2);
            let h_0 = rng.uniform(-0.1, 0.2);
            let g = rng.uniform(-0.05, 0.1);
            let t_f = rng.uniform(50.0, 2000.0);
            let s = if rng.next_f64() < 0.5 {
                meridian_ramp(h_r, h_0, t_f).unwrap()
            } else {
                two_qubit_ramp(h_r, h_0, g, t_f).unwrap()
            };
            let t = rng.uniform(0.0, t_f);
            let h = s.hamiltonian_at(t).unwrap();
            assert!(h.hermiticity_defect() <= 1e-12);
        }
    }

    #[test]
    fn hamiltonian_at_rejects_out_of_range_times() {
        let s = meridian_ramp(0.0628, 0.0, 600.0).unwrap();
        assert!(s.hamiltonian_at(-1.0).is_err());
        assert!(s.hamiltonian_at(600.1).is_err());
    }

    #[test]
    fn schedule_evaluation_is_pure() {
        let s = two_qubit_ramp(0.0628, 0.01, 0.02, 777.0).unwrap();
        for k in 0..=17 {
            let t = 777.0 * k as f64 / 17.0;
            assert_eq!(s.control_at(t).unwrap(), s.control_at(t).unwrap());
        }
    }

    #[test]
    fn ground_start_flags_the_singlet_regime() {
        let h_r = mhz_to_rad_ns(10.0);
        // g below the H_r(H_r+H_0) boundary: |↑↑⟩ is the ground state.
        let ok = two_qubit_ramp(h_r, 0.0, mhz_to_rad_ns(8.0), 1000.0).unwrap();
        assert!(ok.ground_start());
        // g above it: flagged.
        let bad = two_qubit_ramp(h_r, 0.0, mhz_to_rad_ns(12.0), 1000.0).unwrap();
        assert!(!bad.ground_start());
    }
}

//! Named experiment presets binding figure-style studies to sweep specs
//! and measurement pipelines, at desk scale.
//!
//! Axis ranges follow the published figures where stated and otherwise use
//! documented desk-scale choices; everything here is plain data, so callers
//! can rebuild any preset with different ranges through the underlying
//! modules.

use crate::berry::{chern_dynamical, degeneracy_loci, ChernEstimate, ChernMethod, MonopoleSet};
use crate::bzmap::{texture_chern, texture_grid, TextureMethod, TexturePrep};
use crate::controls::{elliptic_ramp, meridian_ramp};
use crate::error::Result;
use crate::haldane::{band_dispersion, corner_cut_path, HaldaneParams};
use crate::propagator::{propagate, TrajectoryRecord, DEFAULT_N_RECORD, DEFAULT_SUBSTEPS};
use crate::qcore::StateVector;
use crate::runner::{sweep, Axis, AxisKind, NoiseModel, PhaseDiagram, SweepSpec, TfPolicy};
use crate::units::mhz_to_rad_ns;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetName {
    Fig2,
    Fig3a,
    Fig3d,
    Fig4b,
    Fig4c,
    FigS6,
    Fig4aMonopoles,
    FigS3Bands,
}

impl PresetName {
    pub fn parse(s: &str) -> Option<PresetName> {
        match s {
            "fig2" => Some(PresetName::Fig2),
            "fig3a" => Some(PresetName::Fig3a),
            "fig3d" => Some(PresetName::Fig3d),
            "fig4b" => Some(PresetName::Fig4b),
            "fig4c" => Some(PresetName::Fig4c),
            "figS6" | "figs6" => Some(PresetName::FigS6),
            "fig4a_monopoles" => Some(PresetName::Fig4aMonopoles),
            "figS3_bands" | "figs3_bands" => Some(PresetName::FigS3Bands),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PresetName::Fig2 => "fig2",
            PresetName::Fig3a => "fig3a",
            PresetName::Fig3d => "fig3d",
            PresetName::Fig4b => "fig4b",
            PresetName::Fig4c => "fig4c",
            PresetName::FigS6 => "figS6",
            PresetName::Fig4aMonopoles => "fig4a_monopoles",
            PresetName::FigS3Bands => "figS3_bands",
        }
    }

    pub fn all() -> &'static [&'static str] {
        &[
            "fig2", "fig3a", "fig3d", "fig4b", "fig4c", "figS6", "fig4a_monopoles",
            "figS3_bands",
        ]
    }
}

/// Everything a preset can produce.
#[derive(Debug, Clone)]
pub enum PresetArtifact {
    Trajectory {
        traj: TrajectoryRecord,
        estimate: ChernEstimate,
    },
    Diagrams(Vec<(String, PhaseDiagram)>),
    LineScan(Fig3dScan),
    Monopoles(Vec<MonopoleReport>),
    Bands(Vec<BandPanel>),
    Adiabaticity(FigS6Study),
}

/// One point of the fig3d line scan.
#[derive(Debug, Clone)]
pub struct ScanPoint {
    pub ratio: f64,
    pub dynamical: ChernEstimate,
    pub exact_texture: Option<ChernEstimate>,
    pub adiabatic_texture: Option<ChernEstimate>,
}

#[derive(Debug, Clone)]
pub struct Fig3dScan {
    pub h_r_mhz: f64,
    pub points: Vec<ScanPoint>,
}

#[derive(Debug, Clone)]
pub struct MonopoleReport {
    pub label: &'static str,
    pub h_0_mhz: f64,
    pub g_mhz: f64,
    pub h_r_mhz: f64,
    pub loci: MonopoleSet,
    pub enclosed: usize,
}

#[derive(Debug, Clone)]
pub struct BandPanel {
    pub label: &'static str,
    pub params: HaldaneParams,
    pub path: Vec<[f64; 2]>,
    pub energies: Vec<[f64; 4]>,
}

#[derive(Debug, Clone)]
pub struct FigS6Cell {
    pub t_f: f64,
    pub h_x_mhz: f64,
    pub h_z_mhz: f64,
    pub adiabaticity: f64,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct FigS6Study {
    pub t_f_values: Vec<f64>,
    pub cells: Vec<FigS6Cell>,
}

/// The six labelled degeneracy-picture dots (desk-scale coordinates along
/// the two cut directions of the coupled-sphere phase diagram).
pub const FIG4A_DOTS: [(&str, f64, f64); 6] = [
    ("A", 4.0, 2.0),
    ("B", 8.0, 2.0),
    ("C", 16.0, 2.0),
    ("D", 2.0, 6.0),
    ("E", 2.0, 10.0),
    ("F", 2.0, 16.0),
];

/// 21 uniform values spanning the half-open interval (lo, hi].
fn open_low_axis(kind: AxisKind, lo_mhz: f64, hi_mhz: f64, count: usize) -> Result<Axis> {
    let step = (hi_mhz - lo_mhz) / count as f64;
    Axis::linspace(
        kind,
        mhz_to_rad_ns(lo_mhz + step),
        mhz_to_rad_ns(hi_mhz),
        count,
    )
}

pub fn run_preset(name: PresetName, seed: u64, workers: usize) -> Result<PresetArtifact> {
    match name {
        PresetName::Fig2 => fig2(),
        PresetName::Fig3a => Ok(PresetArtifact::Diagrams(vec![(
            "fig3a".into(),
            sweep(&fig3a_spec(seed), workers)?,
        )])),
        PresetName::Fig3d => Ok(PresetArtifact::LineScan(fig3d()?)),
        PresetName::Fig4b => {
            let mut out = Vec::new();
            for g_mhz in [0.0, 4.0] {
                let spec = fig4b_spec(seed, g_mhz)?;
                out.push((format!("fig4b_g{}", g_mhz as i64), sweep(&spec, workers)?));
            }
            Ok(PresetArtifact::Diagrams(out))
        }
        PresetName::Fig4c => Ok(PresetArtifact::Diagrams(vec![(
            "fig4c".into(),
            sweep(&fig4c_spec(seed)?, workers)?,
        )])),
        PresetName::FigS6 => Ok(PresetArtifact::Adiabaticity(fig_s6()?)),
        PresetName::Fig4aMonopoles => Ok(PresetArtifact::Monopoles(fig4a_monopoles())),
        PresetName::FigS3Bands => Ok(PresetArtifact::Bands(fig_s3_bands()?)),
    }
}

/// Single meridian ramp at H_r/2π = 10 MHz, T_f = 600 ns.
fn fig2() -> Result<PresetArtifact> {
    let h_r = mhz_to_rad_ns(10.0);
    let schedule = meridian_ramp(h_r, 0.0, 600.0)?;
    let psi0 = StateVector::all_up(1)?;
    let traj = propagate(&schedule, &psi0, DEFAULT_N_RECORD, DEFAULT_SUBSTEPS)?;
    let estimate = chern_dynamical(&traj, h_r)?;
    Ok(PresetArtifact::Trajectory { traj, estimate })
}

/// Single-qubit phase diagram: 21×21 over H_0, H_r ∈ (0.5, 20] MHz at
/// T_f = 1000 ns.
pub fn fig3a_spec(seed: u64) -> SweepSpec {
    SweepSpec {
        n_qubits: 1,
        axis1: open_low_axis(AxisKind::H0, 0.5, 20.0, 21).expect("static axis"),
        axis2: open_low_axis(AxisKind::Hr, 0.5, 20.0, 21).expect("static axis"),
        fixed_h_r: mhz_to_rad_ns(10.0),
        fixed_h_0: 0.0,
        fixed_g: 0.0,
        tf_policy: TfPolicy::Fixed(1000.0),
        n_record: DEFAULT_N_RECORD,
        substeps: DEFAULT_SUBSTEPS,
        noise: NoiseModel::Off,
        seed,
        methods: vec![
            ChernMethod::Dynamical,
            ChernMethod::Spectral,
            ChernMethod::MonopoleCount,
        ],
    }
}

/// Two-qubit diagram over (H_0, H_r) at fixed g.
pub fn fig4b_spec(seed: u64, g_mhz: f64) -> Result<SweepSpec> {
    Ok(SweepSpec {
        n_qubits: 2,
        axis1: Axis::linspace(AxisKind::H0, 0.0, mhz_to_rad_ns(30.0), 21)?,
        axis2: open_low_axis(AxisKind::Hr, 0.5, 20.0, 21)?,
        fixed_h_r: mhz_to_rad_ns(10.0),
        fixed_h_0: 0.0,
        fixed_g: mhz_to_rad_ns(g_mhz),
        tf_policy: TfPolicy::Fixed(1000.0),
        n_record: DEFAULT_N_RECORD,
        substeps: DEFAULT_SUBSTEPS,
        noise: NoiseModel::Off,
        seed,
        methods: vec![
            ChernMethod::Dynamical,
            ChernMethod::Spectral,
            ChernMethod::MonopoleCount,
        ],
    })
}

/// Two-qubit diagram over (H_0, g) at H_r/2π = 10 MHz.
pub fn fig4c_spec(seed: u64) -> Result<SweepSpec> {
    Ok(SweepSpec {
        n_qubits: 2,
        axis1: Axis::linspace(AxisKind::H0, 0.0, mhz_to_rad_ns(30.0), 21)?,
        axis2: Axis::linspace(AxisKind::G, 0.0, mhz_to_rad_ns(20.0), 21)?,
        fixed_h_r: mhz_to_rad_ns(10.0),
        fixed_h_0: 0.0,
        fixed_g: 0.0,
        tf_policy: TfPolicy::Fixed(1000.0),
        n_record: DEFAULT_N_RECORD,
        substeps: DEFAULT_SUBSTEPS,
        noise: NoiseModel::Off,
        seed,
        methods: vec![
            ChernMethod::Dynamical,
            ChernMethod::Spectral,
            ChernMethod::MonopoleCount,
        ],
    })
}

/// Line scan of H_0/H_r ∈ [0, 2] comparing the dynamical estimate with
/// exact-ground and simulated-adiabatic texture Chern numbers.
fn fig3d() -> Result<Fig3dScan> {
    let h_r_mhz = 10.0;
    let h_r = mhz_to_rad_ns(h_r_mhz);
    let psi0 = StateVector::all_up(1)?;
    let mut points = Vec::new();
    for i in 0..=20 {
        let ratio = 0.1 * i as f64;
        let h_0 = ratio * h_r;
        let schedule = meridian_ramp(h_r, h_0, 1000.0)?;
        let traj = propagate(&schedule, &psi0, DEFAULT_N_RECORD, DEFAULT_SUBSTEPS)?;
        let dynamical = chern_dynamical(&traj, h_r)?;

        let exact_texture = texture_grid(h_r, h_0, 50, 50, TexturePrep::ExactGround)
            .and_then(|g| texture_chern(&g, TextureMethod::SolidAngle))
            .ok();
        let adiabatic_texture = texture_grid(h_r, h_0, 40, 16, TexturePrep::AdiabaticSim)
            .and_then(|g| texture_chern(&g, TextureMethod::SolidAngle))
            .ok();
        points.push(ScanPoint {
            ratio,
            dynamical,
            exact_texture,
            adiabatic_texture,
        });
    }
    Ok(Fig3dScan { h_r_mhz, points })
}

/// Elliptic-ramp adiabaticity study: T_f ∈ {100..800} ns over a 10×10 grid
/// of drive amplitudes H_X, H_Z ∈ (0, 10] MHz.
fn fig_s6() -> Result<FigS6Study> {
    let t_f_values = vec![100.0, 200.0, 400.0, 600.0, 800.0];
    let psi0 = StateVector::all_up(1)?;
    let mut cells = Vec::new();
    for &t_f in &t_f_values {
        for ix in 1..=10 {
            for iz in 1..=10 {
                let h_x_mhz = ix as f64;
                let h_z_mhz = iz as f64;
                let schedule =
                    elliptic_ramp(mhz_to_rad_ns(h_x_mhz), mhz_to_rad_ns(h_z_mhz), t_f)?;
                let a = schedule.adiabaticity()?;
                let traj = propagate(&schedule, &psi0, DEFAULT_N_RECORD, DEFAULT_SUBSTEPS)?;
                let est = chern_dynamical(&traj, mhz_to_rad_ns(h_x_mhz))?;
                cells.push(FigS6Cell {
                    t_f,
                    h_x_mhz,
                    h_z_mhz,
                    adiabaticity: a,
                    value: est.value,
                });
            }
        }
    }
    Ok(FigS6Study { t_f_values, cells })
}

fn fig4a_monopoles() -> Vec<MonopoleReport> {
    let h_r_mhz = 10.0;
    FIG4A_DOTS
        .iter()
        .map(|&(label, h_0_mhz, g_mhz)| {
            let loci = degeneracy_loci(mhz_to_rad_ns(h_0_mhz), mhz_to_rad_ns(g_mhz));
            MonopoleReport {
                label,
                h_0_mhz,
                g_mhz,
                h_r_mhz,
                loci,
                enclosed: loci.enclosed(mhz_to_rad_ns(h_r_mhz)),
            }
        })
        .collect()
}

/// Band dispersions along the corner cut for the four characteristic
/// parameter sets: bare hopping, second-neighbor flux, dominant
/// hybridization, dominant Zeeman.
fn fig_s3_bands() -> Result<Vec<BandPanel>> {
    let path = corner_cut_path(201);
    let panels = [
        ("t1_only", HaldaneParams::new(1.0, 0.0, 0.0, 0.0)?),
        ("t2_flux", HaldaneParams::new(1.0, 0.15, 0.0, 0.0)?),
        ("t3_dominant", HaldaneParams::new(1.5, 0.1, -1.5, 0.0)?),
        ("hz_dominant", HaldaneParams::new(1.5, 0.1, 0.0, 1.5)?),
    ];
    panels
        .into_iter()
        .map(|(label, params)| {
            Ok(BandPanel {
                label,
                params,
                path: path.clone(),
                energies: band_dispersion(&params, &path)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_names_round_trip() {
        for s in PresetName::all() {
            let p = PresetName::parse(s).unwrap();
            assert_eq!(&p.as_str(), s);
        }
        assert!(PresetName::parse("fig9z").is_none());
    }

    #[test]
    fn fig2_preset_reproduces_the_headline_number() {
        match run_preset(PresetName::Fig2, 0, 1).unwrap() {
            PresetArtifact::Trajectory { traj, estimate } => {
                assert_eq!(traj.sample_times.len(), 50);
                assert!((estimate.value - 1.0).abs() <= 0.05);
            }
            _ => panic!("wrong artifact"),
        }
    }

    #[test]
    fn fig4a_dots_tell_the_monopole_story() {
        let reports = fig4a_monopoles();
        let expected = [2, 2, 1, 2, 1, 0];
        for (r, &e) in reports.iter().zip(expected.iter()) {
            assert_eq!(r.enclosed, e, "dot {}", r.label);
        }
        // Increasing H_0 at small g moves one locus out; increasing g at
        // small H_0 pushes both out symmetrically.
        assert!(reports[2].loci.positions[1].abs() > mhz_to_rad_ns(10.0));
        assert!(reports[5].loci.positions[0] > mhz_to_rad_ns(10.0));
        assert!(reports[5].loci.positions[1] < -mhz_to_rad_ns(10.0));
    }

    #[test]
    fn fig3a_axes_are_half_open_desk_scale() {
        let spec = fig3a_spec(0);
        let a1 = &spec.axis1.values;
        assert_eq!(a1.len(), 21);
        assert!(crate::units::rad_ns_to_mhz(a1[0]) > 0.5);
        assert!((crate::units::rad_ns_to_mhz(*a1.last().unwrap()) - 20.0).abs() < 1e-9);
    }
}

//! JSON documents with stable key order (struct field order) and
//! shortest-round-trip float printing, so equal configurations produce
//! byte-identical files and every value reads back bit-exactly.

use chernlab_core::berry::{ChernEstimate, ChernFlags};
use chernlab_core::presets::{BandPanel, Fig3dScan, FigS6Study, MonopoleReport};
use chernlab_core::propagator::TrajectoryRecord;
use chernlab_core::runner::{
    NoiseModel, PhaseDiagram, Provenance, SweepSpec, TfPolicy,
};
use chernlab_core::units::rad_ns_to_mhz;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonProvenance {
    pub seed: u64,
    pub version: String,
    pub config: String,
}

pub fn provenance_json(p: &Provenance, config_echo: &str) -> JsonProvenance {
    JsonProvenance {
        seed: p.seed,
        version: p.version.to_string(),
        config: config_echo.to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonEstimate {
    pub value: f64,
    pub rounded: Option<i64>,
    pub method: String,
    pub adiabaticity: Option<f64>,
    pub flags: Vec<String>,
}

pub fn estimate_json(e: &ChernEstimate) -> JsonEstimate {
    JsonEstimate {
        value: e.value,
        rounded: e.rounded,
        method: e.method.as_str().to_string(),
        adiabaticity: e.adiabaticity,
        flags: flag_names(&e.flags),
    }
}

pub fn flag_names(f: &ChernFlags) -> Vec<String> {
    let mut out = Vec::new();
    if f.near_boundary {
        out.push("near_boundary".to_string());
    }
    if f.degenerate_encounter {
        out.push("degenerate_encounter".to_string());
    }
    if f.low_adiabaticity {
        out.push("low_adiabaticity".to_string());
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonMethodResult {
    pub method: String,
    pub estimate: Option<JsonEstimate>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonCell {
    pub i1: usize,
    pub i2: usize,
    pub hr_mhz: f64,
    pub h0_mhz: f64,
    pub g_mhz: f64,
    pub tf_ns: f64,
    pub adiabaticity: f64,
    pub ground_start: bool,
    pub results: Vec<JsonMethodResult>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonAxis {
    pub kind: String,
    pub mhz: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonSpec {
    pub n_qubits: usize,
    pub axis1: JsonAxis,
    pub axis2: JsonAxis,
    pub fixed_hr_mhz: f64,
    pub fixed_h0_mhz: f64,
    pub fixed_g_mhz: f64,
    pub tf_policy: String,
    pub n_record: usize,
    pub substeps: usize,
    pub noise: String,
    pub seed: u64,
    pub methods: Vec<String>,
}

fn spec_json(spec: &SweepSpec) -> JsonSpec {
    let axis = |a: &chernlab_core::runner::Axis| JsonAxis {
        kind: a.kind.as_str().to_string(),
        mhz: a.values.iter().map(|&v| rad_ns_to_mhz(v)).collect(),
    };
    JsonSpec {
        n_qubits: spec.n_qubits,
        axis1: axis(&spec.axis1),
        axis2: axis(&spec.axis2),
        fixed_hr_mhz: rad_ns_to_mhz(spec.fixed_h_r),
        fixed_h0_mhz: rad_ns_to_mhz(spec.fixed_h_0),
        fixed_g_mhz: rad_ns_to_mhz(spec.fixed_g),
        tf_policy: match spec.tf_policy {
            TfPolicy::Fixed(t) => format!("fixed:{t}"),
            TfPolicy::TargetA(a) => format!("target_a:{a}"),
        },
        n_record: spec.n_record,
        substeps: spec.substeps,
        noise: match spec.noise {
            NoiseModel::Off => "off".to_string(),
            NoiseModel::Shots(n) => format!("shots:{n}"),
        },
        seed: spec.seed,
        methods: spec.methods.iter().map(|m| m.as_str().to_string()).collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonDiagram {
    pub spec: JsonSpec,
    pub grid: Vec<JsonCell>,
    pub provenance: JsonProvenance,
}

pub fn phase_diagram_json(pd: &PhaseDiagram, config_echo: &str) -> JsonDiagram {
    let grid = pd
        .cells
        .iter()
        .map(|c| JsonCell {
            i1: c.i1,
            i2: c.i2,
            hr_mhz: rad_ns_to_mhz(c.h_r),
            h0_mhz: rad_ns_to_mhz(c.h_0),
            g_mhz: rad_ns_to_mhz(c.g),
            tf_ns: c.t_f,
            adiabaticity: c.adiabaticity,
            ground_start: c.ground_start,
            results: c
                .results
                .iter()
                .map(|r| JsonMethodResult {
                    method: r.method.as_str().to_string(),
                    estimate: r.estimate.as_ref().map(estimate_json),
                    error: r.error.clone(),
                })
                .collect(),
        })
        .collect();
    JsonDiagram {
        spec: spec_json(&pd.spec),
        grid,
        provenance: provenance_json(&pd.provenance, config_echo),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonTrajectory {
    pub kind: String,
    pub n_qubits: usize,
    pub tf_ns: f64,
    pub hr_mhz: f64,
    pub h0_mhz: f64,
    pub g_mhz: f64,
    pub adiabaticity: Option<f64>,
    pub ground_start: bool,
    pub substeps_per_sample: usize,
    pub norm_drift: f64,
    pub t_ns: Vec<f64>,
    pub sy: Vec<Vec<f64>>,
    pub sx: Vec<Vec<f64>>,
    pub sz: Vec<Vec<f64>>,
    pub provenance: JsonProvenance,
}

pub fn trajectory_json(traj: &TrajectoryRecord, prov: &JsonProvenance) -> JsonTrajectory {
    JsonTrajectory {
        kind: traj.schedule.kind.as_str().to_string(),
        n_qubits: traj.schedule.n_qubits,
        tf_ns: traj.schedule.t_f,
        hr_mhz: rad_ns_to_mhz(traj.schedule.h_r),
        h0_mhz: rad_ns_to_mhz(traj.schedule.h_0),
        g_mhz: rad_ns_to_mhz(traj.schedule.g),
        adiabaticity: traj.adiabaticity,
        ground_start: traj.ground_start,
        substeps_per_sample: traj.substeps_per_sample,
        norm_drift: traj.norm_drift,
        t_ns: traj.sample_times.clone(),
        sy: traj.sy.clone(),
        sx: traj.sx.clone(),
        sz: traj.sz.clone(),
        provenance: prov.clone(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonScanPoint {
    pub ratio: f64,
    pub dynamical: JsonEstimate,
    pub texture_exact: Option<JsonEstimate>,
    pub texture_adiabatic: Option<JsonEstimate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonScan {
    pub hr_mhz: f64,
    pub points: Vec<JsonScanPoint>,
    pub provenance: JsonProvenance,
}

pub fn scan_json(scan: &Fig3dScan, prov: &JsonProvenance) -> JsonScan {
    JsonScan {
        hr_mhz: scan.h_r_mhz,
        points: scan
            .points
            .iter()
            .map(|p| JsonScanPoint {
                ratio: p.ratio,
                dynamical: estimate_json(&p.dynamical),
                texture_exact: p.exact_texture.as_ref().map(estimate_json),
                texture_adiabatic: p.adiabatic_texture.as_ref().map(estimate_json),
            })
            .collect(),
        provenance: prov.clone(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonMonopoles {
    pub reports: Vec<JsonMonopoleReport>,
    pub provenance: JsonProvenance,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonMonopoleReport {
    pub label: String,
    pub h0_mhz: f64,
    pub g_mhz: f64,
    pub hr_mhz: f64,
    pub hz_mhz: Vec<f64>,
    pub enclosed: usize,
}

pub fn monopoles_json(reports: &[MonopoleReport], prov: &JsonProvenance) -> JsonMonopoles {
    JsonMonopoles {
        reports: reports
            .iter()
            .map(|r| JsonMonopoleReport {
                label: r.label.to_string(),
                h0_mhz: r.h_0_mhz,
                g_mhz: r.g_mhz,
                hr_mhz: r.h_r_mhz,
                hz_mhz: r
                    .loci
                    .positions
                    .iter()
                    .map(|&p| rad_ns_to_mhz(p))
                    .collect(),
                enclosed: r.enclosed,
            })
            .collect(),
        provenance: prov.clone(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonStudyCell {
    pub tf_ns: f64,
    pub hx_mhz: f64,
    pub hz_mhz: f64,
    pub adiabaticity: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonStudy {
    pub tf_values: Vec<f64>,
    pub cells: Vec<JsonStudyCell>,
    pub provenance: JsonProvenance,
}

pub fn study_json(study: &FigS6Study, prov: &JsonProvenance) -> JsonStudy {
    JsonStudy {
        tf_values: study.t_f_values.clone(),
        cells: study
            .cells
            .iter()
            .map(|c| JsonStudyCell {
                tf_ns: c.t_f,
                hx_mhz: c.h_x_mhz,
                hz_mhz: c.h_z_mhz,
                adiabaticity: c.adiabaticity,
                value: c.value,
            })
            .collect(),
        provenance: prov.clone(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonBands {
    pub panels: Vec<JsonBandPanel>,
    pub provenance: JsonProvenance,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonBandPanel {
    pub label: String,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub h_z: f64,
    pub k_path: Vec<[f64; 2]>,
    pub energies: Vec<[f64; 4]>,
}

pub fn bands_json(panels: &[BandPanel], prov: &JsonProvenance) -> JsonBands {
    JsonBands {
        panels: panels
            .iter()
            .map(|p| JsonBandPanel {
                label: p.label.to_string(),
                t1: p.params.t1,
                t2: p.params.t2,
                t3: p.params.t3,
                h_z: p.params.h_z,
                k_path: p.path.clone(),
                energies: p.energies.clone(),
            })
            .collect(),
        provenance: prov.clone(),
    }
}

/// Serialize any of the documents; `serde_json` preserves struct field
/// order, so output bytes are deterministic.
pub fn to_string<T: Serialize>(doc: &T) -> serde_json::Result<String> {
    serde_json::to_string_pretty(doc)
}

/// Verify that a serialized diagram reads back with every estimate
/// bit-identical to the in-memory values.
pub fn diagram_roundtrip_ok(pd: &PhaseDiagram, text: &str) -> bool {
    let parsed: JsonDiagram = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(_) => return false,
    };
    if parsed.grid.len() != pd.cells.len() {
        return false;
    }
    for (cell, jcell) in pd.cells.iter().zip(parsed.grid.iter()) {
        for (r, jr) in cell.results.iter().zip(jcell.results.iter()) {
            match (&r.estimate, &jr.estimate) {
                (Some(e), Some(je)) => {
                    if e.value.to_bits() != je.value.to_bits()
                        || e.rounded != je.rounded
                        || e.adiabaticity.map(f64::to_bits)
                            != je.adiabaticity.map(f64::to_bits)
                    {
                        return false;
                    }
                }
                (None, None) => {}
                _ => return false,
            }
        }
    }
    true
}

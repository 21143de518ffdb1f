//! CSV table writers. All numeric fields use six significant digits and LF
//! line endings; frequencies are quoted as H/2π in MHz.

use super::{csv_field, sig6};
use chernlab_core::berry::ChernMethod;
use chernlab_core::presets::{BandPanel, Fig3dScan, FigS6Study, MonopoleReport};
use chernlab_core::propagator::TrajectoryRecord;
use chernlab_core::runner::{PhaseDiagram, SweepCell};
use chernlab_core::units::rad_ns_to_mhz;

/// Per-cell flag summary in a fixed order, `|`-separated.
pub fn cell_flags(cell: &SweepCell) -> String {
    let mut flags = Vec::new();
    if !cell.ground_start {
        flags.push("excited_start".to_string());
    }
    let mut low_a = false;
    let mut degen = false;
    let mut near = false;
    for r in &cell.results {
        if let Some(e) = &r.estimate {
            low_a |= e.flags.low_adiabaticity;
            degen |= e.flags.degenerate_encounter;
            near |= e.flags.near_boundary;
        }
        if r.error.is_some() {
            flags.push(format!("{}_error", r.method.as_str()));
        }
    }
    if low_a {
        flags.push("low_adiabaticity".to_string());
    }
    if degen {
        flags.push("degenerate_encounter".to_string());
    }
    if near {
        flags.push("near_boundary".to_string());
    }
    flags.join("|")
}

/// Phase-diagram table: one row per cell in grid order.
pub fn phase_diagram_csv(pd: &PhaseDiagram) -> String {
    let mut out = String::from("axis1,axis2,ch_dynamical,ch_spectral,ch_monopole,flags\n");
    for cell in &pd.cells {
        let axis1 = pd.spec.axis1.values[cell.i1];
        let axis2 = pd.spec.axis2.values[cell.i2];
        let value = |m: ChernMethod| -> String {
            cell.estimate(m).map(|e| sig6(e.value)).unwrap_or_default()
        };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            sig6(rad_ns_to_mhz(axis1)),
            sig6(rad_ns_to_mhz(axis2)),
            value(ChernMethod::Dynamical),
            value(ChernMethod::Spectral),
            value(ChernMethod::MonopoleCount),
            csv_field(&cell_flags(cell)),
        ));
    }
    out
}

/// Trajectory table: t_ns, then per-qubit σ^y, σ^x, σ^z columns.
pub fn trajectory_csv(traj: &TrajectoryRecord) -> String {
    let n = traj.n_qubits();
    let mut header = String::from("t_ns");
    for series in ["sy", "sx", "sz"] {
        for q in 0..n {
            header.push_str(&format!(",{series}_q{}", q + 1));
        }
    }
    let mut out = header;
    out.push('\n');
    for (k, &t) in traj.sample_times.iter().enumerate() {
        out.push_str(&sig6(t));
        for series in [&traj.sy, &traj.sx, &traj.sz] {
            for q in 0..n {
                out.push(',');
                out.push_str(&sig6(series[q][k]));
            }
        }
        out.push('\n');
    }
    out
}

/// Texture table over all three sector images.
pub fn texture_csv(points: &[chernlab_core::bzmap::TexturePoint]) -> String {
    let mut out = String::from("k_x,k_y,bx,by,bz\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            sig6(p.k[0]),
            sig6(p.k[1]),
            sig6(p.bloch.x),
            sig6(p.bloch.y),
            sig6(p.bloch.z),
        ));
    }
    out
}

pub fn scan_csv(scan: &Fig3dScan) -> String {
    let mut out = String::from("h0_over_hr,ch_dynamical,ch_texture_exact,ch_texture_adiabatic\n");
    for p in &scan.points {
        let opt = |e: &Option<chernlab_core::berry::ChernEstimate>| {
            e.as_ref().map(|e| sig6(e.value)).unwrap_or_default()
        };
        out.push_str(&format!(
            "{},{},{},{}\n",
            sig6(p.ratio),
            sig6(p.dynamical.value),
            opt(&p.exact_texture),
            opt(&p.adiabatic_texture),
        ));
    }
    out
}

pub fn adiabaticity_csv(study: &FigS6Study) -> String {
    let mut out = String::from("tf_ns,hx_mhz,hz_mhz,adiabaticity,ch_dynamical\n");
    for c in &study.cells {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            sig6(c.t_f),
            sig6(c.h_x_mhz),
            sig6(c.h_z_mhz),
            sig6(c.adiabaticity),
            sig6(c.value),
        ));
    }
    out
}

pub fn monopoles_csv(reports: &[MonopoleReport]) -> String {
    let mut out = String::from("label,h0_mhz,g_mhz,hr_mhz,hz1_mhz,hz2_mhz,enclosed\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.label,
            sig6(r.h_0_mhz),
            sig6(r.g_mhz),
            sig6(r.h_r_mhz),
            sig6(rad_ns_to_mhz(r.loci.positions[0])),
            sig6(rad_ns_to_mhz(r.loci.positions[1])),
            r.enclosed,
        ));
    }
    out
}

pub fn bands_csv(panels: &[BandPanel]) -> String {
    let mut out = String::from("panel,index,kx,ky,e0,e1,e2,e3\n");
    for panel in panels {
        for (i, (k, e)) in panel.path.iter().zip(panel.energies.iter()).enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                panel.label,
                i,
                sig6(k[0]),
                sig6(k[1]),
                sig6(e[0]),
                sig6(e[1]),
                sig6(e[2]),
                sig6(e[3]),
            ));
        }
    }
    out
}

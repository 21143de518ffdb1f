//! Self-contained SVG figures: phase-diagram heatmaps with a colorbar,
//! texture quiver plots over the hexagonal zone, and band-dispersion
//! panels. No external references; deterministic bytes.

use chernlab_core::berry::ChernMethod;
use chernlab_core::bzmap::{BrillouinZone, TexturePoint};
use chernlab_core::presets::{BandPanel, Fig3dScan, FigS6Study};
use chernlab_core::runner::PhaseDiagram;
use chernlab_core::units::rad_ns_to_mhz;
use std::fmt::Write;

/// Fixed three-stop linear colormap over Ch ∈ [0, 2]:
/// indigo (0) → green (1) → red (2).
const STOPS: [(f64, [u8; 3]); 3] = [
    (0.0, [49, 54, 149]),
    (1.0, [26, 152, 80]),
    (2.0, [165, 0, 38]),
];

pub fn chern_color(value: f64) -> String {
    let v = value.clamp(0.0, 2.0);
    let (lo, hi) = if v <= 1.0 {
        (STOPS[0], STOPS[1])
    } else {
        (STOPS[1], STOPS[2])
    };
    let t = (v - lo.0) / (hi.0 - lo.0);
    let mix = |a: u8, b: u8| (a as f64 + t * (b as f64 - a as f64)).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(lo.1[0], hi.1[0]),
        mix(lo.1[1], hi.1[1]),
        mix(lo.1[2], hi.1[2])
    )
}

/// Diverging map for ⟨σ^z⟩ ∈ [−1, 1]: blue → light gray → red.
fn bloch_z_color(z: f64) -> String {
    let v = z.clamp(-1.0, 1.0);
    let (lo, hi, t) = if v <= 0.0 {
        ([33, 102, 172], [221, 221, 221], v + 1.0)
    } else {
        ([221, 221, 221], [178, 24, 43], v)
    };
    let mix = |a: u8, b: u8| (a as f64 + t * (b as f64 - a as f64)).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(lo[0], hi[0]),
        mix(lo[1], hi[1]),
        mix(lo[2], hi[2])
    )
}

fn header(width: f64, height: f64, provenance: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" \
         width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n\
         <desc>{}</desc>\n<rect width=\"{width:.0}\" height=\"{height:.0}\" fill=\"white\"/>\n",
        xml_escape(provenance)
    )
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn text(out: &mut String, x: f64, y: f64, size: f64, anchor: &str, s: &str) {
    let _ = write!(
        out,
        "<text x=\"{x:.1}\" y=\"{y:.1}\" font-family=\"sans-serif\" font-size=\"{size:.0}\" \
         text-anchor=\"{anchor}\" fill=\"black\">{}</text>\n",
        xml_escape(s)
    );
}

fn colorbar(out: &mut String, x: f64, y: f64, w: f64, h: f64) {
    let steps = 32;
    for i in 0..steps {
        let v = 2.0 * (steps - 1 - i) as f64 / (steps - 1) as f64;
        let yy = y + h * i as f64 / steps as f64;
        let _ = write!(
            out,
            "<rect x=\"{x:.1}\" y=\"{yy:.1}\" width=\"{w:.1}\" height=\"{:.2}\" fill=\"{}\"/>\n",
            h / steps as f64 + 0.5,
            chern_color(v)
        );
    }
    let _ = write!(
        out,
        "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{w:.1}\" height=\"{h:.1}\" fill=\"none\" stroke=\"black\"/>\n"
    );
    for (v, label) in [(2.0, "2"), (1.0, "1"), (0.0, "0")] {
        let yy = y + h * (1.0 - v / 2.0);
        text(out, x + w + 4.0, yy + 4.0, 12.0, "start", label);
    }
    text(out, x + w / 2.0, y - 8.0, 12.0, "middle", "Ch");
}

/// Heatmap of one method's Chern values over the sweep grid.
pub fn phase_diagram_svg(
    pd: &PhaseDiagram,
    method: ChernMethod,
    title: &str,
    provenance: &str,
) -> String {
    let n1 = pd.spec.axis1.values.len();
    let n2 = pd.spec.axis2.values.len();
    let cell = 22.0;
    let (ml, mt, mr, mb) = (70.0, 40.0, 90.0, 55.0);
    let plot_w = cell * n1 as f64;
    let plot_h = cell * n2 as f64;
    let width = ml + plot_w + mr;
    let height = mt + plot_h + mb;
    let mut out = header(width, height, provenance);

    text(&mut out, ml + plot_w / 2.0, mt - 14.0, 14.0, "middle", title);
    for c in &pd.cells {
        let x = ml + c.i1 as f64 * cell;
        // axis2 increases upward.
        let y = mt + plot_h - (c.i2 + 1) as f64 * cell;
        let fill = match c.estimate(method) {
            Some(e) => chern_color(e.value),
            None => "#bbbbbb".to_string(),
        };
        let _ = write!(
            out,
            "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{cell:.1}\" height=\"{cell:.1}\" fill=\"{fill}\"/>\n"
        );
    }
    let _ = write!(
        out,
        "<rect x=\"{ml:.1}\" y=\"{mt:.1}\" width=\"{plot_w:.1}\" height=\"{plot_h:.1}\" fill=\"none\" stroke=\"black\"/>\n"
    );

    // Axis labels in MHz: first, middle and last tick of each axis.
    let label1 = format!("{}/2\u{3c0} (MHz)", axis_symbol(pd.spec.axis1.kind));
    let label2 = format!("{}/2\u{3c0} (MHz)", axis_symbol(pd.spec.axis2.kind));
    for (frac, idx) in [(0.0, 0), (0.5, n1 / 2), (1.0, n1 - 1)] {
        let v = rad_ns_to_mhz(pd.spec.axis1.values[idx]);
        text(
            &mut out,
            ml + plot_w * frac,
            mt + plot_h + 18.0,
            11.0,
            "middle",
            &format!("{v:.1}"),
        );
    }
    text(&mut out, ml + plot_w / 2.0, mt + plot_h + 38.0, 12.0, "middle", &label1);
    for (frac, idx) in [(0.0, 0), (0.5, n2 / 2), (1.0, n2 - 1)] {
        let v = rad_ns_to_mhz(pd.spec.axis2.values[idx]);
        text(
            &mut out,
            ml - 8.0,
            mt + plot_h - plot_h * frac + 4.0,
            11.0,
            "end",
            &format!("{v:.1}"),
        );
    }
    let _ = write!(
        out,
        "<text x=\"18\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" \
         transform=\"rotate(-90 18 {:.1})\" fill=\"black\">{}</text>\n",
        mt + plot_h / 2.0,
        mt + plot_h / 2.0,
        xml_escape(&label2)
    );

    colorbar(&mut out, ml + plot_w + 24.0, mt, 16.0, plot_h);
    out.push_str("</svg>\n");
    out
}

fn axis_symbol(kind: chernlab_core::runner::AxisKind) -> &'static str {
    match kind {
        chernlab_core::runner::AxisKind::H0 => "H\u{2080}",
        chernlab_core::runner::AxisKind::Hr => "H\u{1d63}",
        chernlab_core::runner::AxisKind::G => "g",
    }
}

/// Quiver plot of texture points over the hexagonal zone: each arrow shows
/// the in-plane Bloch components, colored by ⟨σ^z⟩.
pub fn texture_svg(
    points: &[TexturePoint],
    bz: &BrillouinZone,
    title: &str,
    provenance: &str,
) -> String {
    let size = 560.0;
    let margin = 50.0;
    let scale = (size - 2.0 * margin) / (2.2 * bz.b);
    let cx = size / 2.0;
    let cy = size / 2.0 + 10.0;
    let px = |k: [f64; 2]| (cx + scale * k[0], cy - scale * k[1]);

    let mut out = header(size, size, provenance);
    text(&mut out, size / 2.0, 28.0, 14.0, "middle", title);

    let mut hex = String::new();
    for (i, v) in bz.vertices.iter().enumerate() {
        let (x, y) = px(*v);
        let _ = write!(hex, "{}{x:.1},{y:.1}", if i == 0 { "" } else { " " });
    }
    let _ = write!(
        out,
        "<polygon points=\"{hex}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n"
    );
    for (label, k) in [("K", bz.k_corners[0]), ("K'", bz.k_prime_corners[0])] {
        let (x, y) = px(k);
        text(&mut out, x + 10.0, y, 12.0, "start", label);
    }

    // Arrow length tied to the point density.
    let arrow = scale * bz.b * 0.035;
    for p in points {
        let (x, y) = px(p.k);
        let dx = arrow * p.bloch.x;
        let dy = -arrow * p.bloch.y;
        let color = bloch_z_color(p.bloch.z);
        let _ = write!(
            out,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" stroke-width=\"1.2\"/>\n\
             <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"1.4\" fill=\"{color}\"/>\n",
            x - dx, y - dy, x + dx, y + dy, x + dx, y + dy
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Band dispersions along the corner cut, one panel per parameter set.
pub fn bands_svg(panels: &[BandPanel], provenance: &str) -> String {
    let panel_w = 230.0;
    let panel_h = 220.0;
    let margin = 42.0;
    let width = margin + panels.len() as f64 * (panel_w + 24.0);
    let height = panel_h + 90.0;
    let mut out = header(width, height, provenance);
    let colors = ["#1b6ca8", "#1a9850", "#f18f01", "#b2182b"];

    for (pi, panel) in panels.iter().enumerate() {
        let x0 = margin + pi as f64 * (panel_w + 24.0);
        let y0 = 45.0;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for e in &panel.energies {
            for &v in e {
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        let pad = 0.05 * (hi - lo).max(1e-9);
        let (lo, hi) = (lo - pad, hi + pad);
        let n = panel.energies.len();
        for band in 0..4 {
            let mut path = String::new();
            for (i, e) in panel.energies.iter().enumerate() {
                let x = x0 + panel_w * i as f64 / (n - 1) as f64;
                let y = y0 + panel_h * (1.0 - (e[band] - lo) / (hi - lo));
                let _ = write!(path, "{}{x:.1},{y:.1}", if i == 0 { "M" } else { " L" });
            }
            let _ = write!(
                out,
                "<path d=\"{path}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.3\"/>\n",
                colors[band]
            );
        }
        let _ = write!(
            out,
            "<rect x=\"{x0:.1}\" y=\"{y0:.1}\" width=\"{panel_w:.1}\" height=\"{panel_h:.1}\" \
             fill=\"none\" stroke=\"black\"/>\n"
        );
        text(&mut out, x0 + panel_w / 2.0, y0 - 10.0, 12.0, "middle", panel.label);
        text(&mut out, x0, y0 + panel_h + 16.0, 11.0, "middle", "K'");
        text(&mut out, x0 + panel_w / 2.0, y0 + panel_h + 16.0, 11.0, "middle", "\u{393}");
        text(&mut out, x0 + panel_w, y0 + panel_h + 16.0, 11.0, "middle", "K");
    }
    text(&mut out, 16.0, height / 2.0, 12.0, "middle", "E/t\u{2081}");
    out.push_str("</svg>\n");
    out
}

/// One heatmap per ramp time of an adiabaticity study.
pub fn adiabaticity_svg(study: &FigS6Study, t_f: f64, provenance: &str) -> String {
    let cells: Vec<_> = study.cells.iter().filter(|c| c.t_f == t_f).collect();
    let n = 10;
    let cell = 30.0;
    let (ml, mt) = (60.0, 45.0);
    let plot = cell * n as f64;
    let width = ml + plot + 95.0;
    let height = mt + plot + 60.0;
    let mut out = header(width, height, provenance);
    text(
        &mut out,
        ml + plot / 2.0,
        26.0,
        14.0,
        "middle",
        &format!("elliptic ramps, T_f = {t_f:.0} ns"),
    );
    for c in &cells {
        let x = ml + (c.h_z_mhz - 1.0) * cell;
        let y = mt + plot - c.h_x_mhz * cell;
        let _ = write!(
            out,
            "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{cell:.1}\" height=\"{cell:.1}\" fill=\"{}\"/>\n",
            chern_color(c.value)
        );
        // The A = 1.5 reliability contour runs along √(H_X²+H_Z²) = 2π·1.5/T_f.
    }
    let _ = write!(
        out,
        "<rect x=\"{ml:.1}\" y=\"{mt:.1}\" width=\"{plot:.1}\" height=\"{plot:.1}\" fill=\"none\" stroke=\"black\"/>\n"
    );
    text(&mut out, ml + plot / 2.0, mt + plot + 34.0, 12.0, "middle", "H_Z/2\u{3c0} (MHz)");
    let _ = write!(
        out,
        "<text x=\"20\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" \
         transform=\"rotate(-90 20 {:.1})\" fill=\"black\">H_X/2\u{3c0} (MHz)</text>\n",
        mt + plot / 2.0,
        mt + plot / 2.0
    );
    colorbar(&mut out, ml + plot + 24.0, mt, 16.0, plot);
    out.push_str("</svg>\n");
    out
}

/// Line plot of the measured Chern value against H_0/H_r for each method.
pub fn scan_svg(scan: &Fig3dScan, provenance: &str) -> String {
    let (w, h) = (480.0, 330.0);
    let (ml, mt, mr, mb) = (55.0, 40.0, 20.0, 50.0);
    let plot_w = w - ml - mr;
    let plot_h = h - mt - mb;
    let mut out = header(w, h, provenance);
    text(&mut out, w / 2.0, 24.0, 14.0, "middle", "Chern number vs H\u{2080}/H\u{1d63}");
    let x_of = |ratio: f64| ml + plot_w * ratio / 2.0;
    let y_of = |v: f64| mt + plot_h * (1.0 - (v.clamp(-0.2, 1.4) + 0.2) / 1.6);

    let series: [(&str, &str, Box<dyn Fn(&chernlab_core::presets::ScanPoint) -> Option<f64>>); 3] = [
        ("dynamical", "#b2182b", Box::new(|p| Some(p.dynamical.value))),
        (
            "texture (exact)",
            "#1a9850",
            Box::new(|p| p.exact_texture.as_ref().map(|e| e.value)),
        ),
        (
            "texture (adiabatic)",
            "#1b6ca8",
            Box::new(|p| p.adiabatic_texture.as_ref().map(|e| e.value)),
        ),
    ];
    for (si, (label, color, get)) in series.iter().enumerate() {
        let mut path = String::new();
        let mut started = false;
        for p in &scan.points {
            if let Some(v) = get(p) {
                let _ = write!(
                    path,
                    "{}{:.1},{:.1}",
                    if started { " L" } else { "M" },
                    x_of(p.ratio),
                    y_of(v)
                );
                started = true;
            }
        }
        let _ = write!(
            out,
            "<path d=\"{path}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\"/>\n"
        );
        text(&mut out, ml + 8.0, mt + 16.0 + 16.0 * si as f64, 11.0, "start", label);
        let _ = write!(
            out,
            "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"10\" height=\"3\" fill=\"{color}\"/>\n",
            ml - 6.0,
            mt + 11.0 + 16.0 * si as f64
        );
    }
    let _ = write!(
        out,
        "<rect x=\"{ml}\" y=\"{mt}\" width=\"{plot_w:.1}\" height=\"{plot_h:.1}\" fill=\"none\" stroke=\"black\"/>\n"
    );
    for v in [0.0, 1.0] {
        let y = y_of(v);
        let _ = write!(
            out,
            "<line x1=\"{ml}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n",
            ml + plot_w
        );
        text(&mut out, ml - 8.0, y + 4.0, 11.0, "end", &format!("{v:.0}"));
    }
    for r in [0.0, 0.5, 1.0, 1.5, 2.0] {
        text(&mut out, x_of(r), mt + plot_h + 18.0, 11.0, "middle", &format!("{r:.1}"));
    }
    text(&mut out, ml + plot_w / 2.0, h - 14.0, 12.0, "middle", "H\u{2080}/H\u{1d63}");
    out.push_str("</svg>\n");
    out
}

//! End-to-end shell tests: exit statuses, file schemas, round-trips.

use chernlab_cli::output::{json as js, svg, tables};
use chernlab_core::berry::ChernMethod;
use chernlab_core::runner::{sweep, Axis, AxisKind, NoiseModel, SweepSpec, TfPolicy};
use chernlab_core::units::mhz_to_rad_ns;
use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chernlab"))
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chernlab-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn tiny_diagram() -> chernlab_core::runner::PhaseDiagram {
    let spec = SweepSpec {
        n_qubits: 1,
        axis1: Axis::linspace(AxisKind::H0, 0.0, mhz_to_rad_ns(12.0), 2).unwrap(),
        axis2: Axis::linspace(AxisKind::Hr, mhz_to_rad_ns(5.0), mhz_to_rad_ns(10.0), 2).unwrap(),
        fixed_h_r: mhz_to_rad_ns(10.0),
        fixed_h_0: 0.0,
        fixed_g: 0.0,
        tf_policy: TfPolicy::Fixed(400.0),
        n_record: 25,
        substeps: 16,
        noise: NoiseModel::Off,
        seed: 5,
        methods: vec![
            ChernMethod::Dynamical,
            ChernMethod::Spectral,
            ChernMethod::MonopoleCount,
        ],
    };
    sweep(&spec, 2).unwrap()
}

#[test]
fn chern_subcommand_prints_all_three_estimates() {
    let out = bin()
        .args(["chern", "--hr", "10", "--h0", "0", "--tf", "600"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("dynamical Ch = 1.00"), "{text}");
    assert!(text.contains("spectral Ch = 1.000000"), "{text}");
    assert!(text.contains("monopole count = 1"), "{text}");
}

#[test]
fn usage_errors_exit_2_and_validation_errors_exit_1() {
    let unknown_flag = bin().args(["chern", "--frequency", "10"]).output().unwrap();
    assert_eq!(unknown_flag.status.code(), Some(2));
    let unknown_sub = bin().args(["transmogrify"]).output().unwrap();
    assert_eq!(unknown_sub.status.code(), Some(2));
    let missing_required = bin().args(["chern"]).output().unwrap();
    assert_eq!(missing_required.status.code(), Some(2));

    // Invalid physics: H_r ≤ 0 is a validation error, not a usage error.
    let bad_hr = bin().args(["chern", "--hr", "-3"]).output().unwrap();
    assert_eq!(bad_hr.status.code(), Some(1));

    let help = bin().args(["--help"]).output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("MHz"));
}

#[test]
fn monopoles_subcommand_matches_the_analytic_roots() {
    let out = bin().args(["monopoles", "--h0", "6", "--g", "4"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("2.000000, -8.000000 MHz"), "{text}");
}

#[test]
fn config_file_feeds_defaults_and_cli_overrides() {
    let dir = temp_dir("config");
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "# defaults\nhr = 10\nh0 = 6\ng = 4\n").unwrap();
    let out = bin()
        .args(["monopoles", "--config", cfg.to_str().unwrap(), "--h0", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // h0 overridden to 0, g from the file: roots at ±g.
    assert!(text.contains("4.000000, -4.000000 MHz"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn two_by_two_diagram_csv_has_exactly_five_lines() {
    let pd = tiny_diagram();
    let csv = tables::phase_diagram_csv(&pd);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(
        lines[0],
        "axis1,axis2,ch_dynamical,ch_spectral,ch_monopole,flags"
    );
    assert!(!csv.contains('\r'));
}

#[test]
fn diagram_json_round_trips_bit_exactly() {
    let pd = tiny_diagram();
    let doc = js::phase_diagram_json(&pd, "test echo");
    let text = js::to_string(&doc).unwrap();
    assert!(js::diagram_roundtrip_ok(&pd, &text));
    // Stable bytes for identical inputs.
    let again = js::to_string(&js::phase_diagram_json(&pd, "test echo")).unwrap();
    assert_eq!(text, again);
}

/// Minimal XML well-formedness scan: tag balance and quoted attributes.
fn assert_well_formed_xml(text: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut rest = text;
    while let Some(start) = rest.find('<') {
        rest = &rest[start + 1..];
        let end = rest.find('>').expect("unterminated tag");
        let tag = &rest[..end];
        rest = &rest[end + 1..];
        if tag.starts_with('?') || tag.starts_with('!') {
            continue;
        }
        if let Some(name) = tag.strip_prefix('/') {
            let open = stack.pop().unwrap_or_else(|| panic!("stray closing </{name}>"));
            assert_eq!(open, name, "mismatched tag");
        } else if !tag.ends_with('/') {
            let name: String = tag
                .split_whitespace()
                .next()
                .unwrap()
                .chars()
                .take_while(|c| c.is_alphanumeric())
                .collect();
            stack.push(name);
            // attribute values must be quoted
            let attrs = &tag[tag.split_whitespace().next().unwrap().len()..];
            assert_eq!(attrs.matches('"').count() % 2, 0, "unbalanced quotes in {tag}");
        }
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
}

#[test]
fn svg_outputs_are_well_formed_xml() {
    let pd = tiny_diagram();
    let heat = svg::phase_diagram_svg(&pd, ChernMethod::Dynamical, "test", "prov");
    assert_well_formed_xml(&heat);
    assert!(heat.contains("MHz"));
    assert!(!heat.contains("http://") || heat.contains("xmlns"), "self-contained");

    let grid = chernlab_core::bzmap::texture_grid(
        mhz_to_rad_ns(10.0),
        0.0,
        12,
        12,
        chernlab_core::bzmap::TexturePrep::ExactGround,
    )
    .unwrap();
    let bz = chernlab_core::bzmap::BrillouinZone::new(1.0).unwrap();
    let mut points = Vec::new();
    for sector in 0..3 {
        points.extend(grid.to_points(&bz, sector).unwrap());
    }
    assert_well_formed_xml(&svg::texture_svg(&points, &bz, "texture", "prov"));
}

#[test]
fn ramp_subcommand_writes_trajectory_files() {
    let dir = temp_dir("ramp");
    let out = bin()
        .args([
            "ramp", "--hr", "10", "--tf", "300", "--n-record", "20", "--substeps", "8",
            "--out", dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.join("ramp.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 21);
    assert_eq!(lines[0], "t_ns,sy_q1,sx_q1,sz_q1");
    let json = std::fs::read_to_string(dir.join("ramp.json")).unwrap();
    assert!(json.contains("\"norm_drift\""));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unwritable_output_path_exits_1() {
    let out = bin()
        .args([
            "ramp", "--hr", "10", "--tf", "200", "--n-record", "10", "--substeps", "4",
            "--out", "/proc/definitely-not-writable",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

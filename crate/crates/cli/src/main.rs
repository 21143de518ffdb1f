//! Command-line shell: builds schedules and sweeps from MHz/ns flags, runs
//! the simulation pipeline, and serializes artifacts as CSV/JSON/SVG.
//!
//! Exit status: 0 success, 1 runtime or validation failure (e.g. H_r ≤ 0,
//! unwritable output path), 2 usage error (unknown flag or subcommand).

use chernlab_cli::config;
use chernlab_cli::output;
use chernlab_core::berry::{
    chern_dynamical, chern_spectral, degeneracy_loci, monopole_count, monopole_count_single,
    ChernEstimate, ChernMethod, SphereParams, DEFAULT_SPECTRAL_NODES,
};
use chernlab_core::bzmap::{
    texture_chern, texture_chern_full_zone, texture_grid, BrillouinZone, TextureMethod,
    TexturePrep,
};
use chernlab_core::controls::{meridian_ramp, two_qubit_ramp};
use chernlab_core::haldane::{
    band_dispersion, corner_cut_path, from_qubit_params, lattice_chern, HaldaneParams,
};
use chernlab_core::presets::{run_preset, PresetArtifact, PresetName};
use chernlab_core::propagator::{propagate, DEFAULT_N_RECORD, DEFAULT_SUBSTEPS};
use chernlab_core::qcore::StateVector;
use chernlab_core::rng::CounterRng;
use chernlab_core::runner::{
    provenance, sample_observable, sweep, Axis, AxisKind, NoiseModel, PhaseDiagram, SweepSpec,
    TfPolicy,
};
use chernlab_core::units::{mhz_to_rad_ns, rad_ns_to_mhz};
use chernlab_core::SimError;
use config::{parse_cli, RunConfig, UsageError};
use output::{json as js, svg, tables, write_file};
use std::path::Path;
use std::process::ExitCode;

/// stdout writes that shrug off a closed pipe (`chernlab ... | head`), so
/// artifact writing continues even when the reader goes away.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<UsageError> for CliError {
    fn from(e: UsageError) -> Self {
        CliError::Usage(e.0)
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(format!("i/o: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Runtime(format!("json: {e}"))
    }
}

const USAGE: &str = "\
chernlab — driven-qubit Berry curvature and Chern number simulator

USAGE:
  chernlab <subcommand> [--flag value ...]

Frequencies are quoted as H/2pi in MHz; times in ns. Internally fields are
angular frequencies (rad/ns, hbar = 1); the conversion happens once at this
boundary.

SUBCOMMANDS:
  ramp           integrate one ramp and write the trajectory
                   --hr MHz (required), --h0 MHz, --g MHz, --qubits 1|2,
                   --tf ns, --n-record N, --substeps N, --shots N
  chern          all Chern estimates at one parameter point
                   --hr MHz (required), --h0, --g, --qubits, --tf
  phase-diagram  sweep a 2-D parameter grid
                   --axis1 kind:min:max:count (kind = h0|hr|g, MHz),
                   --axis2 kind:min:max:count, --qubits, --hr, --h0, --g,
                   --tf ns | --target-a A, --methods list, --shots N
  monopoles      z-axis degeneracy positions for a coupled pair
                   --h0 MHz, --g MHz, --hr MHz
  texture        ground-state texture over the zone + texture Chern numbers
                   --hr MHz (required), --h0, --ntheta, --nphi,
                   --prep exact|adiabatic, --b scale
  haldane        lattice-model bands and plaquette Chern number
                   --hr/--g/--h0 (qubit mapping) or --t1/--t2/--t3/--hz,
                   --band 0..3, --grid N
  adiabaticity   elliptic-ramp reliability study over T_f and amplitudes
  preset NAME    one of: fig2 fig3a fig3d fig4b fig4c figS6
                   fig4a_monopoles figS3_bands

COMMON FLAGS:
  --out DIR        output directory (default $CHERNLAB_OUT or ./out)
  --formats LIST   subset of csv,json,svg (default all)
  --seed N         RNG seed for shot noise (default 0)
  --workers N      sweep worker threads (default: available cores)
  --config FILE    key=value defaults (same keys as flags; CLI overrides)
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        eprint!("{USAGE}");
        return ExitCode::from(2);
    }
    if args[0] == "--help" || args[0] == "-h" || args[0] == "help" {
        print!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    match dispatch(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            eprintln!("run `chernlab --help` for the full flag list");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(args: &[String]) -> Result<(), CliError> {
    match args[0].as_str() {
        "ramp" => cmd_ramp(parse_cli(
            args,
            &["hr", "h0", "g", "qubits", "tf", "n-record", "substeps", "shots"],
        )?),
        "chern" => cmd_chern(parse_cli(
            args,
            &["hr", "h0", "g", "qubits", "tf", "n-record", "substeps"],
        )?),
        "phase-diagram" => cmd_phase_diagram(parse_cli(
            args,
            &[
                "axis1", "axis2", "qubits", "hr", "h0", "g", "tf", "target-a", "methods",
                "shots", "n-record", "substeps",
            ],
        )?),
        "monopoles" => cmd_monopoles(parse_cli(args, &["h0", "g", "hr"])?),
        "texture" => cmd_texture(parse_cli(
            args,
            &["hr", "h0", "ntheta", "nphi", "prep", "b"],
        )?),
        "haldane" => cmd_haldane(parse_cli(
            args,
            &["hr", "g", "h0", "scale", "t1", "t2", "t3", "hz", "band", "grid"],
        )?),
        "adiabaticity" => cmd_adiabaticity(parse_cli(args, &[])?),
        "preset" => cmd_preset(parse_cli(args, &[])?),
        other => Err(CliError::Usage(format!("unknown subcommand `{other}`"))),
    }
}

fn require_mhz(cfg: &RunConfig, key: &str) -> Result<f64, CliError> {
    match cfg.f64(key)? {
        Some(v) => Ok(mhz_to_rad_ns(v)),
        None => Err(CliError::Usage(format!("--{key} is required"))),
    }
}

fn estimate_line(label: &str, e: &ChernEstimate) -> String {
    let mut line = match e.method {
        ChernMethod::Dynamical => format!(
            "{label} Ch = {:.2} \u{b1} {:.2}",
            e.value,
            e.deviation().unwrap_or(f64::NAN)
        ),
        ChernMethod::Spectral => format!("{label} Ch = {:.6}", e.value),
        _ => format!("{label} = {}", e.rounded.map_or("?".into(), |r| r.to_string())),
    };
    if let Some(a) = e.adiabaticity {
        line.push_str(&format!(" (A = {a:.2})"));
    }
    let flags = js::flag_names(&e.flags);
    if !flags.is_empty() {
        line.push_str(&format!(" [{}]", flags.join("|")));
    }
    line
}

fn make_ramp(
    qubits: usize,
    h_r: f64,
    h_0: f64,
    g: f64,
    t_f: f64,
) -> Result<chernlab_core::controls::ControlSchedule, CliError> {
    Ok(match qubits {
        1 => meridian_ramp(h_r, h_0, t_f)?,
        2 => two_qubit_ramp(h_r, h_0, g, t_f)?,
        n => return Err(CliError::Usage(format!("--qubits must be 1 or 2, got {n}"))),
    })
}

fn cmd_ramp(cfg: RunConfig) -> Result<(), CliError> {
    let qubits = cfg.usize_or("qubits", 1)?;
    let h_r = require_mhz(&cfg, "hr")?;
    let h_0 = mhz_to_rad_ns(cfg.f64_or("h0", 0.0)?);
    let g = mhz_to_rad_ns(cfg.f64_or("g", 0.0)?);
    let t_f = cfg.f64_or("tf", 1000.0)?;
    let n_record = cfg.usize_or("n-record", DEFAULT_N_RECORD)?;
    let substeps = cfg.usize_or("substeps", DEFAULT_SUBSTEPS)?;
    let schedule = make_ramp(qubits, h_r, h_0, g, t_f)?;
    let psi0 = StateVector::all_up(qubits)?;
    let mut traj = propagate(&schedule, &psi0, n_record, substeps)?;
    if let Some(shots) = cfg.get("shots") {
        let shots: u32 = shots
            .parse()
            .map_err(|_| UsageError(format!("--shots: expected an integer, got {shots:?}")))?;
        let mut rng = CounterRng::new(cfg.seed()?, 0);
        for series in traj.sy.iter_mut() {
            for v in series.iter_mut() {
                *v = sample_observable(*v, shots, &mut rng)?;
            }
        }
    }
    let est = chern_dynamical(&traj, h_r)?;
    say!("{}", estimate_line("dynamical", &est));
    if !traj.ground_start {
        say!("note: |\u{2191}...\u{2191}\u{27e9} is not the ground state at t = 0 (excited_start)");
    }

    let formats = cfg.formats()?;
    let dir = cfg.out_dir();
    let prov = js::provenance_json(&provenance(cfg.seed()?), &cfg.echo());
    if formats.csv {
        let p = write_file(Path::new(&dir), "ramp.csv", &tables::trajectory_csv(&traj))?;
        say!("wrote {}", p.display());
    }
    if formats.json {
        let doc = js::trajectory_json(&traj, &prov);
        let p = write_file(Path::new(&dir), "ramp.json", &(js::to_string(&doc)? + "\n"))?;
        say!("wrote {}", p.display());
    }
    Ok(())
}

fn cmd_chern(cfg: RunConfig) -> Result<(), CliError> {
    let qubits = cfg.usize_or("qubits", 1)?;
    let h_r = require_mhz(&cfg, "hr")?;
    let h_0 = mhz_to_rad_ns(cfg.f64_or("h0", 0.0)?);
    let g = mhz_to_rad_ns(cfg.f64_or("g", 0.0)?);
    let t_f = cfg.f64_or("tf", 1000.0)?;
    let n_record = cfg.usize_or("n-record", DEFAULT_N_RECORD)?;
    let substeps = cfg.usize_or("substeps", DEFAULT_SUBSTEPS)?;

    let schedule = make_ramp(qubits, h_r, h_0, g, t_f)?;
    let psi0 = StateVector::all_up(qubits)?;
    let traj = propagate(&schedule, &psi0, n_record, substeps)?;
    say!("{}", estimate_line("dynamical", &chern_dynamical(&traj, h_r)?));
    if !traj.ground_start {
        say!("note: excited start; the ramp tracks a non-ground band");
    }

    let params = if qubits == 1 {
        SphereParams::single(h_r, h_0)
    } else {
        SphereParams::two(h_r, h_0, g)
    };
    say!(
        "{}",
        estimate_line("spectral", &chern_spectral(&params, DEFAULT_SPECTRAL_NODES)?)
    );
    let mono = if qubits == 1 {
        monopole_count_single(h_0, h_r)?
    } else {
        monopole_count(h_0, g, h_r)?
    };
    say!("{}", estimate_line("monopole count", &mono));
    if qubits == 2 {
        match from_qubit_params(h_r, g, h_0, 1.0).and_then(|p| lattice_chern(&p, 0, 48)) {
            Ok(ch) => say!("lattice Ch = {ch}"),
            Err(e) => say!("lattice Ch unavailable: {e}"),
        }
    }
    Ok(())
}

fn parse_axis(spec: &str) -> Result<Axis, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "axis spec {spec:?} should be kind:min:max:count (MHz)"
        )));
    }
    let kind = match parts[0] {
        "h0" => AxisKind::H0,
        "hr" => AxisKind::Hr,
        "g" => AxisKind::G,
        other => return Err(CliError::Usage(format!("unknown axis kind {other:?}"))),
    };
    let min: f64 = parts[1]
        .parse()
        .map_err(|_| UsageError(format!("axis min {:?}", parts[1])))?;
    let max: f64 = parts[2]
        .parse()
        .map_err(|_| UsageError(format!("axis max {:?}", parts[2])))?;
    let count: usize = parts[3]
        .parse()
        .map_err(|_| UsageError(format!("axis count {:?}", parts[3])))?;
    Ok(Axis::linspace(kind, mhz_to_rad_ns(min), mhz_to_rad_ns(max), count)?)
}

fn parse_methods(list: Option<&str>) -> Result<Vec<ChernMethod>, CliError> {
    let Some(list) = list else {
        return Ok(vec![
            ChernMethod::Dynamical,
            ChernMethod::Spectral,
            ChernMethod::MonopoleCount,
        ]);
    };
    let mut out = Vec::new();
    for part in list.split(',') {
        out.push(match part.trim() {
            "dynamical" => ChernMethod::Dynamical,
            "spectral" => ChernMethod::Spectral,
            "monopole" | "monopole_count" => ChernMethod::MonopoleCount,
            "lattice" => ChernMethod::Lattice,
            other => return Err(CliError::Usage(format!("unknown method {other:?}"))),
        });
    }
    Ok(out)
}

fn write_diagram(pd: &PhaseDiagram, name: &str, cfg: &RunConfig) -> Result<(), CliError> {
    let formats = cfg.formats()?;
    let dir = cfg.out_dir();
    let prov = js::provenance_json(&pd.provenance, &cfg.echo());
    if formats.csv {
        let p = write_file(
            Path::new(&dir),
            &format!("{name}.csv"),
            &tables::phase_diagram_csv(pd),
        )?;
        say!("wrote {}", p.display());
    }
    if formats.json {
        let doc = js::phase_diagram_json(pd, &prov.config);
        let p = write_file(
            Path::new(&dir),
            &format!("{name}.json"),
            &(js::to_string(&doc)? + "\n"),
        )?;
        say!("wrote {}", p.display());
    }
    if formats.svg {
        let method = pd.spec.methods.first().copied().unwrap_or(ChernMethod::Dynamical);
        let title = format!("{name} ({})", method.as_str());
        let p = write_file(
            Path::new(&dir),
            &format!("{name}.svg"),
            &svg::phase_diagram_svg(pd, method, &title, &prov.config),
        )?;
        say!("wrote {}", p.display());
    }
    Ok(())
}

fn cmd_phase_diagram(cfg: RunConfig) -> Result<(), CliError> {
    let axis1 = parse_axis(
        cfg.get("axis1")
            .ok_or_else(|| UsageError("--axis1 is required".into()))?,
    )?;
    let axis2 = parse_axis(
        cfg.get("axis2")
            .ok_or_else(|| UsageError("--axis2 is required".into()))?,
    )?;
    let qubits = cfg.usize_or("qubits", 1)?;
    let tf_policy = match (cfg.f64("tf")?, cfg.f64("target-a")?) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("--tf and --target-a are exclusive".into()));
        }
        (None, Some(a)) => TfPolicy::TargetA(a),
        (tf, None) => TfPolicy::Fixed(tf.unwrap_or(1000.0)),
    };
    let noise = match cfg.get("shots") {
        None => NoiseModel::Off,
        Some(s) => NoiseModel::Shots(s.parse().map_err(|_| {
            UsageError(format!("--shots: expected an integer, got {s:?}"))
        })?),
    };
    let spec = SweepSpec {
        n_qubits: qubits,
        axis1,
        axis2,
        fixed_h_r: mhz_to_rad_ns(cfg.f64_or("hr", 10.0)?),
        fixed_h_0: mhz_to_rad_ns(cfg.f64_or("h0", 0.0)?),
        fixed_g: mhz_to_rad_ns(cfg.f64_or("g", 0.0)?),
        tf_policy,
        n_record: cfg.usize_or("n-record", DEFAULT_N_RECORD)?,
        substeps: cfg.usize_or("substeps", DEFAULT_SUBSTEPS)?,
        noise,
        seed: cfg.seed()?,
        methods: parse_methods(cfg.get("methods"))?,
    };
    let pd = sweep(&spec, cfg.workers()?)?;
    say!(
        "swept {} cells ({} methods)",
        pd.cells.len(),
        spec.methods.len()
    );
    write_diagram(&pd, "phase_diagram", &cfg)
}

fn cmd_monopoles(cfg: RunConfig) -> Result<(), CliError> {
    let h_0 = mhz_to_rad_ns(cfg.f64_or("h0", 0.0)?);
    let g = mhz_to_rad_ns(cfg.f64_or("g", 0.0)?);
    let h_r_mhz = cfg.f64_or("hr", 10.0)?;
    let set = degeneracy_loci(h_0, g);
    say!(
        "H_z/2\u{3c0} = {:.6}, {:.6} MHz",
        rad_ns_to_mhz(set.positions[0]),
        rad_ns_to_mhz(set.positions[1])
    );
    say!(
        "enclosed by the H_r/2\u{3c0} = {h_r_mhz} MHz sphere: {}",
        set.enclosed(mhz_to_rad_ns(h_r_mhz))
    );
    Ok(())
}

fn cmd_texture(cfg: RunConfig) -> Result<(), CliError> {
    let h_r = require_mhz(&cfg, "hr")?;
    let h_0 = mhz_to_rad_ns(cfg.f64_or("h0", 0.0)?);
    let n_theta = cfg.usize_or("ntheta", 50)?;
    let n_phi = cfg.usize_or("nphi", 50)?;
    let prep = match cfg.get("prep").unwrap_or("exact") {
        "exact" => TexturePrep::ExactGround,
        "adiabatic" => TexturePrep::AdiabaticSim,
        other => {
            return Err(CliError::Usage(format!(
                "--prep must be exact|adiabatic, got {other:?}"
            )));
        }
    };
    let grid = texture_grid(h_r, h_0, n_theta, n_phi, prep)?;
    let solid = texture_chern(&grid, TextureMethod::SolidAngle)?;
    let planar = texture_chern(&grid, TextureMethod::PlanarMapped)?;
    say!("texture Ch (solid angle) = {:.4}", solid.value);
    say!("texture Ch (planar, per sector) = {:.4}", planar.value);
    say!(
        "texture Ch (planar, full zone) = {:.4}",
        texture_chern_full_zone(&grid)?
    );
    if grid.excluded > 0 {
        say!("excluded {} degenerate/low-fidelity grid points", grid.excluded);
    }

    let bz = BrillouinZone::new(cfg.f64_or("b", 1.0)?)?;
    let mut points = Vec::new();
    for sector in 0..chernlab_core::bzmap::SECTOR_COUNT {
        points.extend(grid.to_points(&bz, sector)?);
    }
    let formats = cfg.formats()?;
    let dir = cfg.out_dir();
    if formats.csv {
        let p = write_file(Path::new(&dir), "texture.csv", &tables::texture_csv(&points))?;
        say!("wrote {}", p.display());
    }
    if formats.svg {
        let title = format!(
            "spin texture, H\u{2080}/H\u{1d63} = {:.2}",
            rad_ns_to_mhz(h_0) / rad_ns_to_mhz(h_r)
        );
        let p = write_file(
            Path::new(&dir),
            "texture.svg",
            &svg::texture_svg(&points, &bz, &title, &cfg.echo()),
        )?;
        say!("wrote {}", p.display());
    }
    Ok(())
}

fn cmd_haldane(cfg: RunConfig) -> Result<(), CliError> {
    let direct = ["t1", "t2", "t3", "hz"].iter().any(|k| cfg.get(k).is_some());
    let params = if direct {
        HaldaneParams::new(
            cfg.f64_or("t1", 1.0)?,
            cfg.f64_or("t2", 0.0)?,
            cfg.f64_or("t3", 0.0)?,
            cfg.f64_or("hz", 0.0)?,
        )?
    } else {
        let h_r = require_mhz(&cfg, "hr")?;
        let g = mhz_to_rad_ns(cfg.f64_or("g", 0.0)?);
        let h_0 = mhz_to_rad_ns(cfg.f64_or("h0", 0.0)?);
        from_qubit_params(h_r, g, h_0, cfg.f64_or("scale", 1.0)?)?
    };
    let band = cfg.usize_or("band", 0)?;
    let grid = cfg.usize_or("grid", 48)?;
    say!(
        "params: t1 = {:.6}, t2 = {:.6}, t3 = {:.6}, h_z = {:.6}",
        params.t1, params.t2, params.t3, params.h_z
    );
    match lattice_chern(&params, band, grid) {
        Ok(ch) => say!("lattice Ch (band {band}, {grid}\u{d7}{grid} grid) = {ch}"),
        Err(e) => say!("lattice Ch undefined: {e}"),
    }

    let path = corner_cut_path(201);
    let energies = band_dispersion(&params, &path)?;
    let panel = chernlab_core::presets::BandPanel {
        label: "bands",
        params,
        path,
        energies,
    };
    let formats = cfg.formats()?;
    let dir = cfg.out_dir();
    if formats.csv {
        let p = write_file(
            Path::new(&dir),
            "haldane_bands.csv",
            &tables::bands_csv(std::slice::from_ref(&panel)),
        )?;
        say!("wrote {}", p.display());
    }
    if formats.svg {
        let p = write_file(
            Path::new(&dir),
            "haldane_bands.svg",
            &svg::bands_svg(std::slice::from_ref(&panel), &cfg.echo()),
        )?;
        say!("wrote {}", p.display());
    }
    Ok(())
}

fn cmd_adiabaticity(cfg: RunConfig) -> Result<(), CliError> {
    let artifact = run_preset(PresetName::FigS6, cfg.seed()?, cfg.workers()?)?;
    let PresetArtifact::Adiabaticity(study) = artifact else {
        unreachable!("figS6 produces an adiabaticity study");
    };
    summarize_study(&study);
    write_study(&study, &cfg)
}

fn summarize_study(study: &chernlab_core::presets::FigS6Study) {
    for &t_f in &study.t_f_values {
        let cells: Vec<_> = study.cells.iter().filter(|c| c.t_f == t_f).collect();
        let mean: f64 =
            cells.iter().map(|c| (c.value - 1.0).abs()).sum::<f64>() / cells.len() as f64;
        let reliable: Vec<_> = cells.iter().filter(|c| c.adiabaticity > 1.5).collect();
        let good = reliable
            .iter()
            .filter(|c| (c.value - 1.0).abs() < 0.15)
            .count();
        say!(
            "T_f = {t_f:>4.0} ns: mean |Ch-1| = {mean:.3}; A>1.5 cells within 0.15: {good}/{}",
            reliable.len()
        );
    }
}

fn write_study(
    study: &chernlab_core::presets::FigS6Study,
    cfg: &RunConfig,
) -> Result<(), CliError> {
    let formats = cfg.formats()?;
    let dir = cfg.out_dir();
    let prov = js::provenance_json(&provenance(cfg.seed()?), &cfg.echo());
    if formats.csv {
        let p = write_file(Path::new(&dir), "figS6.csv", &tables::adiabaticity_csv(study))?;
        say!("wrote {}", p.display());
    }
    if formats.json {
        let doc = js::study_json(study, &prov);
        let p = write_file(Path::new(&dir), "figS6.json", &(js::to_string(&doc)? + "\n"))?;
        say!("wrote {}", p.display());
    }
    if formats.svg {
        for &t_f in &study.t_f_values {
            let name = format!("figS6_tf{:.0}.svg", t_f);
            let p = write_file(
                Path::new(&dir),
                &name,
                &svg::adiabaticity_svg(study, t_f, &prov.config),
            )?;
            say!("wrote {}", p.display());
        }
    }
    Ok(())
}

fn cmd_preset(cfg: RunConfig) -> Result<(), CliError> {
    let name = cfg
        .positional
        .first()
        .ok_or_else(|| UsageError("preset requires a name".into()))?;
    let preset = PresetName::parse(name).ok_or_else(|| {
        UsageError(format!(
            "unknown preset {name:?}; available: {}",
            PresetName::all().join(", ")
        ))
    })?;
    let seed = cfg.seed()?;
    let artifact = run_preset(preset, seed, cfg.workers()?)?;
    let formats = cfg.formats()?;
    let dir = cfg.out_dir();
    let prov = js::provenance_json(&provenance(seed), &cfg.echo());

    match artifact {
        PresetArtifact::Trajectory { traj, estimate } => {
            say!("{}", estimate_line("dynamical", &estimate));
            if formats.csv {
                let p = write_file(Path::new(&dir), "fig2.csv", &tables::trajectory_csv(&traj))?;
                say!("wrote {}", p.display());
            }
            if formats.json {
                let doc = js::trajectory_json(&traj, &prov);
                let p =
                    write_file(Path::new(&dir), "fig2.json", &(js::to_string(&doc)? + "\n"))?;
                say!("wrote {}", p.display());
            }
        }
        PresetArtifact::Diagrams(diagrams) => {
            for (name, pd) in &diagrams {
                say!("{name}: {} cells", pd.cells.len());
                write_diagram(pd, name, &cfg)?;
            }
        }
        PresetArtifact::LineScan(scan) => {
            for p in &scan.points {
                let tex = p
                    .exact_texture
                    .as_ref()
                    .map(|e| format!("{:.3}", e.value))
                    .unwrap_or_else(|| "-".into());
                say!(
                    "H0/Hr = {:.1}: dynamical {:.3}, texture {}",
                    p.ratio, p.dynamical.value, tex
                );
            }
            if formats.csv {
                let p = write_file(Path::new(&dir), "fig3d.csv", &tables::scan_csv(&scan))?;
                say!("wrote {}", p.display());
            }
            if formats.json {
                let doc = js::scan_json(&scan, &prov);
                let p =
                    write_file(Path::new(&dir), "fig3d.json", &(js::to_string(&doc)? + "\n"))?;
                say!("wrote {}", p.display());
            }
            if formats.svg {
                let p = write_file(
                    Path::new(&dir),
                    "fig3d.svg",
                    &svg::scan_svg(&scan, &prov.config),
                )?;
                say!("wrote {}", p.display());
            }
        }
        PresetArtifact::Monopoles(reports) => {
            for r in &reports {
                say!(
                    "{}: H_z/2\u{3c0} = {:.3}, {:.3} MHz; enclosed = {}",
                    r.label,
                    rad_ns_to_mhz(r.loci.positions[0]),
                    rad_ns_to_mhz(r.loci.positions[1]),
                    r.enclosed
                );
            }
            if formats.csv {
                let p = write_file(
                    Path::new(&dir),
                    "fig4a_monopoles.csv",
                    &tables::monopoles_csv(&reports),
                )?;
                say!("wrote {}", p.display());
            }
            if formats.json {
                let doc = js::monopoles_json(&reports, &prov);
                let p = write_file(
                    Path::new(&dir),
                    "fig4a_monopoles.json",
                    &(js::to_string(&doc)? + "\n"),
                )?;
                say!("wrote {}", p.display());
            }
        }
        PresetArtifact::Bands(panels) => {
            if formats.csv {
                let p =
                    write_file(Path::new(&dir), "figS3_bands.csv", &tables::bands_csv(&panels))?;
                say!("wrote {}", p.display());
            }
            if formats.json {
                let doc = js::bands_json(&panels, &prov);
                let p = write_file(
                    Path::new(&dir),
                    "figS3_bands.json",
                    &(js::to_string(&doc)? + "\n"),
                )?;
                say!("wrote {}", p.display());
            }
            if formats.svg {
                let p = write_file(
                    Path::new(&dir),
                    "figS3_bands.svg",
                    &svg::bands_svg(&panels, &prov.config),
                )?;
                say!("wrote {}", p.display());
            }
        }
        PresetArtifact::Adiabaticity(study) => {
            summarize_study(&study);
            write_study(&study, &cfg)?;
        }
    }
    Ok(())
}

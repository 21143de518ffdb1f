//! Parameter sweeps over grids of control parameters, with optional
//! projective-measurement shot noise and deterministic parallel execution.
//!
//! Every grid cell is an independent pure task; its random stream is
//! derived from (seed, cell index) with a counter-based generator, so the
//! assembled diagram is byte-identical for a fixed seed no matter how many
//! worker threads run the pool. Per-cell failures (degeneracies on the
//! manifold, gapless lattice points) are recorded in the cell rather than
//! aborting the sweep.

use crate::berry::{
    chern_dynamical, chern_spectral, monopole_count, monopole_count_single, ChernEstimate,
    ChernMethod, SphereParams, DEFAULT_SPECTRAL_NODES,
};
use crate::controls::{meridian_ramp, two_qubit_ramp, ControlSchedule};
use crate::error::{Result, SimError};
use crate::haldane::{from_qubit_params, lattice_chern, DEFAULT_CHERN_GRID};
use crate::propagator::{propagate, TrajectoryRecord};
use crate::qcore::StateVector;
use crate::rng::CounterRng;
use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Which physical parameter an axis sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisKind {
    H0,
    Hr,
    G,
}

impl AxisKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AxisKind::H0 => "h0",
            AxisKind::Hr => "hr",
            AxisKind::G => "g",
        }
    }
}

/// A sweep axis: uniformly spaced values in rad/ns.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub kind: AxisKind,
    pub values: Vec<f64>,
}

impl Axis {
    pub fn linspace(kind: AxisKind, min: f64, max: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(SimError::InvalidArgument(format!(
                "axis needs at least 2 points, got {count}"
            )));
        }
        if !min.is_finite() || !max.is_finite() || max <= min {
            return Err(SimError::InvalidArgument(format!(
                "bad axis range [{min}, {max}]"
            )));
        }
        let values = (0..count)
            .map(|i| min + (max - min) * i as f64 / (count - 1) as f64)
            .collect();
        Ok(Axis { kind, values })
    }
}

/// How each cell's ramp time is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TfPolicy {
    /// Fixed ramp time in ns.
    Fixed(f64),
    /// Per-cell T_f = 2π·A/H_r so slow-field cells stay adiabatic.
    TargetA(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseModel {
    Off,
    /// Every recorded expectation is replaced by the mean of N projective
    /// ±1 samples.
    Shots(u32),
}

pub const DEFAULT_SHOTS: u32 = 300;

/// Full description of a sweep; all magnitudes in rad/ns.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n_qubits: usize,
    pub axis1: Axis,
    pub axis2: Axis,
    /// Defaults for the parameters not carried by an axis.
    pub fixed_h_r: f64,
    pub fixed_h_0: f64,
    pub fixed_g: f64,
    pub tf_policy: TfPolicy,
    pub n_record: usize,
    pub substeps: usize,
    pub noise: NoiseModel,
    pub seed: u64,
    pub methods: Vec<ChernMethod>,
}

impl SweepSpec {
    fn validate(&self) -> Result<()> {
        if self.n_qubits != 1 && self.n_qubits != 2 {
            return Err(SimError::InvalidArgument(format!(
                "n_qubits must be 1 or 2, got {}",
                self.n_qubits
            )));
        }
        if self.axis1.kind == self.axis2.kind {
            return Err(SimError::InvalidArgument(
                "the two sweep axes must differ".into(),
            ));
        }
        if let NoiseModel::Shots(n) = self.noise {
            if n < 1 {
                return Err(SimError::InvalidArgument("shots must be ≥ 1".into()));
            }
        }
        if self.methods.is_empty() {
            return Err(SimError::InvalidArgument(
                "at least one estimation method is required".into(),
            ));
        }
        Ok(())
    }

    fn params_at(&self, i1: usize, i2: usize) -> (f64, f64, f64) {
        let mut h_r = self.fixed_h_r;
        let mut h_0 = self.fixed_h_0;
        let mut g = self.fixed_g;
        for (axis, idx) in [(&self.axis1, i1), (&self.axis2, i2)] {
            let v = axis.values[idx];
            match axis.kind {
                AxisKind::H0 => h_0 = v,
                AxisKind::Hr => h_r = v,
                AxisKind::G => g = v,
            }
        }
        (h_r, h_0, g)
    }
}

/// One method's outcome on one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodResult {
    pub method: ChernMethod,
    pub estimate: Option<ChernEstimate>,
    pub error: Option<String>,
}

/// One evaluated grid cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub i1: usize,
    pub i2: usize,
    pub h_r: f64,
    pub h_0: f64,
    pub g: f64,
    pub t_f: f64,
    pub adiabaticity: f64,
    /// False when |↑…↑⟩ is not the ground state of 𝓗(0) for this cell, in
    /// which case the dynamical ramp tracks an excited band.
    pub ground_start: bool,
    pub results: Vec<MethodResult>,
}

impl SweepCell {
    pub fn estimate(&self, method: ChernMethod) -> Option<&ChernEstimate> {
        self.results
            .iter()
            .find(|r| r.method == method)
            .and_then(|r| r.estimate.as_ref())
    }
}

/// Provenance stamp embedded in every serialized artifact.
#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub seed: u64,
    pub version: &'static str,
}

pub fn provenance(seed: u64) -> Provenance {
    Provenance {
        seed,
        version: env!("CARGO_PKG_VERSION"),
    }
}

/// A fully populated 2-D grid of Chern estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDiagram {
    pub spec: SweepSpec,
    /// Row-major: `cells[i1 * axis2.len() + i2]`.
    pub cells: Vec<SweepCell>,
    pub provenance: Provenance,
}

impl PhaseDiagram {
    pub fn cell(&self, i1: usize, i2: usize) -> &SweepCell {
        &self.cells[i1 * self.spec.axis2.values.len() + i2]
    }
}

/// Mean of `n` projective ±1 measurements with P(+1) = (1 + p)/2.
pub fn sample_observable(p_true: f64, n: u32, rng: &mut CounterRng) -> Result<f64> {
    if !(-1.0 - 1e-9..=1.0 + 1e-9).contains(&p_true) {
        return Err(SimError::InvalidArgument(format!(
            "expectation {p_true} outside [-1, 1]"
        )));
    }
    if n < 1 {
        return Err(SimError::InvalidArgument("need at least one shot".into()));
    }
    let p_up = 0.5 * (1.0 + p_true.clamp(-1.0, 1.0));
    let mut sum = 0i64;
    for _ in 0..n {
        sum += if rng.next_f64() < p_up { 1 } else { -1 };
    }
    Ok(sum as f64 / n as f64)
}

/// Replace every recorded ⟨σ^y⟩ sample by a sampled mean (the estimator
/// consumes only the σ^y series).
fn apply_shot_noise(traj: &mut TrajectoryRecord, shots: u32, rng: &mut CounterRng) -> Result<()> {
    for series in traj.sy.iter_mut() {
        for v in series.iter_mut() {
            *v = sample_observable(*v, shots, rng)?;
        }
    }
    Ok(())
}

fn ramp_for(spec: &SweepSpec, h_r: f64, h_0: f64, g: f64, t_f: f64) -> Result<ControlSchedule> {
    if spec.n_qubits == 1 {
        meridian_ramp(h_r, h_0, t_f)
    } else {
        two_qubit_ramp(h_r, h_0, g, t_f)
    }
}

fn compute_cell(spec: &SweepSpec, i1: usize, i2: usize, cell_index: u64) -> SweepCell {
    let (h_r, h_0, g) = spec.params_at(i1, i2);
    let t_f = match spec.tf_policy {
        TfPolicy::Fixed(t) => t,
        TfPolicy::TargetA(a) => 2.0 * PI * a / h_r.max(1e-12),
    };
    let adiabaticity = t_f * h_r / (2.0 * PI);
    let mut ground_start = true;
    let mut results = Vec::with_capacity(spec.methods.len());

    // The propagated trajectory is shared by the dynamical estimate.
    let mut trajectory: Option<TrajectoryRecord> = None;
    if spec.methods.contains(&ChernMethod::Dynamical) {
        trajectory = (|| -> Result<TrajectoryRecord> {
            let schedule = ramp_for(spec, h_r, h_0, g, t_f)?;
            let psi0 = StateVector::all_up(spec.n_qubits)?;
            let mut traj = propagate(&schedule, &psi0, spec.n_record, spec.substeps)?;
            if let NoiseModel::Shots(n) = spec.noise {
                let mut rng = CounterRng::new(spec.seed, cell_index);
                apply_shot_noise(&mut traj, n, &mut rng)?;
            }
            Ok(traj)
        })()
        .ok();
    }
    if let Some(t) = &trajectory {
        ground_start = t.ground_start;
    }

    for &method in &spec.methods {
        let outcome: Result<ChernEstimate> = match method {
            ChernMethod::Dynamical => match &trajectory {
                Some(traj) => chern_dynamical(traj, h_r),
                None => Err(SimError::DegenerateManifold { h_r }),
            },
            ChernMethod::Spectral => {
                let params = if spec.n_qubits == 1 {
                    SphereParams::single(h_r, h_0)
                } else {
                    SphereParams::two(h_r, h_0, g)
                };
                chern_spectral(&params, DEFAULT_SPECTRAL_NODES)
            }
            ChernMethod::MonopoleCount => {
                if spec.n_qubits == 1 {
                    monopole_count_single(h_0, h_r)
                } else {
                    monopole_count(h_0, g, h_r)
                }
            }
            ChernMethod::Lattice => from_qubit_params(h_r, g, h_0, 1.0)
                .and_then(|p| lattice_chern(&p, 0, DEFAULT_CHERN_GRID))
                .map(|ch| ChernEstimate {
                    value: ch as f64,
                    rounded: Some(ch),
                    method: ChernMethod::Lattice,
                    adiabaticity: None,
                    flags: Default::default(),
                }),
            ChernMethod::Texture => Err(SimError::Unsupported(
                "texture estimates run through the bzmap module, not sweeps".into(),
            )),
        };
        results.push(match outcome {
            Ok(e) => MethodResult {
                method,
                estimate: Some(e),
                error: None,
            },
            Err(e) => MethodResult {
                method,
                estimate: None,
                error: Some(e.to_string()),
            },
        });
    }

    SweepCell {
        i1,
        i2,
        h_r,
        h_0,
        g,
        t_f,
        adiabaticity,
        ground_start,
        results,
    }
}

/// Evaluate every grid cell, farming cells out to `workers` threads.
/// Deterministic for a fixed seed regardless of the worker count.
pub fn sweep(spec: &SweepSpec, workers: usize) -> Result<PhaseDiagram> {
    spec.validate()?;
    let n1 = spec.axis1.values.len();
    let n2 = spec.axis2.values.len();
    let total = n1 * n2;
    let slots: Mutex<Vec<Option<SweepCell>>> = Mutex::new(vec![None; total]);
    let next = AtomicUsize::new(0);
    let workers = workers.max(1);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= total {
                    break;
                }
                let (i1, i2) = (idx / n2, idx % n2);
                let cell = compute_cell(spec, i1, i2, idx as u64);
                slots.lock().unwrap()[idx] = Some(cell);
            });
        }
    });

    let cells: Vec<SweepCell> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|c| c.expect("every cell computed"))
        .collect();
    Ok(PhaseDiagram {
        spec: spec.clone(),
        cells,
        provenance: provenance(spec.seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagator::DEFAULT_N_RECORD;
    use crate::units::mhz_to_rad_ns;

    fn small_spec(noise: NoiseModel, methods: Vec<ChernMethod>) -> SweepSpec {
        SweepSpec {
            n_qubits: 1,
            axis1: Axis::linspace(AxisKind::H0, 0.0, mhz_to_rad_ns(15.0), 4).unwrap(),
            axis2: Axis::linspace(AxisKind::Hr, mhz_to_rad_ns(4.0), mhz_to_rad_ns(12.0), 3)
                .unwrap(),
            fixed_h_r: mhz_to_rad_ns(10.0),
            fixed_h_0: 0.0,
            fixed_g: 0.0,
            tf_policy: TfPolicy::Fixed(400.0),
            n_record: DEFAULT_N_RECORD,
            substeps: 16,
            noise,
            seed: 7,
            methods,
        }
    }

    #[test]
    fn sweep_fills_every_cell_and_is_worker_invariant() {
        let spec = small_spec(
            NoiseModel::Off,
            vec![ChernMethod::Dynamical, ChernMethod::MonopoleCount],
        );
        let one = sweep(&spec, 1).unwrap();
        let many = sweep(&spec, 4).unwrap();
        assert_eq!(one.cells.len(), 12);
        assert_eq!(one, many);
        for cell in &one.cells {
            assert_eq!(cell.results.len(), 2);
        }
    }

    #[test]
    fn noisy_sweep_is_seed_deterministic() {
        let spec = small_spec(NoiseModel::Shots(50), vec![ChernMethod::Dynamical]);
        let a = sweep(&spec, 3).unwrap();
        let b = sweep(&spec, 1).unwrap();
        assert_eq!(a, b);
        let mut other = spec.clone();
        other.seed = 8;
        let c = sweep(&other, 3).unwrap();
        assert_ne!(a.cells, c.cells);
    }

    #[test]
    fn dynamical_matches_the_oracle_away_from_the_boundary() {
        let spec = small_spec(
            NoiseModel::Off,
            vec![ChernMethod::Dynamical, ChernMethod::Spectral, ChernMethod::MonopoleCount],
        );
        let pd = sweep(&spec, 4).unwrap();
        for cell in &pd.cells {
            let count = cell.estimate(ChernMethod::MonopoleCount).unwrap();
            let spectral = cell.estimate(ChernMethod::Spectral).unwrap();
            if (cell.h_0 - cell.h_r).abs() > 0.25 * cell.h_r {
                assert_eq!(count.rounded, spectral.rounded);
                if cell.adiabaticity >= 3.0 {
                    let dyn_est = cell.estimate(ChernMethod::Dynamical).unwrap();
                    assert_eq!(dyn_est.rounded, count.rounded, "cell {:?}", (cell.h_0, cell.h_r));
                }
            }
        }
    }

    #[test]
    fn target_a_policy_scales_the_ramp_time() {
        let mut spec = small_spec(NoiseModel::Off, vec![ChernMethod::MonopoleCount]);
        spec.tf_policy = TfPolicy::TargetA(4.0);
        let pd = sweep(&spec, 2).unwrap();
        for cell in &pd.cells {
            assert!((cell.adiabaticity - 4.0).abs() < 1e-9);
            assert!((cell.t_f - 2.0 * PI * 4.0 / cell.h_r).abs() < 1e-9);
        }
    }

    #[test]
    fn spec_validation_catches_nonsense() {
        let mut spec = small_spec(NoiseModel::Off, vec![ChernMethod::Dynamical]);
        spec.axis2 = spec.axis1.clone();
        assert!(sweep(&spec, 1).is_err());
        let mut spec = small_spec(NoiseModel::Off, vec![]);
        spec.methods.clear();
        assert!(sweep(&spec, 1).is_err());
        assert!(Axis::linspace(AxisKind::G, 0.0, 1.0, 1).is_err());
        assert!(Axis::linspace(AxisKind::G, 1.0, 0.0, 4).is_err());
    }

    #[test]
    fn sample_observable_statistics() {
        let mut rng = CounterRng::new(42, 0);
        // Deterministic edge: p = ±1 never flips.
        for _ in 0..10 {
            assert_eq!(sample_observable(1.0, 17, &mut rng).unwrap(), 1.0);
            assert_eq!(sample_observable(-1.0, 17, &mut rng).unwrap(), -1.0);
        }
        // Binomial standard error at p = 0, N = 300 is √(1/300) ≈ 0.0577.
        let trials = 10_000;
        let mut sum2 = 0.0;
        for t in 0..trials {
            let mut rng = CounterRng::new(91, t as u64);
            let m = sample_observable(0.0, 300, &mut rng).unwrap();
            sum2 += m * m;
        }
        let std = (sum2 / trials as f64).sqrt();
        assert!(
            (std - 0.0577).abs() <= 0.1 * 0.0577,
            "empirical std {std}"
        );
        assert!(sample_observable(1.5, 10, &mut rng).is_err());
        assert!(sample_observable(0.0, 0, &mut rng).is_err());
    }

    #[test]
    fn per_cell_failures_are_flagged_not_fatal() {
        // A two-qubit sweep crossing the g = H_r boundary: the lattice
        // method hits gapless points on boundary cells but the sweep
        // completes with errors recorded in those cells.
        let spec = SweepSpec {
            n_qubits: 2,
            axis1: Axis::linspace(AxisKind::G, 0.0, mhz_to_rad_ns(20.0), 5).unwrap(),
            axis2: Axis::linspace(AxisKind::H0, 0.0, mhz_to_rad_ns(12.0), 3).unwrap(),
            fixed_h_r: mhz_to_rad_ns(10.0),
            fixed_h_0: 0.0,
            fixed_g: 0.0,
            tf_policy: TfPolicy::Fixed(600.0),
            n_record: 25,
            substeps: 8,
            noise: NoiseModel::Off,
            seed: 1,
            methods: vec![ChernMethod::MonopoleCount, ChernMethod::Lattice],
        };
        let pd = sweep(&spec, 4).unwrap();
        assert_eq!(pd.cells.len(), 15);
        let mut agreements = 0;
        for cell in &pd.cells {
            let count = cell.estimate(ChernMethod::MonopoleCount).unwrap();
            match cell.estimate(ChernMethod::Lattice) {
                Some(lat) => {
                    assert_eq!(lat.rounded, count.rounded);
                    agreements += 1;
                }
                None => {
                    let r = cell
                        .results
                        .iter()
                        .find(|r| r.method == ChernMethod::Lattice)
                        .unwrap();
                    assert!(r.error.is_some());
                }
            }
        }
        assert!(agreements >= 10, "most cells are gapped: {agreements}");
    }
}

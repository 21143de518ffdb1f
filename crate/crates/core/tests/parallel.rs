//! Worker-pool contract: adding workers must not slow a sweep down (cells
//! are independent pure tasks), and results stay identical.

use chernlab_core::berry::ChernMethod;
use chernlab_core::runner::{sweep, Axis, AxisKind, NoiseModel, SweepSpec, TfPolicy};
use chernlab_core::units::mhz_to_rad_ns;
use std::time::Instant;

#[test]
fn more_workers_do_not_slow_the_sweep() {
    let spec = SweepSpec {
        n_qubits: 1,
        axis1: Axis::linspace(AxisKind::H0, 0.0, mhz_to_rad_ns(18.0), 8).unwrap(),
        axis2: Axis::linspace(AxisKind::Hr, mhz_to_rad_ns(3.0), mhz_to_rad_ns(15.0), 8).unwrap(),
        fixed_h_r: mhz_to_rad_ns(10.0),
        fixed_h_0: 0.0,
        fixed_g: 0.0,
        tf_policy: TfPolicy::Fixed(800.0),
        n_record: 50,
        substeps: 64,
        noise: NoiseModel::Off,
        seed: 0,
        methods: vec![ChernMethod::Dynamical, ChernMethod::Spectral],
    };
    // Warm up caches/allocator before timing.
    let warm = sweep(&spec, 1).unwrap();

    let t1 = Instant::now();
    let single = sweep(&spec, 1).unwrap();
    let serial = t1.elapsed();

    let t4 = Instant::now();
    let pooled = sweep(&spec, 4).unwrap();
    let parallel = t4.elapsed();

    assert_eq!(single, pooled);
    assert_eq!(warm, single);
    // Allow generous scheduling slack; on a single hardware thread the two
    // runs simply tie.
    assert!(
        parallel.as_secs_f64() <= 1.25 * serial.as_secs_f64() + 0.05,
        "4 workers took {parallel:?} vs {serial:?} single-threaded"
    );
}

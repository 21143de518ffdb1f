//! Shot-noise consistency: the spread of repeated noisy Chern estimates
//! must match the binomial error propagated through the trapezoid weights.

use chernlab_core::berry::chern_dynamical;
use chernlab_core::controls::meridian_ramp;
use chernlab_core::propagator::propagate;
use chernlab_core::qcore::StateVector;
use chernlab_core::rng::CounterRng;
use chernlab_core::runner::sample_observable;
use chernlab_core::units::mhz_to_rad_ns;

#[test]
fn noisy_estimate_spread_matches_propagated_binomial_error() {
    let h_r = mhz_to_rad_ns(10.0);
    let shots = 300u32;
    let schedule = meridian_ramp(h_r, 0.0, 600.0).unwrap();
    let up = StateVector::all_up(1).unwrap();
    let clean = propagate(&schedule, &up, 50, 64).unwrap();

    // Predicted variance: independent binomial noise per sample, weighted
    // by the trapezoid rule and the sine-profile drive.
    let n = clean.sample_times.len();
    let h = clean.sample_times[1] - clean.sample_times[0];
    let mut var_pred = 0.0;
    for k in 0..n {
        let w = if k == 0 || k == n - 1 { 0.5 * h } else { h };
        let drive = 0.5 * schedule.inplane_at(clean.sample_times[k]);
        let p = clean.sy[0][k];
        var_pred += (w * drive).powi(2) * (1.0 - p * p) / shots as f64;
    }
    let std_pred = var_pred.sqrt();

    let trials = 400;
    let mut values = Vec::with_capacity(trials);
    for t in 0..trials {
        let mut noisy = clean.clone();
        let mut rng = CounterRng::new(2718, t as u64);
        for v in noisy.sy[0].iter_mut() {
            *v = sample_observable(*v, shots, &mut rng).unwrap();
        }
        values.push(chern_dynamical(&noisy, h_r).unwrap().value);
    }
    let mean: f64 = values.iter().sum::<f64>() / trials as f64;
    let var: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / trials as f64;
    let std_emp = var.sqrt();

    let ratio = std_emp / std_pred;
    assert!(
        (1.0 / 1.5..=1.5).contains(&ratio),
        "empirical std {std_emp:.4} vs predicted {std_pred:.4} (ratio {ratio:.2})"
    );
    // The noisy mean stays on the clean value well within the shot error.
    let clean_value = chern_dynamical(&clean, h_r).unwrap().value;
    assert!((mean - clean_value).abs() < 3.0 * std_pred / (trials as f64).sqrt() + 0.01);
}

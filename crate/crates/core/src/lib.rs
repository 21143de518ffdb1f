//! Simulation library for dynamical Berry-curvature and Chern-number
//! measurements in driven one- and two-qubit systems.
//!
//! The crate is organized around the measurement pipeline:
//!
//! * [`qcore`] — exact complex linear algebra for Hilbert-space dimensions
//!   2 and 4 (states, Hermitian operators, eigendecomposition, unitary steps).
//! * [`controls`] — pulse schedules (meridian, elliptic, two-qubit,
//!   adiabatic-prep) and the instantaneous Hamiltonian they generate.
//! * [`propagator`] — time-dependent Schrödinger integration along a
//!   schedule, with observables recorded at uniform sample times.
//! * [`berry`] — Chern-number estimators and oracles: the dynamical
//!   deflection method, the exact spectral Berry-curvature integral, and the
//!   analytic monopole locator for the coupled two-qubit system.
//! * [`bzmap`] — confocal mapping of the parameter sphere onto the hexagonal
//!   Brillouin zone, spin-texture grids, and texture-based Chern numbers.
//! * [`haldane`] — the four-band stacked-triangular-lattice model, band
//!   dispersions, and an independent plaquette (link-variable) lattice Chern
//!   number.
//! * [`runner`] — deterministic parameter sweeps over grids of control
//!   parameters, with optional projective-measurement shot noise.
//! * [`presets`] — named figure-style studies binding the pieces above
//!   into reproducible artifact bundles.
//!
//! All field magnitudes are stored internally as angular frequencies in
//! rad/ns (ħ = 1); times are in ns. Conversions from the conventional
//! "H/2π in MHz" quoting live in [`units`].

pub mod berry;
pub mod bzmap;
pub mod controls;
pub mod error;
pub mod haldane;
pub mod presets;
pub mod propagator;
pub mod qcore;
pub mod rng;
pub mod runner;
pub mod units;

pub use error::{Result, SimError};

//! Unit conversions at the library boundary.
//!
//! Internally every field magnitude is an angular frequency in rad/ns and
//! every time is in ns, with ħ = 1. Experimental parameters are quoted as
//! H/2π in MHz, so the conversion is H[rad/ns] = 2π · 10⁻³ · (H/2π)[MHz].

use std::f64::consts::PI;

/// Convert a frequency quoted as H/2π in MHz to an angular frequency in rad/ns.
pub fn mhz_to_rad_ns(f_mhz: f64) -> f64 {
    2.0 * PI * 1.0e-3 * f_mhz
}

/// Convert an internal angular frequency in rad/ns back to H/2π in MHz.
pub fn rad_ns_to_mhz(w: f64) -> f64 {
    w / (2.0 * PI * 1.0e-3)
}

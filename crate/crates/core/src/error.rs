//! Error types shared across the library.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, SimError>;

/// Failure modes of the simulation library.
#[derive(Debug, Clone, PartialEq)]
pub enum SimError {
    /// A caller-supplied value violates a precondition (bad axis, dimension
    /// mismatch, out-of-range time, non-finite input, ...).
    InvalidArgument(String),
    /// A matrix handed to a Hermitian-only routine is not Hermitian.
    NonHermitian { max_deviation: f64 },
    /// The ground state is degenerate; `gap` is the offending energy gap.
    Degenerate { gap: f64 },
    /// A ramp was requested with zero field magnitude, so the control
    /// manifold collapses onto the degeneracy.
    DegenerateManifold { h_r: f64 },
    /// The operation is not defined for this schedule kind or system size.
    Unsupported(String),
    /// A texture grid is too coarse to resolve the winding (adjacent Bloch
    /// vectors further apart than 90°).
    GridResolution { max_angle: f64 },
    /// The requested band touches its neighbor on the lattice grid, so a
    /// band Chern number is undefined.
    Gapless { kx: f64, ky: f64, gap: f64 },
    /// Filesystem or serialization failure (used by consumers of the
    /// library that write artifacts).
    Io(String),
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            SimError::NonHermitian { max_deviation } => {
                write!(f, "matrix is not Hermitian (max deviation {max_deviation:.3e})")
            }
            SimError::Degenerate { gap } => {
                write!(f, "ground state is degenerate (gap {gap:.3e} rad/ns)")
            }
            SimError::DegenerateManifold { h_r } => {
                write!(f, "field magnitude H_r = {h_r} collapses the control manifold")
            }
            SimError::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            SimError::GridResolution { max_angle } => write!(
                f,
                "texture grid too coarse: adjacent Bloch vectors {max_angle:.3} rad apart"
            ),
            SimError::Gapless { kx, ky, gap } => write!(
                f,
                "band gap closes at k = ({kx:.4}, {ky:.4}) (gap {gap:.3e}); Chern number undefined"
            ),
            SimError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for SimError {}

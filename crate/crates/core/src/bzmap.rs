//! Confocal mapping of the parameter sphere onto the hexagonal first
//! Brillouin zone, spin-texture grids, and texture-based Chern numbers.
//!
//! The northern hemisphere of the parameter sphere maps through
//! ρ = r(φ)·tan(θ/2) onto a triangle of K-equivalent corners (the image of
//! one of the three zone sectors); the southern hemisphere maps likewise
//! around K′. Repeating the map for all three sectors tiles the zone.
//! Because the Chern number is a degree, the per-sector planar integral of
//! the texture equals the sphere winding regardless of the mapping details.

use crate::berry::{ChernEstimate, ChernFlags, ChernMethod};
use crate::error::{Result, SimError};
use crate::propagator::{adiabatic_prepare, field_ground_bloch, BlochVector};
use std::f64::consts::PI;

/// Hexagonal first Brillouin zone with corner distance b = |K − K′|.
#[derive(Debug, Clone)]
pub struct BrillouinZone {
    pub b: f64,
    /// K corners (one per sector), at azimuths 30°, 150°, 270°.
    pub k_corners: [[f64; 2]; 3],
    /// K′ corners (one per sector), at azimuths 90°, 210°, 330°.
    pub k_prime_corners: [[f64; 2]; 3],
    /// All six hexagon vertices in order of azimuth.
    pub vertices: [[f64; 2]; 6],
}

pub const SECTOR_COUNT: usize = 3;

impl BrillouinZone {
    pub fn new(b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(SimError::InvalidArgument(format!(
                "zone scale b must be positive, got {b}"
            )));
        }
        let corner = |deg: f64| {
            let a = deg.to_radians();
            [b * a.cos(), b * a.sin()]
        };
        let k_corners = [corner(30.0), corner(150.0), corner(270.0)];
        let k_prime_corners = [corner(90.0), corner(210.0), corner(330.0)];
        let mut vertices = [[0.0; 2]; 6];
        for (i, v) in vertices.iter_mut().enumerate() {
            *v = corner(30.0 + 60.0 * i as f64);
        }
        Ok(BrillouinZone {
            b,
            k_corners,
            k_prime_corners,
            vertices,
        })
    }

    /// Boundary radius of the sector image: the distance from the corner to
    /// the triangle edge in direction φ (piecewise straight edges at
    /// perpendicular distance b/2).
    pub fn r_boundary(&self, phi: f64) -> f64 {
        let p = phi.rem_euclid(2.0 * PI);
        let half = 0.5 * self.b;
        if p < 2.0 * PI / 3.0 {
            half / (5.0 * PI / 6.0 - p).sin()
        } else if p < 4.0 * PI / 3.0 {
            // The printed form b·sin(π/6)/cos φ is negative on this arc; the
            // polar radius of the edge line is its magnitude.
            half / p.cos().abs()
        } else {
            half / (p - 7.0 * PI / 6.0).sin()
        }
    }
}

/// Map a sphere point (θ, φ) into sector `sector` of the zone: the northern
/// hemisphere lands around K, the southern around K′.
pub fn confocal_map(
    bz: &BrillouinZone,
    theta: f64,
    phi: f64,
    sector: usize,
) -> Result<[f64; 2]> {
    if !(0.0..=PI).contains(&theta) {
        return Err(SimError::InvalidArgument(format!(
            "θ = {theta} outside [0, π]"
        )));
    }
    if sector >= SECTOR_COUNT {
        return Err(SimError::InvalidArgument(format!(
            "sector must be 0..3, got {sector}"
        )));
    }
    let r = bz.r_boundary(phi);
    let (anchor, axis_deg, rho) = if theta <= 0.5 * PI {
        // Local φ = 0 points along the chord toward the adjacent K′.
        (
            bz.k_corners[sector],
            150.0 + 120.0 * sector as f64,
            r * (0.5 * theta).tan(),
        )
    } else {
        (
            bz.k_prime_corners[sector],
            -30.0 + 120.0 * sector as f64,
            r * (0.5 * (PI - theta)).tan(),
        )
    };
    let a = axis_deg.to_radians() + phi;
    Ok([anchor[0] + rho * a.cos(), anchor[1] + rho * a.sin()])
}

/// How the Bloch vectors of a texture grid are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TexturePrep {
    /// Exact ground state of the field at each grid point.
    ExactGround,
    /// Simulated adiabatic preparation and hold-window tomography.
    AdiabaticSim,
}

/// One mapped texture sample.
#[derive(Debug, Clone, Copy)]
pub struct TexturePoint {
    pub k: [f64; 2],
    pub bloch: BlochVector,
}

/// Ground-state Bloch vectors over a (θ, φ) grid on the sphere manifold.
///
/// `bloch[i * n_phi + j]` belongs to (θ_i, φ_j); θ runs over `n_theta`
/// values including both poles, φ over `n_phi` values in [0, 2π). Points
/// whose target field is degenerate hold `None` and are excluded from
/// integrals; low-fidelity prepared vectors stay in the grid as measured.
#[derive(Debug, Clone)]
pub struct TextureGrid {
    pub h_r: f64,
    pub h_0: f64,
    pub prep: TexturePrep,
    pub n_theta: usize,
    pub n_phi: usize,
    pub thetas: Vec<f64>,
    pub phis: Vec<f64>,
    pub bloch: Vec<Option<BlochVector>>,
    pub excluded: usize,
}

/// Build a texture grid for a single-qubit sphere (H_r, H_0).
pub fn texture_grid(
    h_r: f64,
    h_0: f64,
    n_theta: usize,
    n_phi: usize,
    prep: TexturePrep,
) -> Result<TextureGrid> {
    if !(h_r > 0.0) {
        return Err(SimError::DegenerateManifold { h_r });
    }
    if n_theta < 8 || n_phi < 8 {
        return Err(SimError::InvalidArgument(format!(
            "texture grid must be at least 8×8, got {n_theta}×{n_phi}"
        )));
    }
    let thetas: Vec<f64> = (0..n_theta)
        .map(|i| PI * i as f64 / (n_theta - 1) as f64)
        .collect();
    let phis: Vec<f64> = (0..n_phi)
        .map(|j| 2.0 * PI * j as f64 / n_phi as f64)
        .collect();
    let mut bloch = Vec::with_capacity(n_theta * n_phi);
    let mut excluded = 0;
    for &theta in &thetas {
        for &phi in &phis {
            let field = [
                h_r * theta.sin() * phi.cos(),
                h_r * theta.sin() * phi.sin(),
                h_0 + h_r * theta.cos(),
            ];
            let point = match prep {
                TexturePrep::ExactGround => field_ground_bloch(field),
                TexturePrep::AdiabaticSim => {
                    let target =
                        crate::controls::ControlVector::single(field[0], field[1], field[2]);
                    let p = adiabatic_prepare(&target, 100)?;
                    // Only degenerate targets are excluded; low-fidelity
                    // points stay in the grid as measured (that is what
                    // tomography would record near a slow crossing).
                    if p.degenerate {
                        None
                    } else {
                        p.bloch.first().copied()
                    }
                }
            };
            if point.is_none() {
                excluded += 1;
            }
            bloch.push(point);
        }
    }
    Ok(TextureGrid {
        h_r,
        h_0,
        prep,
        n_theta,
        n_phi,
        thetas,
        phis,
        bloch,
        excluded,
    })
}

impl TextureGrid {
    fn at(&self, i: usize, j: usize) -> Option<BlochVector> {
        self.bloch[i * self.n_phi + j % self.n_phi]
    }

    /// Mapped texture points for one sector (both hemispheres), excluding
    /// flagged grid points.
    pub fn to_points(&self, bz: &BrillouinZone, sector: usize) -> Result<Vec<TexturePoint>> {
        let mut out = Vec::with_capacity(self.n_theta * self.n_phi);
        for (i, &theta) in self.thetas.iter().enumerate() {
            for (j, &phi) in self.phis.iter().enumerate() {
                if let Some(b) = self.at(i, j) {
                    out.push(TexturePoint {
                        k: confocal_map(bz, theta, phi, sector)?,
                        bloch: b,
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Texture-integration route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextureMethod {
    /// Finite-difference evaluation of the planar winding integral
    /// (1/4π)∫ σ·(∂σ/∂k_x × ∂σ/∂k_y) d²k over one sector image. The
    /// confocal Jacobian cancels exactly against the area element, so the
    /// sum reduces to grid differences in (θ, φ) and is independent of the
    /// zone scale b.
    PlanarMapped,
    /// Sum of signed spherical-triangle solid angles of the Bloch vectors
    /// over the closed grid, divided by 4π (exactly quantized when the
    /// surface closes).
    SolidAngle,
}

fn cross(a: &BlochVector, b: &BlochVector) -> BlochVector {
    BlochVector {
        x: a.y * b.z - a.z * b.y,
        y: a.z * b.x - a.x * b.z,
        z: a.x * b.y - a.y * b.x,
    }
}

/// Signed solid angle of the spherical triangle (a, b, c).
fn triangle_solid_angle(a: &BlochVector, b: &BlochVector, c: &BlochVector) -> f64 {
    let triple = a.dot(&cross(b, c));
    let denom = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    2.0 * triple.atan2(denom)
}

fn mean_unit(points: &[BlochVector]) -> Option<BlochVector> {
    let mut acc = BlochVector { x: 0.0, y: 0.0, z: 0.0 };
    for p in points {
        acc.x += p.x;
        acc.y += p.y;
        acc.z += p.z;
    }
    acc.renormalized()
}

/// Chern number of a texture grid by the requested method.
pub fn texture_chern(grid: &TextureGrid, method: TextureMethod) -> Result<ChernEstimate> {
    check_resolution(grid)?;
    let value = match method {
        TextureMethod::SolidAngle => solid_angle_sum(grid)? / (4.0 * PI),
        TextureMethod::PlanarMapped => planar_sum(grid) / (4.0 * PI),
    };
    let flags = ChernFlags {
        degenerate_encounter: grid.excluded > 0,
        ..Default::default()
    };
    Ok(texture_estimate(value, flags))
}

/// The planar integral accumulated over all three sector images of the
/// zone (3× the per-sector value by construction).
pub fn texture_chern_full_zone(grid: &TextureGrid) -> Result<f64> {
    check_resolution(grid)?;
    Ok(SECTOR_COUNT as f64 * planar_sum(grid) / (4.0 * PI))
}

fn texture_estimate(value: f64, flags: ChernFlags) -> ChernEstimate {
    ChernEstimate {
        value,
        rounded: (!flags.degenerate_encounter).then(|| value.round() as i64),
        method: ChernMethod::Texture,
        adiabaticity: None,
        flags,
    }
}

/// Adjacent unflagged Bloch vectors further apart than 90° mean the grid
/// undersamples the winding.
fn check_resolution(grid: &TextureGrid) -> Result<()> {
    let mut max_angle: f64 = 0.0;
    for i in 0..grid.n_theta {
        for j in 0..grid.n_phi {
            let here = match grid.at(i, j) {
                Some(b) => b,
                None => continue,
            };
            let mut check = |other: Option<BlochVector>| {
                if let Some(o) = other {
                    let d = here.dot(&o).clamp(-1.0, 1.0).acos();
                    max_angle = max_angle.max(d);
                }
            };
            if i + 1 < grid.n_theta {
                check(grid.at(i + 1, j));
            }
            check(grid.at(i, (j + 1) % grid.n_phi));
        }
    }
    if max_angle > 0.5 * PI {
        return Err(SimError::GridResolution { max_angle });
    }
    Ok(())
}

/// Total signed solid angle of the texture over the closed grid. Rows with
/// missing points near the poles are closed by a fan to the normalized mean
/// of the nearest complete ring; isolated missing points skip their cells.
fn solid_angle_sum(grid: &TextureGrid) -> Result<f64> {
    let complete_row = |i: usize| (0..grid.n_phi).all(|j| grid.at(i, j).is_some());
    let i_north = (0..grid.n_theta)
        .find(|&i| complete_row(i))
        .ok_or(SimError::GridResolution { max_angle: PI })?;
    let i_south = (0..grid.n_theta)
        .rev()
        .find(|&i| complete_row(i))
        .expect("at least one complete row exists");

    let mut total = 0.0;
    for i in i_north..i_south {
        for j in 0..grid.n_phi {
            let (v00, v10, v11, v01) = match (
                grid.at(i, j),
                grid.at(i + 1, j),
                grid.at(i + 1, j + 1),
                grid.at(i, j + 1),
            ) {
                (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
                _ => continue,
            };
            total += triangle_solid_angle(&v00, &v10, &v11);
            total += triangle_solid_angle(&v00, &v11, &v01);
        }
    }

    // Cap closures (zero-area when the ring already sits at a pole point).
    let ring = |i: usize| -> Vec<BlochVector> {
        (0..grid.n_phi).filter_map(|j| grid.at(i, j)).collect()
    };
    if let Some(pole) = mean_unit(&ring(i_north)) {
        for j in 0..grid.n_phi {
            let a = grid.at(i_north, j).unwrap();
            let b = grid.at(i_north, j + 1).unwrap();
            total += triangle_solid_angle(&pole, &a, &b);
        }
    }
    if let Some(pole) = mean_unit(&ring(i_south)) {
        for j in 0..grid.n_phi {
            let a = grid.at(i_south, j).unwrap();
            let b = grid.at(i_south, j + 1).unwrap();
            total += triangle_solid_angle(&pole, &b, &a);
        }
    }
    Ok(total)
}

/// Midpoint finite-difference sum of σ·(∂_θσ × ∂_φσ) dθ dφ over the grid —
/// the planar winding integrand after the exact Jacobian cancellation.
fn planar_sum(grid: &TextureGrid) -> f64 {
    let d_theta = PI / (grid.n_theta - 1) as f64;
    let d_phi = 2.0 * PI / grid.n_phi as f64;
    let mut total = 0.0;
    for i in 0..grid.n_theta - 1 {
        for j in 0..grid.n_phi {
            let (v00, v10, v11, v01) = match (
                grid.at(i, j),
                grid.at(i + 1, j),
                grid.at(i + 1, j + 1),
                grid.at(i, j + 1),
            ) {
                (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
                _ => continue,
            };
            let center = BlochVector {
                x: v00.x + v10.x + v11.x + v01.x,
                y: v00.y + v10.y + v11.y + v01.y,
                z: v00.z + v10.z + v11.z + v01.z,
            };
            let center = match center.renormalized() {
                Some(c) => c,
                None => continue,
            };
            let dth = BlochVector {
                x: (v10.x + v11.x - v00.x - v01.x) / (2.0 * d_theta),
                y: (v10.y + v11.y - v00.y - v01.y) / (2.0 * d_theta),
                z: (v10.z + v11.z - v00.z - v01.z) / (2.0 * d_theta),
            };
            let dph = BlochVector {
                x: (v01.x + v11.x - v00.x - v10.x) / (2.0 * d_phi),
                y: (v01.y + v11.y - v00.y - v10.y) / (2.0 * d_phi),
                z: (v01.z + v11.z - v00.z - v10.z) / (2.0 * d_phi),
            };
            total += center.dot(&cross(&dth, &dph)) * d_theta * d_phi;
        }
    }
    total
}

/// Two-band Dirac-mass parameters; the field ratio H_0/H_r plays the role
/// of m_0/m_t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracParams {
    pub m0: f64,
    pub mt: f64,
    pub v_f: f64,
}

impl DiracParams {
    pub fn from_field_ratio(h_0: f64, h_r: f64) -> Self {
        DiracParams {
            m0: h_0,
            mt: h_r,
            v_f: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiracPhase {
    Topological,
    Trivial,
    Boundary,
}

/// Phase classifier: trivial iff |m0| > |mt|.
pub fn dirac_phase(params: &DiracParams) -> DiracPhase {
    if params.m0.abs() > params.mt.abs() {
        DiracPhase::Trivial
    } else if params.m0.abs() < params.mt.abs() {
        DiracPhase::Topological
    } else {
        DiracPhase::Boundary
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berry::{chern_spectral, SphereParams};
    use crate::rng::CounterRng;
    use crate::units::mhz_to_rad_ns;

    fn close(a: [f64; 2], b: [f64; 2], tol: f64) -> bool {
        (a[0] - b[0]).hypot(a[1] - b[1]) <= tol
    }

    #[test]
    fn boundary_radius_values() {
        let bz = BrillouinZone::new(1.0).unwrap();
        // r(0) = (b/2)/sin(5π/6) = b.
        assert!((bz.r_boundary(0.0) - 1.0).abs() < 1e-14);
        // Edge midpoints sit at b/2.
        for mid in [PI / 3.0, PI, 5.0 * PI / 3.0] {
            assert!((bz.r_boundary(mid) - 0.5).abs() < 1e-14);
        }
        // Branch seams agree (triangle corners at distance b).
        for seam in [2.0 * PI / 3.0, 4.0 * PI / 3.0] {
            let before = bz.r_boundary(seam - 1e-9);
            let after = bz.r_boundary(seam + 1e-9);
            assert!((before - after).abs() < 1e-6);
            assert!((before - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn poles_map_onto_the_zone_corners() {
        let bz = BrillouinZone::new(1.0).unwrap();
        for sector in 0..3 {
            for phi in [0.0, 1.0, 4.5] {
                let k = confocal_map(&bz, 0.0, phi, sector).unwrap();
                assert!(close(k, bz.k_corners[sector], 1e-14));
                let kp = confocal_map(&bz, PI, phi, sector).unwrap();
                assert!(close(kp, bz.k_prime_corners[sector], 1e-14));
            }
        }
    }

    #[test]
    fn equator_at_phi_zero_sits_one_unit_from_k() {
        let bz = BrillouinZone::new(1.0).unwrap();
        let k = confocal_map(&bz, 0.5 * PI, 0.0, 0).unwrap();
        let d = (k[0] - bz.k_corners[0][0]).hypot(k[1] - bz.k_corners[0][1]);
        assert!((d - 1.0).abs() < 1e-14, "ρ = {d}");
        // And that point is the adjacent K′ corner (r(0) spans the chord).
        assert!(close(k, bz.k_prime_corners[0], 1e-12));
    }

    #[test]
    fn confocal_map_is_radially_monotone_and_continuous() {
        let bz = BrillouinZone::new(1.0).unwrap();
        for &phi in &[0.3, 2.0, 5.5] {
            let mut prev_rho = -1.0;
            let mut prev_k: Option<[f64; 2]> = None;
            for i in 0..=200 {
                let theta = 0.5 * PI * i as f64 / 200.0;
                let k = confocal_map(&bz, theta, phi, 0).unwrap();
                let rho = (k[0] - bz.k_corners[0][0]).hypot(k[1] - bz.k_corners[0][1]);
                assert!(rho > prev_rho - 1e-15, "radial monotonicity");
                if let Some(p) = prev_k {
                    assert!(close(k, p, 0.02), "continuity in θ");
                }
                prev_rho = rho;
                prev_k = Some(k);
            }
        }
        assert!(confocal_map(&bz, -0.1, 0.0, 0).is_err());
        assert!(confocal_map(&bz, PI + 0.1, 0.0, 0).is_err());
        assert!(confocal_map(&bz, 0.5, 0.0, 3).is_err());
    }

    #[test]
    fn exact_texture_follows_the_field_direction() {
        let h_r = mhz_to_rad_ns(10.0);
        let grid = texture_grid(h_r, 0.0, 25, 24, TexturePrep::ExactGround).unwrap();
        assert_eq!(grid.excluded, 0);
        for (i, &theta) in grid.thetas.iter().enumerate() {
            let b = grid.at(i, 0).unwrap();
            assert!((b.x - theta.sin()).abs() < 1e-12);
            assert!(b.y.abs() < 1e-12);
            assert!((b.z - theta.cos()).abs() < 1e-12);
        }
        // Full winding: +z at K (θ=0) through the equator to −z at K′.
        assert!(grid.at(0, 0).unwrap().z > 0.999);
        assert!(grid.at(grid.n_theta - 1, 0).unwrap().z < -0.999);
    }

    #[test]
    fn trivial_texture_tilts_without_winding() {
        let h_r = mhz_to_rad_ns(10.0);
        let grid = texture_grid(h_r, 1.2 * h_r, 25, 24, TexturePrep::ExactGround).unwrap();
        for i in 0..grid.n_theta {
            for j in 0..grid.n_phi {
                assert!(grid.at(i, j).unwrap().z > 0.0, "no southern vectors");
            }
        }
    }

    #[test]
    fn solid_angle_chern_on_exact_textures() {
        let h_r = mhz_to_rad_ns(10.0);
        let topo = texture_grid(h_r, 0.0, 50, 50, TexturePrep::ExactGround).unwrap();
        let est = texture_chern(&topo, TextureMethod::SolidAngle).unwrap();
        assert!((est.value - 1.0).abs() <= 0.02, "Ch = {}", est.value);
        assert_eq!(est.rounded, Some(1));

        let trivial = texture_grid(h_r, 1.2 * h_r, 50, 50, TexturePrep::ExactGround).unwrap();
        let est = texture_chern(&trivial, TextureMethod::SolidAngle).unwrap();
        assert!(est.value.abs() <= 0.02, "Ch = {}", est.value);
        assert_eq!(est.rounded, Some(0));
    }

    #[test]
    fn planar_chern_matches_and_ignores_the_zone_scale() {
        let h_r = mhz_to_rad_ns(10.0);
        let topo = texture_grid(h_r, 0.0, 50, 50, TexturePrep::ExactGround).unwrap();
        let est = texture_chern(&topo, TextureMethod::PlanarMapped).unwrap();
        assert!((est.value - 1.0).abs() <= 0.02, "Ch = {}", est.value);
        // Full-zone sum over the three sector images.
        let full = texture_chern_full_zone(&topo).unwrap();
        assert!((full - 3.0 * est.value).abs() < 1e-12);
        // Mapped points scale with b but the winding does not.
        for b in [0.5, 1.0, 7.3] {
            let bz = BrillouinZone::new(b).unwrap();
            let pts = topo.to_points(&bz, 0).unwrap();
            assert_eq!(pts.len(), 50 * 50);
        }
    }

    #[test]
    fn uniform_texture_has_zero_winding() {
        let h_r = mhz_to_rad_ns(10.0);
        let mut grid = texture_grid(h_r, 0.0, 16, 16, TexturePrep::ExactGround).unwrap();
        for b in grid.bloch.iter_mut() {
            *b = Some(BlochVector { x: 0.0, y: 0.0, z: 1.0 });
        }
        let est = texture_chern(&grid, TextureMethod::SolidAngle).unwrap();
        assert_eq!(est.value, 0.0);
        let est = texture_chern(&grid, TextureMethod::PlanarMapped).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn coarse_grid_near_the_transition_raises_a_resolution_error() {
        let h_r = mhz_to_rad_ns(10.0);
        // At H_0/H_r = 0.97 the direction swings by ~π across one coarse
        // θ step near the south pole.
        let grid = texture_grid(h_r, 0.97 * h_r, 8, 8, TexturePrep::ExactGround).unwrap();
        assert!(matches!(
            texture_chern(&grid, TextureMethod::SolidAngle),
            Err(SimError::GridResolution { .. })
        ));
    }

    #[test]
    fn texture_degree_matches_the_spectral_oracle() {
        let h_r = mhz_to_rad_ns(10.0);
        let mut rng = CounterRng::new(31, 11);
        let mut done = 0;
        while done < 20 {
            let ratio = rng.uniform(0.0, 2.0);
            if (ratio - 1.0).abs() < 0.1 {
                continue;
            }
            done += 1;
            let grid =
                texture_grid(h_r, ratio * h_r, 50, 50, TexturePrep::ExactGround).unwrap();
            let tex = texture_chern(&grid, TextureMethod::SolidAngle).unwrap();
            let spec = chern_spectral(&SphereParams::single(h_r, ratio * h_r), 361).unwrap();
            assert_eq!(tex.rounded, spec.rounded, "ratio {ratio}");
            assert!((tex.value - spec.rounded.unwrap() as f64).abs() <= 0.02);
        }
    }

    #[test]
    fn grid_validates_inputs() {
        assert!(texture_grid(0.0, 0.0, 16, 16, TexturePrep::ExactGround).is_err());
        assert!(texture_grid(1.0, 0.0, 7, 16, TexturePrep::ExactGround).is_err());
    }

    #[test]
    fn dirac_phase_classification() {
        assert_eq!(
            dirac_phase(&DiracParams { m0: 1.2, mt: 1.0, v_f: 1.0 }),
            DiracPhase::Trivial
        );
        assert_eq!(
            dirac_phase(&DiracParams { m0: 0.0, mt: 1.0, v_f: 1.0 }),
            DiracPhase::Topological
        );
        assert_eq!(
            dirac_phase(&DiracParams { m0: -0.5, mt: 1.0, v_f: 1.0 }),
            DiracPhase::Topological
        );
        assert_eq!(
            dirac_phase(&DiracParams { m0: 1.0, mt: -1.0, v_f: 1.0 }),
            DiracPhase::Boundary
        );
        // The field-ratio identification: H_0/H_r maps onto m_0/m_t.
        let p = DiracParams::from_field_ratio(1.2, 1.0);
        assert_eq!(dirac_phase(&p), DiracPhase::Trivial);
    }
}

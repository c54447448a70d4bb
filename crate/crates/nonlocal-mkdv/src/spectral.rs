//! Phase function θ(z;ξ), stationary points, region classification and the
//! sign structure of Re(2itθ).
//!
//! The oscillation driving the long-time analysis is e^{±2itθ} with
//!
//! ```text
//!   θ(z;ξ) = ½ (z + 1/z) [ ξ - 2 + (z - 1/z)² ],      ξ = x/t.
//! ```
//!
//! Besides z = ±1 there are four more stationary points; their location
//! switches with ξ:  real axis for ξ < -6, unit circle for -6 < ξ < 6,
//! imaginary axis for ξ > 6.  At |ξ| = 6 the quartet merges into double
//! roots at ±1 (ξ=-6) or ±i (ξ=+6) and the machinery downstream degenerates,
//! so that case is tagged separately rather than binned into a region.

use crate::{C64, Error, Result, I};
use serde::{Deserialize, Serialize};

/// Uniformization variables k = (z-1/z)/2, λ = (z+1/z)/2 with λ² - k² = 1.
#[derive(Debug, Clone, Copy)]
pub struct Uniformization {
    pub z: C64,
    pub k: C64,
    pub lambda: C64,
}

impl Uniformization {
    pub fn new(z: C64) -> Result<Self> {
        if z == C64::new(0.0, 0.0) {
            return Err(Error::Domain("uniformization undefined at z = 0".into()));
        }
        Ok(Self {
            z,
            k: 0.5 * (z - 1.0 / z),
            lambda: 0.5 * (z + 1.0 / z),
        })
    }
}

pub fn lambda(z: C64) -> C64 {
    0.5 * (z + 1.0 / z)
}

pub fn wave_k(z: C64) -> C64 {
    0.5 * (z - 1.0 / z)
}

/// θ(z;ξ) = ½(z+1/z)[ξ-2+(z-1/z)²].
pub fn theta(z: C64, xi: f64) -> Result<C64> {
    if z == C64::new(0.0, 0.0) {
        return Err(Error::Domain("theta undefined at z = 0".into()));
    }
    let w = z - 1.0 / z;
    Ok(0.5 * (z + 1.0 / z) * (xi - 2.0 + w * w))
}

/// (θ', θ'') by analytic differentiation.
///
/// θ'(z) = -(1-z²)(3z⁴+ξz²+3)/(2z⁴);  θ''(z) = 3z + (ξ-3)/z³ + 6/z⁵.
pub fn theta_derivatives(z: C64, xi: f64) -> Result<(C64, C64)> {
    if z == C64::new(0.0, 0.0) {
        return Err(Error::Domain("theta' undefined at z = 0".into()));
    }
    let z2 = z * z;
    let z4 = z2 * z2;
    let tp = -(1.0 - z2) * (3.0 * z4 + xi * z2 + 3.0) / (2.0 * z4);
    let tpp = 3.0 * z + (xi - 3.0) / (z2 * z) + 6.0 / (z4 * z);
    Ok((tp, tpp))
}

/// The polynomial-in-(x,t) phase Ψ(x,t,z) = tθ(z; x/t) = λ(z)[x + (4k²(z)-2)t].
///
/// Using Ψ instead of tθ keeps residue data well defined at t = 0 and for
/// negative t, which the nonlocal term q(-x,-t) requires.
pub fn phase_psi(x: f64, t: f64, z: C64) -> C64 {
    let k = wave_k(z);
    lambda(z) * (x + (4.0 * k * k - 2.0) * t)
}

/// Re[2iθ(z;ξ)] in the closed product form
/// -Im z (1-|z|⁻²)[ξ-3+(1+|z|⁻²+|z|⁻⁴)(3Re²z-Im²z)].
///
/// Vanishes identically on ℝ and on |z| = 1.
pub fn re_2i_theta(z: C64, xi: f64) -> Result<f64> {
    if z == C64::new(0.0, 0.0) {
        return Err(Error::Domain("Re(2iθ) undefined at z = 0".into()));
    }
    let r2 = z.norm_sqr();
    let inv2 = 1.0 / r2;
    let inv4 = inv2 * inv2;
    Ok(-z.im * (1.0 - inv2) * (xi - 3.0 + (1.0 + inv2 + inv4) * (3.0 * z.re * z.re - z.im * z.im)))
}

/// Re[2itθ] = t·Re[2iθ] for t > 0.
pub fn re_2it_theta(z: C64, xi: f64, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain("re_2it_theta requires t > 0".into()));
    }
    Ok(t * re_2i_theta(z, xi)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    /// ξ < -6: quartet on the real axis.
    I,
    /// -6 < ξ < 6: quartet on the unit circle.
    II,
    /// ξ > 6: quartet on the imaginary axis.
    III,
    /// |ξ| = 6 (to tolerance): merged double roots; asymptotics degenerate.
    Boundary,
}

/// Stationary points of θ(·;ξ) and the region tag.
///
/// `points` is ordered `[ζ1, ζ2, ζ3, ζ4, ζ5, ζ6]` with ζ3 = +1, ζ4 = -1 and
/// (ζ1, ζ2) the quartet members inside the unit circle, (ζ5, ζ6) outside,
/// paired so that ζ1ζ5 = ζ2ζ6 = 1.  In region I the quartet is real with
/// ζ1 ∈ (0,1); in region III it is imaginary with ζ1 ∈ i(0,1); in region II
/// all four sit on the circle and the inner/outer split degenerates to the
/// conjugate pairing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhaseGeometry {
    pub xi: f64,
    pub points: [C64; 6],
    pub region: Region,
}

const BOUNDARY_TOL: f64 = 1e-12;

/// Solve 3z⁴+ξz²+3 = 0 in closed form (quadratic in z²) plus ±1.
pub fn stationary_points(xi: f64) -> PhaseGeometry {
    let one = C64::new(1.0, 0.0);
    if (xi.abs() - 6.0).abs() < BOUNDARY_TOL {
        // z² = -ξ/6 = ∓1: double roots at ±1 or ±i.
        let m = if xi < 0.0 { one } else { I };
        return PhaseGeometry {
            xi,
            points: [m, -m, one, -one, m, -m],
            region: Region::Boundary,
        };
    }
    let disc = C64::new(xi * xi - 36.0, 0.0);
    let root = disc.sqrt();
    // z² roots; product is 1 (Vieta on 3z⁴+ξz²+3), so w_small·w_big = 1.
    let w1 = (C64::new(-xi, 0.0) + root) / 6.0;
    let w2 = (C64::new(-xi, 0.0) - root) / 6.0;
    let (w_small, w_big) = if w1.norm() <= w2.norm() { (w1, w2) } else { (w2, w1) };
    // Branch: principal sqrt, then normalize region-I representatives to the
    // positive real axis and region-III ones to the upper imaginary axis.
    let mut zeta1 = w_small.sqrt();
    let mut zeta5 = w_big.sqrt();
    if xi < -6.0 {
        if zeta1.re < 0.0 {
            zeta1 = -zeta1;
        }
        if zeta5.re < 0.0 {
            zeta5 = -zeta5;
        }
        // exact pairing ζ1ζ5 = 1
        zeta5 = 1.0 / zeta1;
        PhaseGeometry {
            xi,
            points: [zeta1, -zeta1, one, -one, zeta5, -zeta5],
            region: Region::I,
        }
    } else if xi > 6.0 {
        if zeta1.im < 0.0 {
            zeta1 = -zeta1;
        }
        if zeta5.im < 0.0 {
            zeta5 = -zeta5;
        }
        zeta5 = -1.0 / zeta1; // both on i·ℝ⁺: 1/(i a) = -i/a
        PhaseGeometry {
            xi,
            points: [zeta1, -zeta1, one, -one, zeta5, -zeta5],
            region: Region::III,
        }
    } else {
        // |w| = 1: unimodular quartet e^{±iα}, -e^{∓iα}
        if zeta1.im < 0.0 {
            zeta1 = -zeta1;
        }
        let partner = zeta1.conj(); // = 1/ζ1 on the circle
        PhaseGeometry {
            xi,
            points: [zeta1, -zeta1, one, -one, partner, -partner],
            region: Region::II,
        }
    }
}

impl PhaseGeometry {
    /// The four real phase points of region I ordered ζ6 < ζ2 < 0 < ζ1 < ζ5,
    /// as used by the Γ-contour and the T_i boundary constants.
    pub fn real_quartet(&self) -> Result<RealQuartet> {
        if self.region != Region::I {
            return Err(Error::OutOfScope(
                "real stationary quartet only exists for ξ < -6".into(),
            ));
        }
        Ok(RealQuartet {
            zeta1: self.points[0].re,
            zeta2: -self.points[0].re,
            zeta5: self.points[4].re,
            zeta6: -self.points[4].re,
        })
    }
}

/// ζ1 ∈ (0,1), ζ2 = -ζ1, ζ5 = 1/ζ1, ζ6 = -ζ5.
#[derive(Debug, Clone, Copy)]
pub struct RealQuartet {
    pub zeta1: f64,
    pub zeta2: f64,
    pub zeta5: f64,
    pub zeta6: f64,
}

impl RealQuartet {
    pub fn by_index(&self, i: usize) -> f64 {
        match i {
            1 => self.zeta1,
            2 => self.zeta2,
            5 => self.zeta5,
            6 => self.zeta6,
            _ => panic!("phase point index must be one of 1,2,5,6"),
        }
    }
}

/// Sampled signature table of sign Re(2itθ) over a rectangular window.
pub fn signature_table(
    xi: f64,
    t: f64,
    nx: usize,
    ny: usize,
    window: (f64, f64, f64, f64),
) -> Vec<(f64, f64, i8)> {
    let (x0, x1, y0, y1) = window;
    let mut rows = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = y0 + (y1 - y0) * (j as f64 + 0.5) / ny as f64;
        for i in 0..nx {
            let x = x0 + (x1 - x0) * (i as f64 + 0.5) / nx as f64;
            let z = C64::new(x, y);
            let s = if z.norm() < 1e-12 {
                0.0
            } else {
                re_2it_theta(z, xi, t).unwrap_or(0.0)
            };
            rows.push((x, y, if s > 0.0 { 1 } else if s < 0.0 { -1 } else { 0 }));
        }
    }
    rows
}

/// Lens-sector geometry for the sign estimates of Re(2iθ).
///
/// Wedges open from the origin and from each stationary point at aperture
/// φ = min(θ0, π/4); the paper only requires θ0 "sufficiently small", so θ0
/// is a configuration knob (default 0.2 rad).  Index convention at a real
/// center c (region I):
///   j=1 up-left, j=2 up-right, j=3 down-right, j=4 down-left for i=0 (origin
///   wedges point toward ζ1/ζ2 instead: j=1 up toward ζ1, j=2 up toward ζ2,
///   j=3 down toward ζ2, j=4 down toward ζ1), matching the deformation figure.
#[derive(Debug, Clone)]
pub struct LensGeometry {
    pub xi: f64,
    pub phi: f64,
    pub quartet: Option<RealQuartet>,
}

impl LensGeometry {
    pub fn new(xi: f64, theta0: f64) -> Self {
        let phi = theta0.min(std::f64::consts::FRAC_PI_4);
        let quartet = stationary_points(xi).real_quartet().ok();
        LensGeometry { xi, phi, quartet }
    }

    /// A point inside the origin wedge Ω_{0j}, at polar radius r and a
    /// fraction f ∈ (0,1) of the aperture.
    pub fn omega0_sample(&self, j: usize, r: f64, f: f64) -> C64 {
        let ang = self.phi * f.clamp(1e-3, 0.999);
        let w = match j {
            1 => ang,
            2 => std::f64::consts::PI - ang,
            3 => std::f64::consts::PI + ang,
            4 => -ang,
            _ => panic!("origin wedge index must be 1..=4"),
        };
        C64::from_polar(r, w)
    }

    /// A point inside the stationary-point wedge Ω_{ij} (i ∈ {1,2,5,6}), at
    /// distance r from ζ_i.  j=1: up-left ray side, j=2: up-right, j=3:
    /// down-right, j=4: down-left, per the region-I deformation figure.
    pub fn omega_sample(&self, i: usize, j: usize, r: f64, f: f64) -> C64 {
        let q = self.quartet.expect("stationary wedges require region I");
        let c = q.by_index(i);
        let ang = self.phi * f.clamp(1e-3, 0.999);
        let w = match j {
            1 => std::f64::consts::PI - ang,
            2 => ang,
            3 => -ang,
            4 => std::f64::consts::PI + ang,
            _ => panic!("wedge index must be 1..=4"),
        };
        C64::new(c, 0.0) + C64::from_polar(r, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn theta_at_unit_is_xi_minus_two() {
        // z = 1 forces θ = ξ-2
        let v = theta(c(1.0, 0.0), -8.0).unwrap();
        assert!((v - c(-10.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn theta_vanishes_at_i() {
        for xi in [-8.0, 0.0, 10.0] {
            assert!(theta(I, xi).unwrap().norm() < 1e-14);
        }
    }

    #[test]
    fn theta_inversion_symmetry() {
        let z = c(2.0, 0.0);
        let a = theta(z, -8.0).unwrap();
        let b = theta(-1.0 / z, -8.0).unwrap();
        assert!((a + b).norm() < 1e-14);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let h = 1e-5;
        for &z in &[c(0.7, 0.4), c(-1.3, 0.9), c(0.2, -1.1)] {
            for &xi in &[-8.0, 3.0, 10.0] {
                let (tp, tpp) = theta_derivatives(z, xi).unwrap();
                let fd1 =
                    (theta(z + h, xi).unwrap() - theta(z - h, xi).unwrap()) / (2.0 * h);
                let fd2 = (theta_derivatives(z + h, xi).unwrap().0
                    - theta_derivatives(z - h, xi).unwrap().0)
                    / (2.0 * h);
                assert!((tp - fd1).norm() / (1.0 + tp.norm()) < 1e-6);
                assert!((tpp - fd2).norm() / (1.0 + tpp.norm()) < 1e-6);
            }
        }
    }

    #[test]
    fn derivative_zero_at_unit_points() {
        for xi in [-8.0, 2.0, 10.0] {
            let (tp, _) = theta_derivatives(c(1.0, 0.0), xi).unwrap();
            assert!(tp.norm() < 1e-14);
            let (tp, _) = theta_derivatives(c(-1.0, 0.0), xi).unwrap();
            assert!(tp.norm() < 1e-14);
        }
    }

    #[test]
    fn quartic_roots_at_xi10_match_closed_form() {
        // 3z⁴+10z²+3 = 0: z² ∈ {-3, -1/3}
        let g = stationary_points(10.0);
        assert_eq!(g.region, Region::III);
        let mods: Vec<f64> = g.points.iter().map(|p| p.norm()).collect();
        assert!((mods[0] - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((mods[4] - 3f64.sqrt()).abs() < 1e-12);
        for p in [g.points[0], g.points[4]] {
            assert!(p.re.abs() < 1e-14 && p.im > 0.0);
        }
    }

    #[test]
    fn region_one_points_real_and_paired() {
        let g = stationary_points(-8.0);
        assert_eq!(g.region, Region::I);
        let z1 = g.points[0];
        let z5 = g.points[4];
        assert!(z1.im.abs() < 1e-14 && z5.im.abs() < 1e-14);
        assert!((z1.re - 0.6718752).abs() < 1e-6);
        assert!((z5.re - 1.4883717).abs() < 1e-6);
        assert!(((z1 * z5) - c(1.0, 0.0)).norm() < 1e-12);
        for p in g.points {
            let (tp, _) = theta_derivatives(p, -8.0).unwrap();
            assert!(tp.norm() < 1e-10);
        }
    }

    #[test]
    fn boundary_tagging() {
        assert_eq!(stationary_points(-6.0).region, Region::Boundary);
        assert_eq!(stationary_points(6.0).region, Region::Boundary);
        let g = stationary_points(-6.0);
        assert!((g.points[0] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn region_two_on_circle() {
        let g = stationary_points(2.0);
        assert_eq!(g.region, Region::II);
        for p in [g.points[0], g.points[1], g.points[4], g.points[5]] {
            assert!((p.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn re_two_i_theta_vanishes_on_axis_and_circle() {
        assert_eq!(re_2i_theta(c(0.37, 0.0), -8.0).unwrap(), 0.0);
        let z = C64::from_polar(1.0, 0.83);
        assert!(re_2i_theta(z, -8.0).unwrap().abs() < 1e-13);
    }

    #[test]
    fn re_two_i_theta_matches_minus_two_im_theta() {
        for &z in &[c(1.1, 0.05), c(0.4, -0.3), c(-0.8, 1.2)] {
            for &xi in &[-8.0, 10.0] {
                let a = re_2i_theta(z, xi).unwrap();
                let b = -2.0 * theta(z, xi).unwrap().im;
                assert!((a - b).abs() < 1e-12 * (1.0 + b.abs()));
            }
        }
    }

    #[test]
    fn vieta_on_quartet() {
        for &xi in &[-9.3, -6.5, 7.2, 15.0] {
            let g = stationary_points(xi);
            let w1 = g.points[0] * g.points[0];
            let w2 = g.points[4] * g.points[4];
            assert!((w1 * w2 - c(1.0, 0.0)).norm() < 1e-10);
            assert!((w1 + w2 - c(-xi / 3.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn psi_equals_t_theta() {
        let z = c(0.3, 1.7);
        let (x, t) = (2.2, 0.7);
        let a = phase_psi(x, t, z);
        let b = t * theta(z, x / t).unwrap();
        assert!((a - b).norm() < 1e-12);
    }
}

//! Numerical inverse-scattering toolkit for the real nonlocal mKdV equation
//! with nonzero boundary conditions,
//!
//! ```text
//!   q_t(x,t) - 6 σ q(x,t) q(-x,-t) q_x(x,t) + q_xxx(x,t) = 0,
//!   q(x,0) = q0(x),   q0(x) -> q± as x -> ±∞,   |q±| = 1,  σ q+ q- = -1,
//! ```
//!
//! built around the uniformized spectral plane z (k = (z-1/z)/2, λ = (z+1/z)/2).
//!
//! The crate provides, as separately usable modules:
//!
//! * [`spectral`] — the phase function θ(z;ξ), its stationary points, the
//!   region classification in ξ = x/t, signature tables of Re(2itθ), and the
//!   lens-sector geometry used by the sign estimates;
//! * [`scattering`] — Jost solutions of the x-part of the Lax pair, the
//!   scattering matrix via Wronskians, reflection coefficients on the contour
//!   Σ = ℝ ∪ {|z|=1}, and the discrete spectrum with norming constants;
//! * [`transforms`] — the scalar Riemann–Hilbert dressing: ν(z), δ(z), the
//!   partition ∆/∇/Λ of the discrete spectrum, T(z), T(∞), T₁ and the
//!   regularized boundary values T_i(ζ_i);
//! * [`soliton`] — the reflectionless (outer-model) solve: a partial-fraction
//!   linear system producing m(z) and q(x,t) for arbitrary residue data;
//! * [`asymptotics`] — parabolic-cylinder coefficients, the second-order
//!   f_i terms and the long-time expansions in the regions ξ < -6 and ξ > 6
//!   together with the piecewise error exponent;
//! * [`oracle`] — an independent finite-difference ground truth: pointwise
//!   residual evaluation of the PDE and direct time evolution of the
//!   equivalent coupled local system.

pub mod asymptotics;
pub mod config;
pub mod contour;
pub mod ode;
pub mod oracle;
pub mod quad;
pub mod report;
pub mod scattering;
pub mod soliton;
pub mod special;
pub mod spectral;
pub mod transforms;

use thiserror::Error;

pub type C64 = num_complex::Complex64;

/// Imaginary unit shorthand used throughout.
pub const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("ODE integration failed at z = {z}: {detail}")]
    OdeFailure { z: C64, detail: String },
    #[error("quadrature did not converge (err = {err:.3e}, dist to contour = {dist:.3e})")]
    QuadratureFailure { err: f64, dist: f64 },
    #[error("spectral singularity: |s11| = {value:.3e} below threshold on Σ")]
    SpectralSingularity { value: f64 },
    #[error("branch ambiguity: |1 - ρρ̃| = {value:.3e} at z = {z}")]
    BranchAmbiguity { z: C64, value: f64 },
    #[error("pole hit: evaluation within {dist:.3e} of pole {pole}")]
    PoleHit { pole: C64, dist: f64 },
    #[error("singular linear system (condition estimate {cond:.3e}) at (x,t)=({x},{t})")]
    SingularSystem { x: f64, t: f64, cond: f64 },
    #[error("root finding: {0}")]
    RootFinding(String),
    #[error("blow-up detected at t = {t}: max|u| = {max:.3e}")]
    BlowUp { t: f64, max: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("gamma pole proximity: argument {z} within {dist:.3e} of a pole")]
    GammaPole { z: C64, dist: f64 },
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

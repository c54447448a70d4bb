//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands on real
//! intervals, with helpers for Cauchy kernels near the contour.
//!
//! The G7-K15 pair is the workhorse; intervals are split by a worst-first
//! queue until the Kronrod error estimate meets the requested tolerance.
//! Semi-infinite pieces are mapped algebraically onto (0,1).

use crate::C64;

/// 15-point Kronrod abscissae on [-1,1] (positive half; symmetric).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
/// Kronrod weights matching XGK.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
/// Embedded 7-point Gauss weights (odd Kronrod nodes).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        kron += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let kron = kron * h;
    let gauss = gauss * h;
    ((kron), (kron - gauss).norm())
}

/// Adaptive quadrature of `f` over [a,b]; returns (value, error estimate).
pub fn adaptive<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, tol: f64, max_iter: usize) -> (C64, f64) {
    let (v0, e0) = gk15(&f, a, b);
    let mut segs = vec![(a, b, v0, e0)];
    for _ in 0..max_iter {
        let total_err: f64 = segs.iter().map(|s| s.3).sum();
        if total_err < tol {
            break;
        }
        // split the worst segment
        let (idx, _) = segs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1 .3.partial_cmp(&b.1 .3).unwrap())
            .unwrap();
        let (sa, sb, _, _) = segs.swap_remove(idx);
        let m = 0.5 * (sa + sb);
        let (v1, e1) = gk15(&f, sa, m);
        let (v2, e2) = gk15(&f, m, sb);
        segs.push((sa, m, v1, e1));
        segs.push((m, sb, v2, e2));
    }
    let value = segs.iter().map(|s| s.2).sum();
    let err = segs.iter().map(|s| s.3).sum();
    (value, err)
}

/// ∫_a^∞ f(s) ds via s = a + u/(1-u), u ∈ (0,1).
pub fn adaptive_upper_halfline<F: Fn(f64) -> C64>(
    f: F,
    a: f64,
    tol: f64,
    max_iter: usize,
) -> (C64, f64) {
    adaptive(
        |u| {
            let d = 1.0 - u;
            f(a + u / d) / (d * d)
        },
        0.0,
        1.0 - 1e-12,
        tol,
        max_iter,
    )
}

/// ∫_{-∞}^b f(s) ds via s = b - u/(1-u).
pub fn adaptive_lower_halfline<F: Fn(f64) -> C64>(
    f: F,
    b: f64,
    tol: f64,
    max_iter: usize,
) -> (C64, f64) {
    adaptive(
        |u| {
            let d = 1.0 - u;
            f(b - u / d) / (d * d)
        },
        0.0,
        1.0 - 1e-12,
        tol,
        max_iter,
    )
}

/// ∫_a^b g(s)/(s-z) ds for z off [a,b], with the value g(s0) at the nearest
/// real point subtracted so the peaked part integrates in closed form:
///
/// ∫ g/(s-z) = ∫ (g - g(s0))/(s-z) + g(s0) [log(b-z) - log(a-z)].
///
/// Keeps the adaptive pass well conditioned down to dist(z, [a,b]) ~ 1e-6.
pub fn cauchy_segment<G: Fn(f64) -> C64>(
    g: G,
    a: f64,
    b: f64,
    z: C64,
    tol: f64,
    max_iter: usize,
) -> (C64, f64) {
    let s0 = z.re.clamp(a.min(b), a.max(b));
    let g0 = g(s0);
    let (smooth, err) = adaptive(
        |s| {
            let d = C64::new(s, 0.0) - z;
            (g(s) - g0) / d
        },
        a,
        b,
        tol,
        max_iter,
    );
    let log_term = ((C64::new(b, 0.0) - z).ln()) - ((C64::new(a, 0.0) - z).ln());
    (smooth + g0 * log_term, err)
}

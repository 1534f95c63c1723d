//! `li(x)` and `li_2(x)` by composite Gauss-Legendre quadrature.
//!
//! After `t = e^u` the integrands become `e^u / u` and `e^u / u^2`, which are
//! smooth on `[log 2, log x]`. Panels of width at most 1/2 in `u` (geometric
//! in `t`) with a 16-point rule reach full double precision; the error
//! estimate compares against the same rule on halved panels.

use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// `li(2) = PV int_0^2 dt / log t`.
pub const LI_AT_2: f64 = 1.045_163_780_117_493;

const ORDER: usize = 16;
const MAX_PANEL_WIDTH: f64 = 0.5;

/// A quadrature value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub est_error: f64,
    pub panels: usize,
}

/// Nodes and weights of the 16-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on `P_16`.
fn gauss_legendre() -> ([f64; ORDER], [f64; ORDER]) {
    let mut nodes = [0.0; ORDER];
    let mut weights = [0.0; ORDER];
    let n = ORDER as f64;
    for i in 0..ORDER / 2 {
        let mut z = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=ORDER {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if libm::fabs(dz) < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[ORDER - 1 - i] = z;
        weights[i] = w;
        weights[ORDER - 1 - i] = w;
    }
    (nodes, weights)
}

fn composite<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize, rule: &([f64; ORDER], [f64; ORDER])) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = CompensatedSum::new();
    for k in 0..panels {
        let lo = a + h * k as f64;
        let mid = lo + 0.5 * h;
        let mut s = 0.0;
        for (x, w) in rule.0.iter().zip(&rule.1) {
            s += w * f(mid + 0.5 * h * x);
        }
        total += 0.5 * h * s;
    }
    total.value()
}

/// `int_a^b f(u) du` over `u` with the panel-halving error estimate.
fn integrate_log_scale<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> QuadratureResult {
    if b <= a {
        return QuadratureResult { value: 0.0, est_error: 0.0, panels: 0 };
    }
    let rule = gauss_legendre();
    let panels = libm::ceil((b - a) / MAX_PANEL_WIDTH).max(1.0) as usize;
    let coarse = composite(&f, a, b, panels, &rule);
    let fine = composite(&f, a, b, 2 * panels, &rule);
    let rounding = 32.0 * f64::EPSILON * libm::fabs(fine);
    QuadratureResult { value: fine, est_error: libm::fabs(fine - coarse) + rounding, panels: 2 * panels }
}

/// `li_2(x) = int_2^x dt / log^2 t`.
pub fn li2(x: f64) -> Result<QuadratureResult> {
    if !x.is_finite() || x < 2.0 {
        return Err(Error::Domain("li2 needs finite x >= 2"));
    }
    Ok(integrate_log_scale(|u| libm::exp(u) / (u * u), core::f64::consts::LN_2, libm::log(x)))
}

/// `li(x) = li(2) + int_2^x dt / log t`, the principal-value convention.
pub fn li(x: f64) -> Result<QuadratureResult> {
    if !x.is_finite() || x < 2.0 {
        return Err(Error::Domain("li needs finite x >= 2"));
    }
    let mut q = integrate_log_scale(|u| libm::exp(u) / u, core::f64::consts::LN_2, libm::log(x));
    q.value += LI_AT_2;
    q.est_error += f64::EPSILON * LI_AT_2;
    Ok(q)
}

//! Analytic comparison functions: `li`, `li_2`, Chebyshev's `psi`, the zero
//! oscillation term `T(x)` and the deviation model `Delta-bar_N(x)`.
//!
//! `T(x) = sum_{gamma > 0} (cos(gamma log x) + 2 gamma sin(gamma log x)) / (gamma^2 + 1/4)`
//! is evaluated two ways: from a truncated table of zero ordinates, and from
//! `psi(x)` through the explicit formula. The two routes share no code.

mod psi;
mod quadrature;

pub use psi::{
    chebyshev_psi, chebyshev_psi_multi, is_prime_power, max_exponent, psi_in_range, t_from_psi, t_via_psi,
    OscillationValue, PsiPartial, PsiValue,
};
pub use quadrature::{li, li2, QuadratureResult, LI_AT_2};

use crate::sum::CompensatedSum;
use crate::zeros::ZeroTable;
use crate::{Error, Result};

/// Ordinates per block of the zero sum. Blocks are reduced in ascending
/// order, so the result depends on this size but not on how blocks are
/// scheduled.
pub const ZERO_BLOCK: usize = 4096;

/// Compensated sum of the `T(x)` terms over one block of ordinates.
pub fn zero_sum_block(ordinates: &[f64], log_x: f64) -> CompensatedSum {
    let mut s = CompensatedSum::new();
    for &g in ordinates {
        let (sin, cos) = libm::sincos(g * log_x);
        s += (cos + 2.0 * g * sin) / (g * g + 0.25);
    }
    s
}

/// Ordered reduction of per-block partial sums.
pub fn reduce_blocks<'a, I: IntoIterator<Item = &'a CompensatedSum>>(blocks: I) -> f64 {
    let mut total = CompensatedSum::new();
    for b in blocks {
        total.merge(b);
    }
    total.value()
}

/// `T(x)` truncated to the ordinates in `zeros`.
pub fn t_via_zeros(x: f64, zeros: &ZeroTable) -> Result<f64> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::Domain("T(x) needs finite x > 1"));
    }
    if zeros.is_empty() {
        return Err(Error::Input("zero table is empty"));
    }
    let log_x = libm::log(x);
    let blocks: alloc::vec::Vec<CompensatedSum> =
        zeros.ordinates().chunks(ZERO_BLOCK).map(|b| zero_sum_block(b, log_x)).collect();
    Ok(reduce_blocks(&blocks))
}

/// `Delta-bar_N(x) = -(2N log^2 x) / (8 x^{1/2} log^2 2N)`.
pub fn delta_bar(n: u64, x: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("Delta-bar needs N >= 1"));
    }
    if x.is_nan() || x <= 1.0 {
        return Err(Error::Domain("Delta-bar needs x > 1"));
    }
    let two_n = 2.0 * n as f64;
    let lx = libm::log(x);
    let ln = libm::log(two_n);
    Ok(-(two_n * lx * lx) / (8.0 * libm::sqrt(x) * ln * ln))
}

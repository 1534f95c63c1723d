//! Remainders `omega_2r`, quotients `Q_N`, the error function `Delta_N` and
//! the data series behind the `Delta_N` plots.
//!
//! With `L_2(x) = 2 C_2 li_2(x)`,
//!
//! ```text
//! Q_N(x)     = (Pi_N(x) - (S_N / C_2) L_2(x)) / (N li_2(x^{1/2}))
//! Delta_N(x) = Q_N(x) + T(x) + 1
//! ```
//!
//! Everything here is assembly over precomputed inputs: a pair-count table,
//! prefix sums carrying `C_2`, and one [`CheckpointContext`] per `x` holding
//! the quadratures and `T(x)`.

use alloc::vec::Vec;

use crate::analytic::{self, li, li2};
use crate::constants::{self, PrefixSums, TwinPrimeConstant};
use crate::paircount::PairCountTable;
use crate::sieve;
use crate::{Error, Result};

/// How `T(x)` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TMethod {
    /// From `psi(x)` via the explicit formula (the source of the published tables).
    Psi,
    /// From a truncated sum over zeta zeros.
    Zeros,
}

/// Per-checkpoint comparison values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckpointContext {
    pub x: u64,
    pub li2_x: f64,
    pub li2_sqrt_x: f64,
    /// `L_2(x) = 2 C_2 li_2(x)`
    pub l2: f64,
    pub t_x: f64,
}

impl CheckpointContext {
    pub fn new(x: u64, c2: &TwinPrimeConstant, t_x: f64) -> Result<Self> {
        if x < 4 {
            return Err(Error::Domain("checkpoint must be at least 4 so that sqrt(x) >= 2"));
        }
        let li2_x = li2(x as f64)?.value;
        let li2_sqrt_x = li2(libm::sqrt(x as f64))?.value;
        Ok(Self { x, li2_x, li2_sqrt_x, l2: 2.0 * c2.value * li2_x, t_x })
    }
}

/// One row of a `Delta_N` table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisRow {
    pub x: u64,
    pub two_n: u64,
    pub s_over_c2: f64,
    pub pi_n: u64,
    pub q_n: f64,
    pub t_x: f64,
    pub delta_n: f64,
    pub delta_bar: f64,
}

/// `omega_2r(x) = pi_2r(x) - 2 C_2r li_2(x)`.
pub fn omega_2r(ctx: &CheckpointContext, r: u64, counts: &PairCountTable, c2: &TwinPrimeConstant) -> Result<f64> {
    let pi = counts.count(r, ctx.x)?;
    let c2r = c2.value * constants::ratio(r)?.value();
    Ok(pi as f64 - 2.0 * c2r * ctx.li2_x)
}

/// `Q_N(x)` from the aggregate `Pi_N(x)` and `S_N / C_2`.
pub fn q_n(ctx: &CheckpointContext, n: u64, counts: &PairCountTable, sums: &PrefixSums) -> Result<f64> {
    let pi_n = counts.aggregate_pi(n, ctx.x)?;
    let s = sums.s_over_c2(n)?;
    Ok((pi_n as f64 - s * ctx.l2) / (n as f64 * ctx.li2_sqrt_x))
}

/// `Q_N(x)` as the normalized sum of the individual remainders.
pub fn q_n_from_remainders(ctx: &CheckpointContext, n: u64, counts: &PairCountTable, c2: &TwinPrimeConstant) -> Result<f64> {
    let mut total = crate::sum::CompensatedSum::new();
    for r in 1..=n {
        total += omega_2r(ctx, r, counts, c2)?;
    }
    Ok(total.value() / (n as f64 * ctx.li2_sqrt_x))
}

/// The full row for `(x, N)`, with `Delta_N = Q_N + T + 1`.
pub fn delta_n(ctx: &CheckpointContext, n: u64, counts: &PairCountTable, sums: &PrefixSums) -> Result<AnalysisRow> {
    let q = q_n(ctx, n, counts, sums)?;
    Ok(AnalysisRow {
        x: ctx.x,
        two_n: 2 * n,
        s_over_c2: sums.s_over_c2(n)?,
        pi_n: counts.aggregate_pi(n, ctx.x)?,
        q_n: q,
        t_x: ctx.t_x,
        delta_n: q + ctx.t_x + 1.0,
        delta_bar: analytic::delta_bar(n, ctx.x as f64)?,
    })
}

/// Rows for every `N` in `n_list`, in input order.
pub fn build_table(ctx: &CheckpointContext, n_list: &[u64], counts: &PairCountTable, sums: &PrefixSums) -> Result<Vec<AnalysisRow>> {
    n_list.iter().map(|&n| delta_n(ctx, n, counts, sums)).collect()
}

/// `2 (pi(x) - li(x)) / li(x^{1/2})`, to be compared with `-(T(x) + 1)`.
pub fn riemann_ratio_with(x: u64, pi_x: u64) -> Result<f64> {
    if x < 10 {
        return Err(Error::Domain("riemann ratio needs x >= 10"));
    }
    let lx = li(x as f64)?.value;
    let ls = li(libm::sqrt(x as f64))?.value;
    Ok(2.0 * (pi_x as f64 - lx) / ls)
}

pub fn riemann_ratio(x: u64) -> Result<f64> {
    riemann_ratio_with(x, sieve::prime_count(x)?)
}

/// Which of the two plot families a series belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FigureSpec {
    /// `Delta_N(x)` for fixed `x` against `2N`.
    FixedX { x: u64, two_n: Vec<u64> },
    /// `Delta_N(x)` for fixed `N` against `x`.
    FixedN { n: u64, xs: Vec<u64> },
}

/// Smallest and largest `2N` shown in the fixed-`x` plots; smaller gaps
/// dominate the picture and are left out.
pub const FIGURE_TWO_N_RANGE: (u64, u64) = (50, 5000);

/// `x = 10^6` and `i * 10^j` for `j = 6..=11`, `i = 1..=10`, up to `max_x`.
pub fn figure_x_grid(max_x: u64) -> Vec<u64> {
    let mut xs = Vec::new();
    for j in 6..=11u32 {
        for i in 1..=10u64 {
            let x = i * 10u64.pow(j);
            if x <= max_x && xs.last() != Some(&x) {
                xs.push(x);
            }
        }
    }
    xs
}

impl FigureSpec {
    /// Every even `2N` from 50 to 5000.
    pub fn fixed_x(x: u64) -> Self {
        let (lo, hi) = FIGURE_TWO_N_RANGE;
        FigureSpec::FixedX { x, two_n: (lo..=hi).step_by(2).collect() }
    }

    pub fn fixed_n(n: u64, max_x: u64) -> Self {
        FigureSpec::FixedN { n, xs: figure_x_grid(max_x) }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FigureSpec::FixedX { two_n, .. } => {
                let (lo, hi) = FIGURE_TWO_N_RANGE;
                if two_n.is_empty() || two_n.iter().any(|&m| m % 2 != 0 || m < lo || m > hi) {
                    return Err(Error::Input("fixed-x sweep needs even 2N within 50..=5000"));
                }
                if two_n.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Input("2N values must be strictly increasing"));
                }
            }
            FigureSpec::FixedN { n, xs } => {
                if *n == 0 || *n > FIGURE_TWO_N_RANGE.1 / 2 {
                    return Err(Error::Input("fixed-N sweep needs 1 <= N <= 2500"));
                }
                let grid = figure_x_grid(u64::MAX);
                if xs.is_empty() || xs.iter().any(|x| !grid.contains(x)) {
                    return Err(Error::Input("x values must come from the grid i * 10^j, j = 6..=11"));
                }
                if xs.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Input("x values must be strictly increasing"));
                }
            }
        }
        Ok(())
    }

    /// Checkpoints and `N` a pair-count table must cover.
    pub fn requirements(&self) -> (Vec<u64>, u64) {
        match self {
            FigureSpec::FixedX { x, two_n } => (alloc::vec![*x], two_n.last().copied().unwrap_or(2) / 2),
            FigureSpec::FixedN { n, xs } => (xs.clone(), *n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigurePoint {
    pub abscissa: f64,
    pub delta_n: f64,
    pub delta_bar: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSeries {
    pub spec: FigureSpec,
    pub points: Vec<FigurePoint>,
}

impl FigureSeries {
    pub fn has_delta_bar(&self) -> bool {
        self.points.first().is_some_and(|p| p.delta_bar.is_some())
    }
}

/// Builds the series; `contexts` must hold one entry per required `x`.
pub fn figure_series(
    spec: &FigureSpec,
    contexts: &[CheckpointContext],
    counts: &PairCountTable,
    sums: &PrefixSums,
) -> Result<FigureSeries> {
    spec.validate()?;
    let find = |x: u64| {
        contexts.iter().find(|c| c.x == x).ok_or(Error::Input("missing checkpoint context for figure"))
    };
    let mut points = Vec::new();
    match spec {
        FigureSpec::FixedX { x, two_n } => {
            let ctx = find(*x)?;
            let overlay = *x == 1_000_000 || *x == 100_000_000;
            for &m in two_n {
                let row = delta_n(ctx, m / 2, counts, sums)?;
                points.push(FigurePoint {
                    abscissa: m as f64,
                    delta_n: row.delta_n,
                    delta_bar: overlay.then_some(row.delta_bar),
                });
            }
        }
        FigureSpec::FixedN { n, xs } => {
            for &x in xs {
                let row = delta_n(find(x)?, *n, counts, sums)?;
                points.push(FigurePoint { abscissa: x as f64, delta_n: row.delta_n, delta_bar: None });
            }
        }
    }
    Ok(FigureSeries { spec: spec.clone(), points })
}

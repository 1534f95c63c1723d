//! Computation steps shared by the subcommands and the verification suite.

use primepair_core::analysis::{self, AnalysisRow, CheckpointContext, TMethod};
use primepair_core::analytic::t_from_psi;
use primepair_core::constants::{self, PrefixSums, TwinPrimeConstant, DEFAULT_C2_PRIME_LIMIT};
use primepair_core::paircount::PairCountTable;
use primepair_core::sieve::{SieveConfig, DEFAULT_SEGMENT_SIZE};
use primepair_core::zeros::ZeroTable;

use crate::cache::PairCache;
use crate::error::{CliError, Result};
use crate::parallel;
use crate::reference;

/// Sieve settings, cache and constants for one run.
pub struct Engine {
    pub segment_size: u64,
    pub workers: usize,
    pub cache: Option<PairCache>,
    pub c2_prime_limit: u64,
    c2: Option<TwinPrimeConstant>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(default_workers())
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

impl Engine {
    pub fn new(workers: usize) -> Self {
        Self {
            segment_size: DEFAULT_SEGMENT_SIZE,
            workers,
            cache: None,
            c2_prime_limit: DEFAULT_C2_PRIME_LIMIT,
            c2: None,
        }
    }

    pub fn with_cache(mut self, cache: PairCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn sieve_config(&self) -> SieveConfig {
        SieveConfig::new(2).with_segment_size(self.segment_size).with_workers(self.workers)
    }

    pub fn c2(&mut self) -> Result<TwinPrimeConstant> {
        if let Some(c) = self.c2 {
            return Ok(c);
        }
        let c = constants::twin_prime_constant(self.c2_prime_limit)?;
        log::info!("C2 = {:.12} (tail bound {:.1e}, primes to {})", c.value, c.tail_bound, c.prime_limit);
        self.c2 = Some(c);
        Ok(c)
    }

    pub fn prefix_sums(&mut self, n: u64) -> Result<PrefixSums> {
        let c2 = self.c2()?;
        Ok(constants::prefix_sums(n, c2)?)
    }

    /// Pair counts, from the cache when it covers the request.
    pub fn pair_counts(&self, checkpoints: &[u64], max_half_gap: u64) -> Result<PairCountTable> {
        if let Some(cache) = &self.cache {
            if let Some(table) = cache.lookup(checkpoints, max_half_gap)? {
                return Ok(table);
            }
        }
        let before = parallel::segments_sieved();
        let table = parallel::count_pairs(checkpoints, max_half_gap, &self.sieve_config())?;
        log::info!("pair counts computed, {} segments sieved", parallel::segments_sieved() - before);
        if let Some(cache) = &self.cache {
            let path = cache.store(&table)?;
            log::info!("pair counts cached in {}", path.display());
        }
        Ok(table)
    }

    /// `T(x)` at every `x`, which must be strictly ascending.
    pub fn t_values(&self, xs: &[u64], method: TMethod, zeros: Option<&ZeroTable>) -> Result<Vec<f64>> {
        match method {
            TMethod::Psi => parallel::chebyshev_psi_multi(xs, &self.sieve_config())?
                .iter()
                .map(|psi| {
                    let t = t_from_psi(psi)?;
                    if t.at_prime_power {
                        log::warn!("x = {} is a prime power; T(x) is off by half a jump", t.x);
                    }
                    Ok(t.value)
                })
                .collect(),
            TMethod::Zeros => {
                let zeros = zeros.ok_or_else(|| {
                    CliError::Config("T via zeros needs a zero table: pass --zeros-file or set PRIMEPAIR_ZEROS".into())
                })?;
                xs.iter().map(|&x| Ok(parallel::t_via_zeros(x as f64, zeros, self.workers)?)).collect()
            }
        }
    }

    pub fn contexts(&mut self, xs: &[u64], method: TMethod, zeros: Option<&ZeroTable>) -> Result<Vec<CheckpointContext>> {
        let c2 = self.c2()?;
        let ts = self.t_values(xs, method, zeros)?;
        xs.iter().zip(ts).map(|(&x, t)| Ok(CheckpointContext::new(x, &c2, t)?)).collect()
    }

    /// `Delta_N` rows at one `x`.
    pub fn table(&mut self, x: u64, n_list: &[u64], method: TMethod, zeros: Option<&ZeroTable>) -> Result<Vec<AnalysisRow>> {
        let n_max = n_list.iter().copied().max().unwrap_or(1);
        let counts = self.pair_counts(&[x], n_max)?;
        let sums = self.prefix_sums(n_max)?;
        let ctx = self.contexts(&[x], method, zeros)?[0];
        Ok(analysis::build_table(&ctx, n_list, &counts, &sums)?)
    }
}

/// One comparison against a published value.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub got: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: f64, got: f64, tolerance: f64) -> Self {
        Self { name: name.into(), expected, got, tolerance }
    }

    pub fn exact(name: impl Into<String>, expected: u64, got: u64) -> Self {
        Self::new(name, expected as f64, got as f64, 0.0)
    }

    pub fn passed(&self) -> bool {
        (self.got - self.expected).abs() <= self.tolerance
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        if self.tolerance == 0.0 {
            format!("{status} {}: expected {} got {}", self.name, self.expected, self.got)
        } else {
            // one digit beyond the tolerance, and never fewer than the tables print
            let digits = ((-self.tolerance.log10()).ceil() as usize + 1).max(5);
            format!(
                "{status} {}: expected {:.digits$} got {:.digits$} (diff {:+.1e}, tol {:.0e})",
                self.name,
                self.expected,
                self.got,
                self.got - self.expected,
                self.tolerance
            )
        }
    }
}

/// Tolerance for the printed `Delta_N` values.
pub const DELTA_TOLERANCE: f64 = 1e-4;
/// Tolerance for the printed `T(x)` values.
pub const T_TOLERANCE: f64 = 2e-5;

/// Published-value checks at `x`: pair counts, and where available `T`,
/// `L_2`, `S_N / C_2`, `Pi_N` and `Delta_N`.
pub fn verify(engine: &mut Engine, x: u64) -> Result<Vec<Check>> {
    let column = reference::table1_column(x);
    let rows = reference::delta_rows(x);
    if column.is_none() && rows.is_none() {
        let known: Vec<String> = reference::TABLE1_X.iter().map(u64::to_string).collect();
        return Err(CliError::Usage(format!("no published values at x = {x}; use one of {}", known.join(", "))));
    }
    let n_max = if rows.is_some() { 2500 } else { 105 };
    let counts = engine.pair_counts(&[x], n_max)?;
    let mut checks = Vec::new();
    if let Some(col) = column {
        for row in &reference::TABLE1 {
            let got = counts.count(row.two_r / 2, x)?;
            checks.push(Check::exact(format!("pi_{}({x})", row.two_r), row.counts[col], got));
        }
    }
    if let Some(rows) = rows {
        let c2 = engine.c2()?;
        let sums = engine.prefix_sums(n_max)?;
        let t = engine.t_values(&[x], TMethod::Psi, None)?[0];
        let ctx = CheckpointContext::new(x, &c2, t)?;
        if let Some(expected) = reference::t_psi(x) {
            checks.push(Check::new(format!("T({x})"), expected, t, T_TOLERANCE));
        }
        if let Some(expected) = reference::l2(x) {
            checks.push(Check::new(format!("L2({x})"), expected, ctx.l2, 1e-2));
        }
        for r in rows {
            let row = analysis::delta_n(&ctx, r.two_n / 2, &counts, &sums)?;
            checks.push(Check::exact(format!("Pi_N(2N={}, {x})", r.two_n), r.pi_n, row.pi_n));
            checks.push(Check::new(format!("Delta_N(2N={}, {x})", r.two_n), r.delta_n, row.delta_n, DELTA_TOLERANCE));
        }
        for &(two_n, expected) in &reference::S_OVER_C2 {
            checks.push(Check::new(format!("S_N/C2(2N={two_n})"), expected, sums.s_over_c2(two_n / 2)?, 1e-6));
        }
    }
    Ok(checks)
}

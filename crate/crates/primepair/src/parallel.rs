//! Multi-threaded drivers over the core kernels.
//!
//! Every driver returns exactly what its serial counterpart in the core crate
//! returns. Integer count matrices are merged in any order; floating-point
//! partial sums are produced in parallel but merged in ascending range order.

use std::sync::atomic::{AtomicU64, Ordering};

use primepair_core::analytic::{self, psi_in_range, PsiPartial, PsiValue, ZERO_BLOCK};
use primepair_core::paircount::{count_pairs_in_range, PairCountLayout, PairCountTable, PartialPairCounts};
use primepair_core::sieve::{BasePrimes, SieveConfig};
use primepair_core::sum::CompensatedSum;
use primepair_core::zeros::ZeroTable;
use primepair_core::Error;
use rayon::prelude::*;

use crate::progress::Progress;

static SEGMENTS_SIEVED: AtomicU64 = AtomicU64::new(0);

/// Segments sieved by this process so far.
pub fn segments_sieved() -> u64 {
    SEGMENTS_SIEVED.load(Ordering::Relaxed)
}

/// Ranges mapped in parallel before their results are folded in order.
const ORDERED_CHUNK: usize = 64;

/// Runs `f` on a pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|_| Error::Input("could not start worker threads"))?;
    Ok(pool.install(f))
}

/// `pi_2r(x_j)` for `1 <= r <= max_half_gap` at every checkpoint.
pub fn count_pairs(checkpoints: &[u64], max_half_gap: u64, config: &SieveConfig) -> Result<PairCountTable, Error> {
    let layout = PairCountLayout::new(checkpoints, max_half_gap)?;
    let cfg = SieveConfig { limit: layout.max_checkpoint().max(2), ..*config };
    cfg.validate_for_pairs(2 * max_half_gap)?;
    let base = BasePrimes::new(layout.sieve_limit())?;
    let ranges: Vec<(u64, u64)> = cfg.ranges().collect();
    let progress = Progress::new("pair counts", ranges.len() as u64);
    let total = with_workers(cfg.worker_count, || {
        ranges
            .par_iter()
            .fold(
                || (PartialPairCounts::empty(layout.clone()), Vec::new()),
                |(mut acc, mut scratch), &(lo, hi)| {
                    let part = count_pairs_in_range(&layout, lo, hi, &base, &mut scratch);
                    acc.merge(&part).expect("same layout");
                    SEGMENTS_SIEVED.fetch_add(1, Ordering::Relaxed);
                    progress.tick();
                    (acc, scratch)
                },
            )
            .map(|(acc, _)| acc)
            .reduce(
                || PartialPairCounts::empty(layout.clone()),
                |mut a, b| {
                    a.merge(&b).expect("same layout");
                    a
                },
            )
    })?;
    progress.finish();
    Ok(total.finish())
}

/// `psi(x_j)` at strictly ascending checkpoints.
pub fn chebyshev_psi_multi(checkpoints: &[u64], config: &SieveConfig) -> Result<Vec<PsiValue>, Error> {
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Input("checkpoints must be strictly ascending"));
    }
    let mut total = PsiPartial::new(checkpoints.len());
    let last = checkpoints.last().copied().unwrap_or(0);
    if last >= 2 {
        let cfg = SieveConfig { limit: last, ..*config };
        cfg.validate()?;
        let base = BasePrimes::new(last)?;
        let ranges: Vec<(u64, u64)> = cfg.ranges().collect();
        let progress = Progress::new("psi", ranges.len() as u64);
        with_workers(cfg.worker_count, || {
            for chunk in ranges.chunks(ORDERED_CHUNK) {
                let parts: Vec<PsiPartial> = chunk
                    .par_iter()
                    .map(|&(lo, hi)| {
                        let p = psi_in_range(checkpoints, lo, hi, &base);
                        SEGMENTS_SIEVED.fetch_add(1, Ordering::Relaxed);
                        progress.tick();
                        p
                    })
                    .collect();
                for p in &parts {
                    total.merge(p);
                }
            }
        })?;
        progress.finish();
    }
    Ok(total.finish(checkpoints))
}

/// `T(x)` from a zero table, block sums computed in parallel.
pub fn t_via_zeros(x: f64, zeros: &ZeroTable, workers: usize) -> Result<f64, Error> {
    if !x.is_finite() || x <= 1.0 {
        return Err(Error::Domain("T(x) needs finite x > 1"));
    }
    let log_x = x.ln();
    let blocks: Vec<CompensatedSum> = with_workers(workers, || {
        zeros.ordinates().par_chunks(ZERO_BLOCK).map(|b| analytic::zero_sum_block(b, log_x)).collect()
    })?;
    Ok(analytic::reduce_blocks(&blocks))
}

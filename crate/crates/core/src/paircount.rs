//! Prime-pair counts `pi_2r(x)` and the log-weighted pair sums.
//!
//! A pair `(p, p + 2r)` belongs to its smaller member `p`: it is counted at
//! every checkpoint `x_j >= p`, whether or not `p + 2r` exceeds `x_j`. The
//! counting pass walks the primes of `[lo, hi)` once and, for each `p`, looks
//! ahead at the primes of `(p, p + 2N]`. The sieve for a range therefore
//! extends `2N` past `hi`, which is the overlap that lets independent ranges
//! be counted separately and summed.

use alloc::vec;
use alloc::vec::Vec;

use crate::sieve::{self, is_prime_u64, BasePrimes, SieveConfig};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Checkpoints and gap bound shared by all partial and final counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCountLayout {
    checkpoints: Vec<u64>,
    max_half_gap: u64,
}

impl PairCountLayout {
    pub fn new(checkpoints: &[u64], max_half_gap: u64) -> Result<Self> {
        if checkpoints.is_empty() {
            return Err(Error::Input("checkpoint list is empty"));
        }
        if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input("checkpoints must be strictly ascending"));
        }
        if max_half_gap == 0 {
            return Err(Error::Input("max half gap N must be at least 1"));
        }
        let last = *checkpoints.last().unwrap();
        if last.checked_add(2 * max_half_gap).is_none() {
            return Err(Error::Overflow("largest checkpoint plus 2N exceeds u64"));
        }
        Ok(Self { checkpoints: checkpoints.to_vec(), max_half_gap })
    }

    pub fn checkpoints(&self) -> &[u64] {
        &self.checkpoints
    }

    pub fn max_half_gap(&self) -> u64 {
        self.max_half_gap
    }

    pub fn max_checkpoint(&self) -> u64 {
        *self.checkpoints.last().unwrap()
    }

    /// Largest integer the sieve has to classify.
    pub fn sieve_limit(&self) -> u64 {
        self.max_checkpoint() + 2 * self.max_half_gap
    }

    fn width(&self) -> usize {
        self.max_half_gap as usize
    }
}

/// Pair counts of one range, split by the checkpoint interval
/// `(x_{j-1}, x_j]` that contains the smaller member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPairCounts {
    layout: PairCountLayout,
    /// bucket-major: `buckets[j * N + (r - 1)]`
    buckets: Vec<u64>,
}

impl PartialPairCounts {
    pub fn empty(layout: PairCountLayout) -> Self {
        let n = layout.checkpoints.len() * layout.width();
        Self { layout, buckets: vec![0; n] }
    }

    /// Elementwise sum; the merge is commutative and associative.
    pub fn merge(&mut self, other: &PartialPairCounts) -> Result<()> {
        if self.layout != other.layout {
            return Err(Error::Input("cannot merge counts with different layouts"));
        }
        for (a, b) in self.buckets.iter_mut().zip(&other.buckets) {
            *a += b;
        }
        Ok(())
    }

    /// Cumulative sums over the buckets give `pi_2r(x_j)`.
    pub fn finish(self) -> PairCountTable {
        let k = self.layout.checkpoints.len();
        let n = self.layout.width();
        let mut counts = vec![0u64; k * n];
        for r in 0..n {
            let mut acc = 0;
            for j in 0..k {
                acc += self.buckets[j * n + r];
                counts[r * k + j] = acc;
            }
        }
        PairCountTable { layout: self.layout, counts }
    }
}

/// Counts the pairs whose smaller member lies in `[lo, hi)`.
///
/// `base` must cover `min(hi, x_k + 1) + 2N - 1`, and `scratch` is a reusable
/// buffer for the prime list of the extended range.
pub fn count_pairs_in_range(
    layout: &PairCountLayout,
    lo: u64,
    hi: u64,
    base: &BasePrimes,
    scratch: &mut Vec<u64>,
) -> PartialPairCounts {
    let mut out = PartialPairCounts::empty(layout.clone());
    let owned_hi = hi.min(layout.max_checkpoint() + 1);
    let lo = lo.max(3);
    if lo >= owned_hi {
        return out;
    }
    let span = 2 * layout.max_half_gap;
    scratch.clear();
    scratch.extend(sieve::sieve_segment(lo, owned_hi + span, base).primes());

    let n = layout.width();
    let checkpoints = &layout.checkpoints;
    let mut j = 0usize;
    for (i, &p) in scratch.iter().enumerate() {
        if p >= owned_hi {
            break;
        }
        while checkpoints[j] < p {
            j += 1;
        }
        let row = &mut out.buckets[j * n..(j + 1) * n];
        let reach = p + span;
        for &q in &scratch[i + 1..] {
            if q > reach {
                break;
            }
            row[((q - p) / 2 - 1) as usize] += 1;
        }
    }
    out
}

/// `pi_2r(x_j)` for `1 <= r <= N` and every checkpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCountTable {
    layout: PairCountLayout,
    /// row-major by `r`: `counts[(r - 1) * k + j]`
    counts: Vec<u64>,
}

impl PairCountTable {
    /// Builds a table from explicit counts, e.g. when reading a cache file.
    /// `rows[r - 1][j]` is `pi_2r(x_j)`.
    pub fn from_rows(layout: PairCountLayout, rows: &[Vec<u64>]) -> Result<Self> {
        let k = layout.checkpoints.len();
        if rows.len() != layout.width() || rows.iter().any(|row| row.len() != k) {
            return Err(Error::Input("count matrix does not match checkpoints and N"));
        }
        if rows.iter().any(|row| row.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::CorruptData("pair counts decrease with x"));
        }
        let counts = rows.iter().flatten().copied().collect();
        Ok(Self { layout, counts })
    }

    pub fn layout(&self) -> &PairCountLayout {
        &self.layout
    }

    pub fn checkpoints(&self) -> &[u64] {
        &self.layout.checkpoints
    }

    pub fn max_half_gap(&self) -> u64 {
        self.layout.max_half_gap
    }

    fn column(&self, x: u64) -> Result<usize> {
        self.layout
            .checkpoints
            .binary_search(&x)
            .map_err(|_| Error::Input("x is not one of the table's checkpoints"))
    }

    /// `pi_2r(x)` for a checkpoint `x` and `1 <= r <= N`.
    pub fn count(&self, r: u64, x: u64) -> Result<u64> {
        if r == 0 || r > self.layout.max_half_gap {
            return Err(Error::Input("half gap r outside 1..=N"));
        }
        let j = self.column(x)?;
        Ok(self.counts[(r as usize - 1) * self.layout.checkpoints.len() + j])
    }

    /// `Pi_N(x) = sum_{r <= N} pi_2r(x)`.
    pub fn aggregate_pi(&self, n: u64, x: u64) -> Result<u64> {
        if n == 0 || n > self.layout.max_half_gap {
            return Err(Error::Input("N outside 1..=max_half_gap"));
        }
        let j = self.column(x)?;
        let k = self.layout.checkpoints.len();
        Ok((0..n as usize).map(|r| self.counts[r * k + j]).sum())
    }

    /// All `(x, 2r, count)` triples, ordered by `x` then `2r`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        let k = self.layout.checkpoints.len();
        let n = self.layout.width();
        (0..k).flat_map(move |j| {
            (0..n).map(move |r| {
                (self.layout.checkpoints[j], 2 * (r as u64 + 1), self.counts[r * k + j])
            })
        })
    }

    /// Restriction to a subset of checkpoints and a smaller `N`.
    pub fn restrict(&self, checkpoints: &[u64], max_half_gap: u64) -> Result<PairCountTable> {
        let layout = PairCountLayout::new(checkpoints, max_half_gap)?;
        if max_half_gap > self.layout.max_half_gap {
            return Err(Error::Input("requested N exceeds the table's N"));
        }
        let mut rows = Vec::with_capacity(max_half_gap as usize);
        for r in 1..=max_half_gap {
            rows.push(checkpoints.iter().map(|&x| self.count(r, x)).collect::<Result<Vec<_>>>()?);
        }
        PairCountTable::from_rows(layout, &rows)
    }
}

/// Counts `pi_2r(x_j)` serially, segment by segment.
///
/// The ranges follow `config.segment_size`; the result does not depend on it.
pub fn count_pairs(checkpoints: &[u64], max_half_gap: u64, config: &SieveConfig) -> Result<PairCountTable> {
    let layout = PairCountLayout::new(checkpoints, max_half_gap)?;
    let cfg = SieveConfig { limit: layout.max_checkpoint().max(2), ..*config };
    cfg.validate_for_pairs(2 * max_half_gap)?;
    let base = BasePrimes::new(layout.sieve_limit())?;
    let mut total = PartialPairCounts::empty(layout.clone());
    let mut scratch = Vec::new();
    for (lo, hi) in cfg.ranges() {
        total.merge(&count_pairs_in_range(&layout, lo, hi, &base, &mut scratch))?;
    }
    Ok(total.finish())
}

/// `theta_2r`, `psi_2r` and `theta*_2r` at one `(x, r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedPairSums {
    pub x: u64,
    pub r: u64,
    /// `sum_{p <= x, p + 2r prime} log^2 p`
    pub theta: f64,
    /// `sum_{n <= x} Lambda(n) Lambda(n + 2r)`
    pub psi: f64,
    /// `sum_{p <= x, p^2 + 2r prime} log^2 p + sum_{p <= x, p^2 - 2r prime} log^2 p`
    pub theta_star: f64,
}

/// Prime powers `p^k` with `k >= 2` up to a limit, sorted, with `log p`.
fn higher_prime_powers(primes: &[u64], limit: u64) -> Vec<(u64, f64)> {
    let mut out = Vec::new();
    for &p in primes {
        let Some(mut q) = p.checked_mul(p) else { break };
        if q > limit {
            break;
        }
        let lp = libm::log(p as f64);
        while q <= limit {
            out.push((q, lp));
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
    }
    out.sort_unstable_by_key(|e| e.0);
    out
}

/// `theta*_2r(x)` for every `1 <= r <= n`, one primality scan per `p^2 +- 2r`.
pub fn theta_star_sums(x: u64, n: u64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Input("N must be at least 1"));
    }
    x.checked_mul(x)
        .and_then(|sq| sq.checked_add(2 * n))
        .ok_or(Error::Overflow("x^2 + 2r does not fit in 64 bits"))?;
    let primes = sieve::primes_vec(x)?;
    let mut sums = vec![CompensatedSum::new(); n as usize];
    for &p in &primes {
        let sq = p * p;
        let l = libm::log(p as f64);
        let w = l * l;
        for r in 1..=n {
            let d = 2 * r;
            let mut hits = is_prime_u64(sq + d) as u32;
            if sq > d {
                hits += is_prime_u64(sq - d) as u32;
            }
            if hits > 0 {
                sums[(r - 1) as usize] += hits as f64 * w;
            }
        }
    }
    Ok(sums.iter().map(CompensatedSum::value).collect())
}

/// The three weighted pair sums of `(x, r)`.
///
/// `Lambda` is read off the sieve for primes and off an explicit list of
/// higher prime powers, never from floating-point tests.
pub fn weighted_sums(x: u64, r: u64) -> Result<WeightedPairSums> {
    if x < 2 {
        return Err(Error::Domain("weighted sums need x >= 2"));
    }
    if r == 0 {
        return Err(Error::Domain("half gap r must be at least 1"));
    }
    let d = 2 * r;
    let top = x.checked_add(d).ok_or(Error::Overflow("x + 2r exceeds u64"))?;
    let base = BasePrimes::new(top)?;
    let seg = sieve::sieve_segment(2, top + 1, &base);
    let primes: Vec<u64> = seg.primes().collect();
    let powers = higher_prime_powers(&primes, top);
    let lambda = |m: u64| -> f64 {
        if seg.is_prime(m) {
            libm::log(m as f64)
        } else {
            powers.binary_search_by_key(&m, |e| e.0).map_or(0.0, |i| powers[i].1)
        }
    };

    let mut theta = CompensatedSum::new();
    let mut psi = CompensatedSum::new();
    for &p in primes.iter().take_while(|&&p| p <= x) {
        let lq = lambda(p + d);
        if lq > 0.0 {
            let lp = libm::log(p as f64);
            psi += lp * lq;
            if seg.is_prime(p + d) {
                theta += lp * lp;
            }
        }
    }
    for &(m, lp) in powers.iter().take_while(|e| e.0 <= x) {
        let lq = lambda(m + d);
        if lq > 0.0 {
            psi += lp * lq;
        }
    }
    let theta_star = theta_star_sums(x, r)?[(r - 1) as usize];
    Ok(WeightedPairSums { x, r, theta: theta.value(), psi: psi.value(), theta_star })
}

/// `(1/N) sum_{r <= N} theta*_2r(x) / (2x)`, expected to approach 1.
pub fn theta_star_mean(x: u64, n: u64) -> Result<f64> {
    if x < 2 {
        return Err(Error::Domain("x must be at least 2"));
    }
    let sums = theta_star_sums(x, n)?;
    let total: CompensatedSum = sums.iter().copied().collect();
    Ok(total.value() / n as f64 / (2.0 * x as f64))
}

//! Segmented sieve of Eratosthenes.
//!
//! The sieve works on half-open intervals `[lo, hi)` called segments, each
//! backed by an odd-only bitmap; 2 is tracked by a flag. Base primes up to
//! `sqrt(limit)` come from a plain (non-segmented) sieve computed once and
//! shared read-only by every segment, so segments can be sieved in any order
//! or concurrently and always produce the same bits.

mod primality;
mod segment;

use alloc::vec::Vec;

use crate::{Error, Result};

pub use primality::is_prime_u64;
pub use segment::{sieve_segment, PrimeSegment, SegmentPrimes};

/// Default segment length in integers (not bits).
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;

/// Sieve limits and partitioning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Largest integer the sieve must classify.
    pub limit: u64,
    /// Segment length in integers.
    pub segment_size: u64,
    /// Number of segments a driver may sieve concurrently.
    pub worker_count: usize,
}

impl SieveConfig {
    pub fn new(limit: u64) -> Self {
        Self { limit, segment_size: DEFAULT_SEGMENT_SIZE, worker_count: 1 }
    }

    pub fn with_segment_size(mut self, segment_size: u64) -> Self {
        self.segment_size = segment_size;
        self
    }

    pub fn with_workers(mut self, worker_count: usize) -> Self {
        self.worker_count = worker_count;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.limit < 2 {
            return Err(Error::EmptyRange { limit: self.limit });
        }
        if self.segment_size < 16 || !self.segment_size.is_multiple_of(2) {
            return Err(Error::Input("segment size must be even and at least 16"));
        }
        if self.worker_count == 0 {
            return Err(Error::Input("worker count must be at least 1"));
        }
        Ok(())
    }

    /// Pair counting reads `2N` past the end of every segment; the window
    /// must be comfortably inside one segment.
    pub fn validate_for_pairs(&self, max_gap: u64) -> Result<()> {
        self.validate()?;
        if self.segment_size < 2 * max_gap {
            return Err(Error::Input("segment size must be at least twice the largest gap"));
        }
        Ok(())
    }

    /// Segment boundaries `[lo, hi)` covering `[2, limit]` in ascending order.
    pub fn ranges(&self) -> impl Iterator<Item = (u64, u64)> + Clone {
        let end = self.limit.saturating_add(1);
        let size = self.segment_size;
        let mut lo = 2u64;
        core::iter::from_fn(move || {
            if lo >= end {
                return None;
            }
            let hi = lo.saturating_add(size).min(end);
            let r = (lo, hi);
            lo = hi;
            Some(r)
        })
    }
}

/// Odd primes up to `isqrt(limit)`, enough to sieve any segment below `limit + 1`.
#[derive(Debug, Clone)]
pub struct BasePrimes {
    primes: Vec<u32>,
    limit: u64,
}

impl BasePrimes {
    pub fn new(limit: u64) -> Result<Self> {
        let root = isqrt(limit);
        if root > u32::MAX as u64 {
            return Err(Error::Overflow("sieve limit beyond 2^64"));
        }
        let n = root as usize + 1;
        let mut composite: Vec<bool> = Vec::new();
        composite.try_reserve_exact(n).map_err(|_| Error::Resource { bytes: n })?;
        composite.resize(n, false);
        let mut primes = Vec::new();
        let mut i = 3usize;
        while i < n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += 2 * i;
                }
            }
            i += 2;
        }
        Ok(Self { primes, limit })
    }

    /// Largest integer a segment sieved with these base primes may contain.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn odd_primes(&self) -> &[u32] {
        &self.primes
    }
}

/// Ascending stream of sieved segments covering `[2, limit]`.
#[derive(Debug, Clone)]
pub struct Segments<'a> {
    base: alloc::borrow::Cow<'a, BasePrimes>,
    next_lo: u64,
    end: u64,
    size: u64,
}

impl Segments<'_> {
    pub fn new(config: &SieveConfig) -> Result<Segments<'static>> {
        config.validate()?;
        let base = BasePrimes::new(config.limit)?;
        Ok(Segments {
            base: alloc::borrow::Cow::Owned(base),
            next_lo: 2,
            end: config.limit + 1,
            size: config.segment_size,
        })
    }

    /// Segments over `[lo, hi)` sieved with caller-provided base primes.
    pub fn over<'b>(base: &'b BasePrimes, lo: u64, hi: u64, size: u64) -> Segments<'b> {
        Segments { base: alloc::borrow::Cow::Borrowed(base), next_lo: lo, end: hi, size }
    }
}

impl Iterator for Segments<'_> {
    type Item = PrimeSegment;

    fn next(&mut self) -> Option<PrimeSegment> {
        if self.next_lo >= self.end {
            return None;
        }
        let lo = self.next_lo;
        let hi = lo.saturating_add(self.size).min(self.end);
        self.next_lo = hi;
        Some(sieve_segment(lo, hi, &self.base))
    }
}

/// Stream of segments whose union is exactly `[2, limit]`.
pub fn primes_up_to(limit: u64) -> Result<Segments<'static>> {
    Segments::new(&SieveConfig::new(limit))
}

/// All primes `<= limit` collected into a vector.
pub fn primes_vec(limit: u64) -> Result<Vec<u64>> {
    if limit < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for seg in primes_up_to(limit)? {
        out.extend(seg.primes());
    }
    Ok(out)
}

/// `pi(x)`, the number of primes `<= x`.
pub fn prime_count(x: u64) -> Result<u64> {
    if x < 2 {
        return Ok(0);
    }
    Ok(primes_up_to(x)?.map(|s| s.count()).sum())
}

/// `floor(sqrt(n))` for any `u64`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut r = libm::sqrt(n as f64) as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn trial_division(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn small_limit() {
        assert_eq!(primes_vec(10).unwrap(), vec![2, 3, 5, 7]);
        assert_eq!(primes_vec(2).unwrap(), vec![2]);
        assert!(primes_vec(1).unwrap().is_empty());
    }

    #[test]
    fn empty_range_error() {
        assert_eq!(primes_up_to(1).unwrap_err(), Error::EmptyRange { limit: 1 });
        assert!(primes_up_to(0).is_err());
    }

    #[test]
    fn counts_against_trial_division() {
        let oracle = (0..=1000u64).filter(|&n| trial_division(n)).count() as u64;
        assert_eq!(oracle, 168);
        assert_eq!(prime_count(1000).unwrap(), oracle);
        assert_eq!(prime_count(1).unwrap(), 0);
        assert_eq!(prime_count(0).unwrap(), 0);
    }

    #[test]
    fn segments_cover_range_once() {
        let cfg = SieveConfig::new(10_007).with_segment_size(64);
        let mut expect_lo = 2;
        for seg in Segments::new(&cfg).unwrap() {
            assert_eq!(seg.lo(), expect_lo);
            assert!(seg.hi() - seg.lo() <= 64 && seg.hi() > seg.lo());
            expect_lo = seg.hi();
        }
        assert_eq!(expect_lo, 10_008);
    }

    #[test]
    fn config_validation() {
        assert!(SieveConfig::new(100).with_segment_size(15).validate().is_err());
        assert!(SieveConfig::new(100).with_workers(0).validate().is_err());
        assert!(SieveConfig::new(100).with_segment_size(64).validate_for_pairs(40).is_err());
        assert!(SieveConfig::new(100).with_segment_size(80).validate_for_pairs(40).is_ok());
    }

    #[test]
    fn isqrt_edges() {
        for n in [0u64, 1, 2, 3, 4, 15, 16, 17, 1 << 52, (1 << 53) + 1, u64::MAX] {
            let r = isqrt(n);
            assert!(r * r <= n);
            assert!((r + 1).checked_mul(r + 1).is_none_or(|s| s > n));
        }
    }
}

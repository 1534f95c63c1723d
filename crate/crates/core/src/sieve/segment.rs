use alloc::vec;
use alloc::vec::Vec;

use super::BasePrimes;

/// Primality bitmap over the half-open interval `[lo, hi)`.
///
/// Only odd integers are stored; bit `k` of the bitmap stands for
/// `first_odd + 2k`. The number 2 is recorded separately, so logically the
/// segment still answers "is `lo + i` prime" for every `i < hi - lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSegment {
    lo: u64,
    hi: u64,
    has_two: bool,
    first_odd: u64,
    bits: Vec<u64>,
}

impl PrimeSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> u64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi == self.lo
    }

    /// Primality of `n`; `n` must lie in `[lo, hi)`.
    #[inline]
    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(n >= self.lo && n < self.hi, "{n} outside segment");
        if n.is_multiple_of(2) {
            return n == 2 && self.has_two;
        }
        let k = ((n - self.first_odd) / 2) as usize;
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Primality of `lo + i`.
    pub fn bit(&self, i: u64) -> bool {
        self.is_prime(self.lo + i)
    }

    pub fn count(&self) -> u64 {
        self.has_two as u64 + self.bits.iter().map(|w| w.count_ones() as u64).sum::<u64>()
    }

    /// Primes of the segment in ascending order.
    pub fn primes(&self) -> SegmentPrimes<'_> {
        SegmentPrimes {
            seg: self,
            two_pending: self.has_two,
            word_idx: 0,
            word: self.bits.first().copied().unwrap_or(0),
        }
    }
}

/// Iterator over the primes of one [`PrimeSegment`].
#[derive(Debug, Clone)]
pub struct SegmentPrimes<'a> {
    seg: &'a PrimeSegment,
    two_pending: bool,
    word_idx: usize,
    word: u64,
}

impl Iterator for SegmentPrimes<'_> {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.two_pending {
            self.two_pending = false;
            return Some(2);
        }
        loop {
            if self.word != 0 {
                let tz = self.word.trailing_zeros() as u64;
                self.word &= self.word - 1;
                let k = self.word_idx as u64 * 64 + tz;
                return Some(self.seg.first_odd + 2 * k);
            }
            self.word_idx += 1;
            self.word = *self.seg.bits.get(self.word_idx)?;
        }
    }
}

/// Sieves `[lo, hi)` with the shared base primes.
///
/// Panics if `base` does not reach `sqrt(hi - 1)`; callers build the base
/// primes for the overall limit first.
pub fn sieve_segment(lo: u64, hi: u64, base: &BasePrimes) -> PrimeSegment {
    assert!(lo < hi, "empty segment [{lo}, {hi})");
    assert!(hi - 1 <= base.limit(), "base primes stop below {hi}");
    let has_two = lo <= 2 && 2 < hi;
    let first_odd = lo | 1;
    let n_odd = if first_odd >= hi { 0 } else { (hi - first_odd).div_ceil(2) as usize };
    let mut bits = vec![u64::MAX; n_odd.div_ceil(64)];
    if n_odd % 64 != 0 {
        if let Some(last) = bits.last_mut() {
            *last = (1u64 << (n_odd % 64)) - 1;
        }
    }
    if first_odd == 1 && n_odd > 0 {
        bits[0] &= !1;
    }
    for &p in base.odd_primes() {
        let p = p as u64;
        let sq = p * p;
        if sq >= hi {
            break;
        }
        let mut m = if sq >= lo { sq } else { lo.div_ceil(p) * p };
        if m % 2 == 0 {
            m += p;
        }
        let mut k = ((m - first_odd) / 2) as usize;
        let step = p as usize;
        while k < n_odd {
            bits[k / 64] &= !(1u64 << (k % 64));
            k += step;
        }
    }
    PrimeSegment { lo, hi, has_two, first_odd, bits }
}

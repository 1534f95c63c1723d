use alloc::vec::Vec;

use crate::sieve::{self, is_prime_u64, BasePrimes, SieveConfig};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Chebyshev's `psi(x) = sum_{p^k <= x} log p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiValue {
    pub x: u64,
    pub value: f64,
    sum: CompensatedSum,
}

impl PsiValue {
    /// `x - psi(x)` without rounding `psi(x)` to a double first.
    pub fn x_minus_psi(&self) -> f64 {
        self.sum.subtract_from(self.x as f64)
    }
}

/// Largest `k` with `p^k <= x`, by repeated integer multiplication.
#[inline]
pub fn max_exponent(p: u64, x: u64) -> u32 {
    debug_assert!(p >= 2);
    let mut k = 0;
    let mut q = 1u64;
    while let Some(next) = q.checked_mul(p) {
        if next > x {
            break;
        }
        q = next;
        k += 1;
    }
    k
}

/// Partial `psi` sums for the primes of `[lo, hi)`, one per checkpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiPartial {
    sums: Vec<CompensatedSum>,
}

impl PsiPartial {
    pub fn new(checkpoints: usize) -> Self {
        Self { sums: alloc::vec![CompensatedSum::new(); checkpoints] }
    }

    pub fn merge(&mut self, other: &PsiPartial) {
        for (a, b) in self.sums.iter_mut().zip(&other.sums) {
            a.merge(b);
        }
    }

    pub fn finish(self, checkpoints: &[u64]) -> Vec<PsiValue> {
        checkpoints
            .iter()
            .zip(self.sums)
            .map(|(&x, sum)| PsiValue { x, value: sum.value(), sum })
            .collect()
    }
}

/// Adds `floor(log_p x_j) log p` for every prime `p` in `[lo, hi)` and every
/// checkpoint `x_j >= p`.
pub fn psi_in_range(checkpoints: &[u64], lo: u64, hi: u64, base: &BasePrimes) -> PsiPartial {
    let mut out = PsiPartial::new(checkpoints.len());
    let Some(&last) = checkpoints.last() else { return out };
    let hi = hi.min(last + 1);
    if lo >= hi {
        return out;
    }
    let seg = sieve::sieve_segment(lo, hi, base);
    let first = checkpoints.partition_point(|&x| x < lo);
    for p in seg.primes() {
        let lp = libm::log(p as f64);
        let start = first + checkpoints[first..].partition_point(|&x| x < p);
        for (j, &x) in checkpoints.iter().enumerate().skip(start) {
            let k = if p.saturating_mul(p) > x { 1 } else { max_exponent(p, x) };
            out.sums[j] += k as f64 * lp;
        }
    }
    out
}

/// `psi(x_j)` at several strictly ascending checkpoints in one sieve pass.
pub fn chebyshev_psi_multi(checkpoints: &[u64], config: &SieveConfig) -> Result<Vec<PsiValue>> {
    if checkpoints.is_empty() {
        return Ok(Vec::new());
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Input("checkpoints must be strictly ascending"));
    }
    let last = *checkpoints.last().unwrap();
    let mut total = PsiPartial::new(checkpoints.len());
    if last >= 2 {
        let cfg = SieveConfig { limit: last, ..*config };
        cfg.validate()?;
        let base = BasePrimes::new(last)?;
        for (lo, hi) in cfg.ranges() {
            total.merge(&psi_in_range(checkpoints, lo, hi, &base));
        }
    }
    Ok(total.finish(checkpoints))
}

pub fn chebyshev_psi(x: u64) -> Result<PsiValue> {
    if x == 0 {
        return Err(Error::Domain("psi needs x >= 1"));
    }
    Ok(chebyshev_psi_multi(&[x], &SieveConfig::new(x))?.remove(0))
}

/// Whether `n = p^k` for a prime `p` and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for k in 1..64u32 {
        let root = integer_root(n, k);
        if root < 2 {
            break;
        }
        if root.checked_pow(k) == Some(n) && is_prime_u64(root) {
            return true;
        }
    }
    false
}

/// `floor(n^(1/k))`.
fn integer_root(n: u64, k: u32) -> u64 {
    if k == 1 {
        return n;
    }
    let mut r = libm::pow(n as f64, 1.0 / k as f64) as u64;
    while r > 0 && r.checked_pow(k).is_none_or(|v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

/// `T(x)` recovered from `psi(x)` through von Mangoldt's explicit formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillationValue {
    pub x: u64,
    pub value: f64,
    /// `psi` jumps at prime powers and the formula then holds only for the
    /// mean of the one-sided limits.
    pub at_prime_power: bool,
}

/// `T(x) = x^{-1/2} (x - psi(x) - log 2 pi - (1/2) log(1 - x^{-2}))`.
pub fn t_from_psi(psi: &PsiValue) -> Result<OscillationValue> {
    if psi.x <= 1 {
        return Err(Error::Domain("T(x) needs x > 1"));
    }
    let x = psi.x as f64;
    let log_two_pi = libm::log(2.0 * core::f64::consts::PI);
    let inner = psi.x_minus_psi() - log_two_pi - 0.5 * libm::log1p(-1.0 / (x * x));
    Ok(OscillationValue { x: psi.x, value: inner / libm::sqrt(x), at_prime_power: is_prime_power(psi.x) })
}

pub fn t_via_psi(x: u64) -> Result<OscillationValue> {
    if x <= 1 {
        return Err(Error::Domain("T(x) needs x > 1"));
    }
    t_from_psi(&chebyshev_psi(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent() {
        assert_eq!(max_exponent(2, 10), 3);
        assert_eq!(max_exponent(3, 10), 2);
        assert_eq!(max_exponent(11, 10), 0);
        assert_eq!(max_exponent(2, u64::MAX), 63);
        assert_eq!(max_exponent(10, 1_000_000_000_000), 12);
    }

    #[test]
    fn psi_small() {
        assert_eq!(chebyshev_psi(1).unwrap().value, 0.0);
        let v = chebyshev_psi(10).unwrap().value;
        let expect = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((v - expect).abs() < 1e-14);
        assert!((v - 7.8320).abs() < 1e-4);
        assert!(chebyshev_psi(0).is_err());
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (0..40).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, alloc::vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37]);
        assert!(is_prime_power(1 << 63));
        assert!(!is_prime_power(1_000_000));
        assert!(is_prime_power(999_983));
    }

    #[test]
    fn t_domain_and_flag() {
        assert!(t_via_psi(1).is_err());
        assert!(t_via_psi(1024).unwrap().at_prime_power);
        assert!(!t_via_psi(1000).unwrap().at_prime_power);
    }
}

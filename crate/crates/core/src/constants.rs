//! Singular-series constants for prime pairs.
//!
//! `C_2 = prod_{p > 2} (1 - 1/(p-1)^2)` is the twin-prime constant and
//! `C_2r = C_2 * prod_{p | r, p > 2} (p-1)/(p-2)`. The ratios `C_2r / C_2` are
//! rational and are kept as reduced fractions; only their running sums are
//! carried in floating point.

use alloc::vec::Vec;

use crate::sieve::{self, SieveConfig};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Prime limit used for the twin-prime constant when none is given. The
/// truncation error at this limit is about `5e-10`, which keeps
/// `2 C_2 li_2(x)` accurate to better than `1e-3` at `x = 10^8`.
pub const DEFAULT_C2_PRIME_LIMIT: u64 = 100_000_000;

/// Truncated product for `C_2` and a rigorous bound on what was left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwinPrimeConstant {
    /// `prod_{2 < p <= prime_limit} (1 - 1/(p-1)^2)`.
    pub value: f64,
    /// Upper bound on `value - C_2` (the truncated product is always too large).
    pub tail_bound: f64,
    pub prime_limit: u64,
}

impl TwinPrimeConstant {
    /// Interval `[value - tail_bound, value]` known to contain `C_2`.
    pub fn interval(&self) -> (f64, f64) {
        (self.value - self.tail_bound, self.value)
    }
}

/// Upper bound for `sum_{p > limit} 1/(p-1)^2`.
///
/// With `pi(t) < 1.25506 t / ln t` for `t > 1` (Rosser and Schoenfeld),
/// partial summation gives
/// `sum_{p > P} f(p) <= int_P^inf pi(t) (-f'(t)) dt` for `f(t) = (t-1)^-2`,
/// and `int_P^inf 2t / ((t-1)^3 ln t) dt <= (2 / ln P) (1/(P-1) + 1/(2 (P-1)^2))`.
fn prime_tail_bound(limit: u64) -> f64 {
    let p = limit.max(2) as f64;
    let q = p - 1.0;
    1.25506 * 2.0 / libm::log(p) * (1.0 / q + 0.5 / (q * q))
}

/// Direct product over odd primes up to `prime_limit`.
///
/// Since `1 - s <= prod (1 - a_p) <= 1` when `s = sum a_p` with `a_p` in
/// `[0, 1)`, the truncated product overestimates `C_2` by at most
/// `value * sum_{p > limit} 1/(p-1)^2`.
pub fn twin_prime_constant(prime_limit: u64) -> Result<TwinPrimeConstant> {
    if prime_limit < 2 {
        return Err(Error::Domain("prime limit must be at least 2"));
    }
    // Product in log space would lose the last digits; multiply directly, the
    // factors are all close to 1 and the relative rounding error stays near
    // sqrt(#primes) ulps.
    let mut value = 1.0f64;
    for seg in sieve::Segments::new(&SieveConfig::new(prime_limit))? {
        for p in seg.primes() {
            if p == 2 {
                continue;
            }
            let d = (p - 1) as f64;
            value *= 1.0 - 1.0 / (d * d);
        }
    }
    Ok(TwinPrimeConstant { value, tail_bound: value * prime_tail_bound(prime_limit), prime_limit })
}

/// The exact ratio `C_2r / C_2` as a reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HLRatio {
    pub r: u64,
    pub numerator: u64,
    pub denominator: u64,
}

impl HLRatio {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `prod_{p | r, p odd prime} (p-1)/(p-2)`, factoring `r` by trial division.
pub fn ratio(r: u64) -> Result<HLRatio> {
    if r == 0 {
        return Err(Error::Domain("ratio is defined for r >= 1"));
    }
    let mut m = r >> r.trailing_zeros();
    let (mut num, mut den) = (1u64, 1u64);
    let mut mul = |p: u64| {
        num *= p - 1;
        den *= p - 2;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    };
    let mut d = 3u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            mul(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 2;
    }
    if m > 1 {
        mul(m);
    }
    Ok(HLRatio { r, numerator: num, denominator: den })
}

/// Running sums `S_m / C_2 = sum_{r <= m} C_2r / C_2` for `1 <= m <= N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefixSums {
    n: u64,
    s_over_c2: Vec<f64>,
    pub c2: TwinPrimeConstant,
}

impl PrefixSums {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `S_m / C_2`; `m` in `1..=N`.
    pub fn s_over_c2(&self, m: u64) -> Result<f64> {
        if m == 0 || m > self.n {
            return Err(Error::Input("prefix index outside 1..=N"));
        }
        Ok(self.s_over_c2[(m - 1) as usize])
    }

    /// `S_m = C_2 * (S_m / C_2)`.
    pub fn s(&self, m: u64) -> Result<f64> {
        Ok(self.c2.value * self.s_over_c2(m)?)
    }

    pub fn values(&self) -> &[f64] {
        &self.s_over_c2
    }

    /// Friedlander-Goldston deviation `S_m - m + (1/2) log m`.
    pub fn fg_deviation(&self, m: u64) -> Result<f64> {
        Ok(self.s(m)? - m as f64 + 0.5 * libm::log(m as f64))
    }
}

pub fn prefix_sums(n: u64, c2: TwinPrimeConstant) -> Result<PrefixSums> {
    if n == 0 {
        return Err(Error::Domain("prefix sums need N >= 1"));
    }
    let mut acc = CompensatedSum::new();
    let mut s_over_c2 = Vec::with_capacity(n as usize);
    for r in 1..=n {
        acc += ratio(r)?.value();
        s_over_c2.push(acc.value());
    }
    Ok(PrefixSums { n, s_over_c2, c2 })
}

/// `S_m - m + (1/2) log m` with `S_m` from freshly computed prefix sums.
pub fn fg_deviation(m: u64, c2: TwinPrimeConstant) -> Result<f64> {
    prefix_sums(m, c2)?.fg_deviation(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C2_REF: f64 = 0.6601618158;

    #[test]
    fn single_factor_and_empty_products() {
        assert_eq!(twin_prime_constant(2).unwrap().value, 1.0);
        assert_eq!(twin_prime_constant(3).unwrap().value, 0.75);
        assert_eq!(twin_prime_constant(4).unwrap().value, 0.75);
        assert!(twin_prime_constant(1).is_err());
    }

    #[test]
    fn c2_at_1e3_within_bound() {
        let c = twin_prime_constant(1000).unwrap();
        assert!(c.value >= C2_REF);
        assert!(c.value - C2_REF <= c.tail_bound + 5e-11, "{c:?}");
    }

    #[test]
    fn ratio_rows() {
        let cases = [(1, 1, 1), (2, 1, 1), (3, 2, 1), (5, 4, 3), (7, 6, 5), (11, 10, 9), (15, 8, 3), (105, 16, 5)];
        for (r, n, d) in cases {
            let q = ratio(r).unwrap();
            assert_eq!((q.numerator, q.denominator), (n, d), "r = {r}");
        }
        assert!(ratio(0).is_err());
        assert!(ratio(1 << 40).unwrap().is_one());
    }

    #[test]
    fn prefix_small() {
        let c = TwinPrimeConstant { value: C2_REF, tail_bound: 0.0, prime_limit: 0 };
        let s = prefix_sums(3, c).unwrap();
        assert_eq!(s.s_over_c2(1).unwrap(), 1.0);
        assert_eq!(s.s_over_c2(3).unwrap(), 4.0);
        assert!(s.s_over_c2(0).is_err());
        assert!(s.s_over_c2(4).is_err());
        assert!(prefix_sums(0, c).is_err());
        assert!((s.fg_deviation(1).unwrap() - (C2_REF - 1.0)).abs() < 1e-15);
    }
}

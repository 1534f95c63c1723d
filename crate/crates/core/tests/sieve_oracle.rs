use primepair_core::sieve::{self, is_prime_u64, prime_count, primes_up_to, PrimeSegment, SieveConfig, Segments};
use proptest::prelude::*;

fn trial_division_table(limit: usize) -> Vec<bool> {
    (0..=limit as u64)
        .map(|n| n >= 2 && (2u64..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

#[test]
fn bit_for_bit_against_trial_division_to_1e6() {
    let limit = 1_000_000usize;
    let oracle = trial_division_table(limit);
    let mut seen = 0u64;
    let mut covered = 2u64;
    for seg in primes_up_to(limit as u64).unwrap() {
        assert_eq!(seg.lo(), covered);
        for i in 0..seg.len() {
            assert_eq!(seg.bit(i), oracle[(seg.lo() + i) as usize], "n = {}", seg.lo() + i);
        }
        seen += seg.count();
        covered = seg.hi();
    }
    assert_eq!(covered, limit as u64 + 1);
    assert_eq!(seen, 78_498);
    let direct = oracle.iter().filter(|&&b| b).count() as u64;
    assert_eq!(direct, 78_498);
}

#[test]
fn small_counts() {
    assert_eq!(sieve::primes_vec(10).unwrap(), vec![2, 3, 5, 7]);
    assert_eq!(prime_count(1_000).unwrap(), 168);
    assert_eq!(prime_count(1_000_000).unwrap(), 78_498);
}

#[test]
fn pi_1e8_with_two_segment_sizes() {
    let default = prime_count(100_000_000).unwrap();
    let other: u64 = Segments::new(&SieveConfig::new(100_000_000).with_segment_size(3 << 17))
        .unwrap()
        .map(|s: PrimeSegment| s.count())
        .sum();
    assert_eq!(default, other);
    assert_eq!(default, 5_761_455);
}

#[test]
fn sieve_agrees_with_miller_rabin_near_1e12() {
    let lo = 1_000_000_000_000u64;
    let base = sieve::BasePrimes::new(lo + 100_000).unwrap();
    let seg = sieve::sieve_segment(lo, lo + 100_000, &base);
    for n in lo..lo + 100_000 {
        assert_eq!(seg.is_prime(n), is_prime_u64(n), "n = {n}");
    }
    assert!(seg.is_prime(lo + 39));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn output_independent_of_segment_size(limit in 2u64..200_000, size_exp in 4u32..18) {
        let size = 1u64 << size_exp;
        let a: Vec<u64> = Segments::new(&SieveConfig::new(limit).with_segment_size(size))
            .unwrap()
            .flat_map(|s| s.primes().collect::<Vec<_>>())
            .collect();
        let b = sieve::primes_vec(limit).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn prime_count_steps_by_zero_or_one(x in 1u64..50_000) {
        let here = prime_count(x).unwrap();
        let before = prime_count(x - 1).unwrap();
        prop_assert!(here == before || here == before + 1);
        prop_assert_eq!(here - before, is_prime_u64(x) as u64);
    }
}

use primepair_core::analytic::{
    chebyshev_psi, chebyshev_psi_multi, delta_bar, li, li2, t_from_psi, t_via_psi, t_via_zeros, LI_AT_2,
};
use primepair_core::sieve::SieveConfig;
use primepair_core::sum::CompensatedSum;
use primepair_core::zeros::{zero_count_check, ZeroTable};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Ramanujan's series for `li(x)`, independent of the quadrature.
fn li_ramanujan(x: f64) -> f64 {
    let l = x.ln();
    let mut sum = 0.0;
    let mut term = 1.0; // (log x)^n / (n! 2^{n-1}), built up incrementally
    let mut inner = 0.0;
    for n in 1..200u32 {
        term *= l / n as f64;
        if n > 1 {
            term /= 2.0;
        }
        if n % 2 == 1 {
            inner += 1.0 / n as f64;
        }
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * term * inner;
    }
    EULER_GAMMA + l.ln() + x.sqrt() * sum
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn li_at_two_matches_series() {
    let series = li_ramanujan(2.0);
    assert!(rel(series, 1.045_163_780_117_493) < 1e-14, "{series}");
    assert!(rel(LI_AT_2, series) < 1e-14);
    assert!(rel(li(2.0).unwrap().value, series) < 1e-14);
}

#[test]
fn li_matches_series_and_frozen_values() {
    for x in [std::f64::consts::E, 10.0, 1000.0, 1e5] {
        let q = li(x).unwrap().value;
        assert!(rel(q, li_ramanujan(x)) < 1e-10, "x = {x}");
    }
    assert!(rel(li(1e6).unwrap().value, 78_627.549_159_462_18) < 1e-10);
    assert!(rel(li(10.0).unwrap().value, 6.165_599_504_787_298) < 1e-10);
}

#[test]
fn li2_frozen_values() {
    let table = [
        (10.0, 3.662_880_987_415_214),
        (1e3, 34.685_056_990_728_72),
        (1e4, 162.241_237_442_919_3),
        (1e5, 945.759_589_287_422),
        (1e6, 6_246.975_735_221_871),
        (1e8, 333_530.191_883_685),
    ];
    for (x, expect) in table {
        let q = li2(x).unwrap();
        assert!(rel(q.value, expect) < 1e-10, "x = {x}: {}", q.value);
        assert!((q.value - expect).abs() <= q.est_error.max(1e-10 * expect), "est_error at {x}");
    }
    assert_eq!(li2(2.0).unwrap().value, 0.0);
    assert!(li2(1.5).is_err());
}

#[test]
fn li2_relation_to_li() {
    // li_2(x) = li(x) - x / log x - li(2) + 2 / log 2
    for x in [10.0, 1e4, 1e7] {
        let lhs = li2(x).unwrap().value;
        let rhs = li(x).unwrap().value - x / x.ln() - LI_AT_2 + 2.0 / 2f64.ln();
        assert!(rel(lhs, rhs) < 1e-10, "x = {x}");
    }
}

#[test]
fn li2_derivative() {
    for x in [10.0f64, 1e3, 1e6] {
        let h = x * 1e-4;
        let d = (li2(x + h).unwrap().value - li2(x - h).unwrap().value) / (2.0 * h);
        let expect = 1.0 / x.ln().powi(2);
        assert!(rel(d, expect) < 1e-6, "x = {x}: {d} vs {expect}");
    }
}

/// `Lambda(n)` for all `n <= limit` from a smallest-factor table.
fn lambda_table(limit: usize) -> Vec<f64> {
    let mut spf = vec![0usize; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    (0..=limit)
        .map(|n| {
            if n < 2 {
                return 0.0;
            }
            let p = spf[n];
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            if m == 1 { (p as f64).ln() } else { 0.0 }
        })
        .collect()
}

#[test]
fn psi_matches_brute_force_lambda_sum() {
    let limit = 100_000usize;
    let lambda = lambda_table(limit);
    let checkpoints: Vec<u64> = (1..=1000).map(|k| k * 100).chain([2, 3, 4, 9, 10, 99_991]).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let multi = chebyshev_psi_multi(&checkpoints, &SieveConfig::new(0).with_segment_size(4096)).unwrap();
    let mut acc = CompensatedSum::new();
    let mut n = 0usize;
    for v in &multi {
        while n < v.x as usize {
            n += 1;
            acc += lambda[n];
        }
        assert!((v.value - acc.value()).abs() <= 1e-12 * acc.value().max(1.0), "x = {}", v.x);
        assert!(v.value >= 0.0);
        if v.x >= 100 {
            assert!(v.value <= 1.04 * v.x as f64);
        }
    }
}

#[test]
fn psi_small_values() {
    let v = chebyshev_psi(10).unwrap().value;
    let expect = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
    assert!((v - expect).abs() < 1e-13);
    assert!((v - 7.8320).abs() < 1e-4);
    assert!(chebyshev_psi(0).is_err());
    assert_eq!(chebyshev_psi(1).unwrap().value, 0.0);
}

#[test]
fn psi_multi_matches_single() {
    let xs = [1000u64, 65_536, 999_999, 1_000_000];
    let multi = chebyshev_psi_multi(&xs, &SieveConfig::new(0)).unwrap();
    for (m, &x) in multi.iter().zip(&xs) {
        assert_eq!(m.value, chebyshev_psi(x).unwrap().value);
    }
}

#[test]
fn t_via_psi_published_values() {
    let t6 = t_via_psi(1_000_000).unwrap();
    assert!((t6.value - 0.41156).abs() <= 2e-5, "{}", t6.value);
    assert!(!t6.at_prime_power);
    let psi = chebyshev_psi(1_000_000).unwrap();
    assert_eq!(t_from_psi(&psi).unwrap().value, t6.value);
    assert!(t_via_psi(1).is_err());
    assert!(t_via_psi(1024).unwrap().at_prime_power);
}

#[test]
fn zero_sum_is_order_of_one() {
    let zeros = ZeroTable::parse(
        "14.134725141734693\n21.022039638771555\n25.010857580145688\n30.424876125859513\n32.935061587739189\n",
        "first five",
        None,
    )
    .unwrap();
    let t = t_via_zeros(1e6, &zeros).unwrap();
    assert!(t.is_finite() && t.abs() < 1.0);
    assert!(zero_count_check(&zeros) < 3.0);
    let direct: f64 = zeros
        .ordinates()
        .iter()
        .map(|&g| {
            let a = g * 1e6f64.ln();
            (a.cos() + 2.0 * g * a.sin()) / (g * g + 0.25)
        })
        .sum();
    assert!((t - direct).abs() < 1e-13);
}

#[test]
fn delta_bar_examples() {
    let v = delta_bar(200, 1e6).unwrap();
    let l = 1e6f64.ln();
    let expect = -(400.0 * l * l) / (8.0 * 1000.0 * 400f64.ln().powi(2));
    assert!((v - expect).abs() < 1e-14);
}

use primepair_core::analysis::{
    build_table, delta_n, figure_series, omega_2r, q_n, q_n_from_remainders, riemann_ratio, CheckpointContext,
    FigureSpec,
};
use primepair_core::analytic::t_via_psi;
use primepair_core::constants::{prefix_sums, twin_prime_constant, DEFAULT_C2_PRIME_LIMIT};
use primepair_core::paircount::{count_pairs, PairCountTable};
use primepair_core::sieve::SieveConfig;
use std::sync::OnceLock;

const X: u64 = 1_000_000;

/// `(2N, Pi_N(10^6), Delta_N(10^6))` as published.
const PUBLISHED: [(u64, u64, f64); 14] = [
    (100, 605_087, 0.09722),
    (200, 1_226_667, -0.02199),
    (300, 1_851_433, -0.12785),
    (400, 2_465_581, -0.23344),
    (500, 3_086_695, -0.32860),
    (600, 3_714_028, -0.31371),
    (700, 4_328_507, -0.34805),
    (800, 4_951_873, -0.42140),
    (900, 5_574_196, -0.48004),
    (1000, 6_188_960, -0.52230),
    (2000, 12_391_586, -0.78001),
    (3000, 18_597_363, -0.95390),
    (4000, 24_783_891, -1.11135),
    (5000, 30_975_067, -1.28953),
];

struct Fixture {
    counts: PairCountTable,
    ctx: CheckpointContext,
    sums: primepair_core::constants::PrefixSums,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let c2 = twin_prime_constant(DEFAULT_C2_PRIME_LIMIT).unwrap();
        let counts = count_pairs(&[X], 2500, &SieveConfig::new(0)).unwrap();
        let ctx = CheckpointContext::new(X, &c2, t_via_psi(X).unwrap().value).unwrap();
        Fixture { counts, ctx, sums: prefix_sums(2500, c2).unwrap() }
    })
}

#[test]
fn table_two_first_columns() {
    let f = fixture();
    let n_list: Vec<u64> = PUBLISHED.iter().map(|r| r.0 / 2).collect();
    let rows = build_table(&f.ctx, &n_list, &f.counts, &f.sums).unwrap();
    for (row, &(two_n, pi, delta)) in rows.iter().zip(&PUBLISHED) {
        assert_eq!(row.two_n, two_n);
        assert_eq!(row.pi_n, pi, "2N = {two_n}");
        assert!((row.delta_n - delta).abs() <= 1e-4, "2N = {two_n}: {} vs {delta}", row.delta_n);
        assert_eq!(row.delta_n, row.q_n + row.t_x + 1.0);
    }
    assert!(build_table(&f.ctx, &[], &f.counts, &f.sums).unwrap().is_empty());
}

#[test]
fn remainders() {
    let f = fixture();
    assert!((f.ctx.l2 - 8248.0297).abs() <= 1e-2);
    let w2 = omega_2r(&f.ctx, 1, &f.counts, &f.sums.c2).unwrap();
    assert!((w2 - (8169.0 - 8248.0297)).abs() <= 0.01, "{w2}");
    let w6 = omega_2r(&f.ctx, 3, &f.counts, &f.sums.c2).unwrap();
    assert!((w6 - (16386.0 - 2.0 * 8248.0297)).abs() <= 0.02, "{w6}");
    let q1 = q_n(&f.ctx, 1, &f.counts, &f.sums).unwrap();
    assert!((q1 - w2 / f.ctx.li2_sqrt_x).abs() < 1e-12);
}

#[test]
fn two_paths_to_q_n_agree() {
    let f = fixture();
    for n in [1u64, 7, 50, 500, 2500] {
        let a = q_n(&f.ctx, n, &f.counts, &f.sums).unwrap();
        let b = q_n_from_remainders(&f.ctx, n, &f.counts, &f.sums.c2).unwrap();
        assert!(((a - b) / a).abs() < 1e-12, "N = {n}: {a} vs {b}");
    }
}

#[test]
fn delta_bar_tracks_large_gaps() {
    let f = fixture();
    for n in (1000..=2500).step_by(100) {
        let row = delta_n(&f.ctx, n, &f.counts, &f.sums).unwrap();
        let q = row.delta_n / row.delta_bar;
        assert!((0.5..=2.0).contains(&q), "2N = {}: {} vs {}", 2 * n, row.delta_n, row.delta_bar);
    }
    assert!(delta_n(&f.ctx, 2500, &f.counts, &f.sums).unwrap().delta_n < -1.0);
}

#[test]
fn fixed_x_series() {
    let f = fixture();
    let series = figure_series(&FigureSpec::fixed_x(X), &[f.ctx], &f.counts, &f.sums).unwrap();
    assert_eq!(series.points.len(), 2476);
    assert!(series.has_delta_bar());
    assert!(series.points.windows(2).all(|w| w[0].abscissa < w[1].abscissa));
    let last = series.points.last().unwrap();
    assert_eq!(last.abscissa, 5000.0);
    assert!((last.delta_n + 1.28953).abs() <= 1e-4);
    let other = CheckpointContext { x: 2_000_000, ..f.ctx };
    let none = figure_series(&FigureSpec::fixed_x(2_000_000), &[other], &f.counts, &f.sums);
    assert!(none.is_err(), "table does not cover 2e6");
}

#[test]
fn riemann_ratio_near_minus_t_minus_one() {
    let f = fixture();
    let r = riemann_ratio(X).unwrap();
    assert!((r + f.ctx.t_x + 1.0).abs() <= 0.3, "{r}");
    assert!(riemann_ratio(10_000).unwrap() < 0.0);
}

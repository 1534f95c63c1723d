use primepair::parallel;
use primepair_core::analytic::{self, chebyshev_psi_multi};
use primepair_core::paircount::count_pairs;
use primepair_core::sieve::SieveConfig;
use primepair_core::zeros::ZeroTable;

#[test]
fn pair_counts_match_serial_across_segment_sizes_and_workers() {
    let xs = [999u64, 65_536, 300_000, 2_000_000];
    let serial = count_pairs(&xs, 300, &SieveConfig::new(2)).unwrap();
    for size in [1_200u64, 10_000, 131_072, 1 << 20] {
        for workers in [1usize, 2, 5] {
            let cfg = SieveConfig::new(2).with_segment_size(size).with_workers(workers);
            assert_eq!(parallel::count_pairs(&xs, 300, &cfg).unwrap(), serial, "segment {size}, {workers} workers");
        }
    }
}

#[test]
fn segment_size_must_cover_the_gap_window() {
    let cfg = SieveConfig::new(2).with_segment_size(1000);
    assert!(parallel::count_pairs(&[10_000], 300, &cfg).is_err());
}

#[test]
fn psi_is_bit_identical_to_serial() {
    let xs = [10u64, 1_000, 99_999, 1_000_000, 3_000_000];
    for size in [4096u64, 65_536, 1 << 20] {
        let cfg = SieveConfig::new(2).with_segment_size(size);
        let serial = chebyshev_psi_multi(&xs, &cfg).unwrap();
        for workers in [1usize, 3, 8] {
            let par = parallel::chebyshev_psi_multi(&xs, &cfg.with_workers(workers)).unwrap();
            for (a, b) in par.iter().zip(&serial) {
                assert_eq!(a.value.to_bits(), b.value.to_bits(), "x = {}", a.x);
                assert_eq!(a.x_minus_psi().to_bits(), b.x_minus_psi().to_bits());
            }
        }
    }
    assert!(parallel::chebyshev_psi_multi(&[10, 5], &SieveConfig::new(2)).is_err());
    assert!(parallel::chebyshev_psi_multi(&[], &SieveConfig::new(2)).unwrap().is_empty());
}

#[test]
fn zero_sum_is_bit_identical_to_serial() {
    // a synthetic increasing table spanning several blocks
    let ordinates: Vec<f64> = (0..20_000).map(|i| 14.134725142 + 0.7 * i as f64 + 1e-3 * (i as f64).sin()).collect();
    let table = ZeroTable::new(ordinates, "synthetic").unwrap();
    let serial = analytic::t_via_zeros(1e6, &table).unwrap();
    for workers in [1usize, 2, 7] {
        assert_eq!(parallel::t_via_zeros(1e6, &table, workers).unwrap().to_bits(), serial.to_bits());
    }
    assert!(parallel::t_via_zeros(1.0, &table, 1).is_err());
}

#[test]
fn segment_counter_advances() {
    let before = parallel::segments_sieved();
    parallel::count_pairs(&[100_000], 10, &SieveConfig::new(2).with_segment_size(8192)).unwrap();
    assert!(parallel::segments_sieved() >= before + 13);
}

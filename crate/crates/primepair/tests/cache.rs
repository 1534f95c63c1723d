use primepair::cache::{config_hash, header_line, PairCache};
use primepair::error::exit;
use primepair_core::paircount::count_pairs;
use primepair_core::sieve::SieveConfig;

#[test]
fn store_then_lookup() {
    let dir = tempfile::tempdir().unwrap();
    let cache = PairCache::new(dir.path());
    assert!(cache.lookup(&[1000], 5).unwrap().is_none());
    let table = count_pairs(&[1000, 5000, 20_000], 30, &SieveConfig::new(2)).unwrap();
    let path = cache.store(&table).unwrap();
    assert!(path.starts_with(dir.path()));
    assert_eq!(cache.lookup(&[1000, 5000, 20_000], 30).unwrap().unwrap(), table);

    let sub = cache.lookup(&[5000], 7).unwrap().unwrap();
    assert_eq!(sub, count_pairs(&[5000], 7, &SieveConfig::new(2)).unwrap());
    assert!(cache.lookup(&[5000], 31).unwrap().is_none());
    assert!(cache.lookup(&[6000], 3).unwrap().is_none());
}

#[test]
fn tampered_header_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = PairCache::new(dir.path());
    let path = cache.store(&count_pairs(&[1000], 4, &SieveConfig::new(2)).unwrap()).unwrap();
    let text = std::fs::read_to_string(&path).unwrap().replace("max_half_gap=4", "max_half_gap=3");
    std::fs::write(&path, text).unwrap();
    let err = cache.lookup(&[1000], 2).unwrap_err();
    assert_eq!(err.exit_code(), exit::DATA);
}

#[test]
fn foreign_files_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("pairs-notes.csv"), "hello\n").unwrap();
    std::fs::write(dir.path().join("other.txt"), "# primepair junk\n").unwrap();
    assert!(PairCache::new(dir.path()).lookup(&[1000], 2).unwrap().is_none());
}

#[test]
fn hashes() {
    assert_eq!(config_hash("a").len(), 16);
    assert_ne!(config_hash("a"), config_hash("b"));
    assert!(header_line("a").ends_with(&config_hash("a")));
}

use std::path::PathBuf;

use primepair::error::exit;
use primepair::zeros_io::{format_zeros, load_zeros, write_zeros};
use primepair_core::zeros::{riemann_von_mangoldt, zero_count_check, ZeroTable};

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros_1e5.txt.gz")
}

#[test]
fn vendored_fixture() {
    let t = load_zeros(&fixture_path(), None).unwrap();
    assert_eq!(t.len(), 100_000);
    assert!(t.first_zero_error() < 1e-3);
    assert!((t.ordinates()[1] - 21.022039639).abs() < 1e-8);
    assert!((t.ordinates()[99_999] - 74_920.827_498_994).abs() < 1e-6);
    let dev = zero_count_check(&t);
    assert!(dev < 3.0, "{dev}");
    // the count at the last ordinate sits close to the main term
    assert!((100_000.0 - riemann_von_mangoldt(t.ordinates()[99_999])).abs() < 3.0);
}

#[test]
fn truncated_table_still_counts_correctly() {
    let t = load_zeros(&fixture_path(), Some(12_345)).unwrap();
    assert_eq!(t.len(), 12_345);
    assert!(zero_count_check(&t) < 3.0);
}

#[test]
fn round_trip_plain_and_gzip() {
    let dir = tempfile::tempdir().unwrap();
    let src = load_zeros(&fixture_path(), Some(5000)).unwrap();
    for name in ["z.txt", "z.txt.gz"] {
        let path = dir.path().join(name);
        write_zeros(&path, &src, 9).unwrap();
        let back = load_zeros(&path, None).unwrap();
        assert_eq!(back.ordinates(), src.ordinates(), "{name}");
        assert_eq!(format_zeros(&back, 9), format_zeros(&src, 9));
    }
    let plain = std::fs::read(dir.path().join("z.txt")).unwrap();
    let gz = std::fs::read(dir.path().join("z.txt.gz")).unwrap();
    assert_eq!(&gz[..2], &[0x1f, 0x8b]);
    assert!(gz.len() < plain.len());
}

#[test]
fn three_line_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("three.txt");
    std::fs::write(&path, "14.134725142\n21.022039639\n25.010857580").unwrap();
    let t = load_zeros(&path, None).unwrap();
    assert_eq!(t.len(), 3);
    assert!(zero_count_check(&t).is_finite());
    assert_eq!(t.source(), path.display().to_string());
}

#[test]
fn errors_map_to_data_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [("empty.txt", ""), ("desc.txt", "25.0\n21.0\n14.13\n"), ("junk.txt", "14.13\nx\n")];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let err = load_zeros(&path, None).unwrap_err();
        assert_eq!(err.exit_code(), exit::DATA, "{name}: {err}");
    }
    let missing = load_zeros(&dir.path().join("none.txt"), None).unwrap_err();
    assert_eq!(missing.exit_code(), exit::DATA);
    // gzip extension with plain content
    let fake = dir.path().join("fake.txt.gz");
    std::fs::write(&fake, "14.134725142\n").unwrap();
    assert_eq!(load_zeros(&fake, None).unwrap_err().exit_code(), exit::DATA);
}

#[test]
fn format_respects_precision() {
    let t = ZeroTable::new(vec![14.134725141734693, 21.022039638771555], "x").unwrap();
    assert_eq!(format_zeros(&t, 3), "14.135\n21.022\n");
}

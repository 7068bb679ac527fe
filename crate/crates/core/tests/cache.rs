use std::fs;

use polycauchy::cache::{cache_file, load_triangles, parse_triangle, save_triangles};
use polycauchy::stirling::triangle;
use polycauchy::{lah, stirling1, stirling2, TriangleKind};

#[test]
fn triangles_round_trip_through_disk() {
    let dir = std::env::temp_dir().join(format!("polycauchy-cache-{}", std::process::id()));
    // Warm the caches so there is something to write.
    let _ = (stirling1(12, 5), stirling2(12, 5), lah(9, 3));
    save_triangles(&dir).unwrap();
    for kind in TriangleKind::ALL {
        let text = fs::read_to_string(cache_file(&dir, kind)).unwrap();
        assert!(text.starts_with("polycauchy-triangle\tv1\t"));
        assert_eq!(parse_triangle(kind, &text).unwrap(), triangle(kind).snapshot());
    }
    assert_eq!(load_triangles(&dir).unwrap(), TriangleKind::ALL.len());
    assert_eq!(stirling1(12, 5).to_string(), "45995730");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corrupt_cache_is_rejected() {
    let dir = std::env::temp_dir().join(format!("polycauchy-bad-cache-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    fs::write(cache_file(&dir, TriangleKind::Lah), "polycauchy-triangle\tv0\tlah\n1\n").unwrap();
    assert!(load_triangles(&dir).is_err());
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_directory_loads_nothing() {
    let dir = std::env::temp_dir().join("polycauchy-cache-does-not-exist");
    assert_eq!(load_triangles(&dir).unwrap(), 0);
}

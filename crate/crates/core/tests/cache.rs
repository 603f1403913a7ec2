use std::fs;

use hyperroot::multiplicity::{mult_peterson, LoadStatus, MultTable, TableCache};
use hyperroot::{presets, Gcm};
use num_bigint::BigUint;
use serde_json::Value;

fn filled(g: &Gcm, h: i64) -> MultTable {
    let mut t = MultTable::new(g);
    t.extend_to(h).unwrap();
    t
}

#[test]
fn missing_then_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let g = presets::f();
    let (t, status) = cache.load(&g).unwrap();
    assert_eq!(status, LoadStatus::Missing);
    assert_eq!(t.frontier(), 0);

    let t = filled(&g, 16);
    cache.save(&t).unwrap();
    let (mut back, status) = cache.load(&g).unwrap();
    assert_eq!(status, LoadStatus::Loaded { frontier: 16 });
    assert_eq!(back.entries(), t.entries());
    // continuing from a loaded table gives the same values as a fresh run
    assert_eq!(mult_peterson(&g, &[8, 10, 4].into(), &mut back).unwrap(), BigUint::from(792u32));
}

#[test]
fn saves_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let g: Gcm = "2,-3;-3,2".parse().unwrap();
    cache.save(&filled(&g, 12)).unwrap();
    let a = fs::read(cache.path_for(&g)).unwrap();
    let (t, _) = cache.load(&g).unwrap();
    cache.save(&t).unwrap();
    assert_eq!(a, fs::read(cache.path_for(&g)).unwrap());
}

fn edit(cache: &TableCache, g: &Gcm, f: impl FnOnce(&mut Value)) {
    let path = cache.path_for(g);
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    f(&mut v);
    fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
}

#[test]
fn corrupted_top_shell_is_truncated() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let g = presets::f();
    cache.save(&filled(&g, 12)).unwrap();
    edit(&cache, &g, |v| {
        let entries = v["entries"].as_array_mut().unwrap();
        let last = entries.last_mut().unwrap();
        last[1] = Value::from(last[1].as_u64().unwrap() + 1);
    });
    let (t, status) = cache.load(&g).unwrap();
    assert_eq!(status, LoadStatus::Truncated { from: 12, to: 11 });
    assert_eq!(t.frontier(), 11);
    assert_eq!(t.entries(), filled(&g, 11).entries());
}

#[test]
fn interrupted_write_is_detected() {
    // entries above the recorded frontier: a shell that was being written
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let g = presets::f();
    let full = filled(&g, 10);
    cache.save(&full).unwrap();
    edit(&cache, &g, |v| v["frontier"] = Value::from(9));
    let (t, status) = cache.load(&g).unwrap();
    assert_eq!(status, LoadStatus::Truncated { from: 10, to: 9 });
    assert_eq!(t.frontier(), 9);

    // a shell with a missing root is also caught
    cache.save(&full).unwrap();
    edit(&cache, &g, |v| {
        let entries = v["entries"].as_array_mut().unwrap();
        entries.pop();
    });
    let (t, status) = cache.load(&g).unwrap();
    assert!(matches!(status, LoadStatus::Truncated { from: 10, .. }));
    assert!(t.frontier() < 10);
}

#[test]
fn foreign_or_garbled_files_are_discarded() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let g = presets::f();
    cache.save(&filled(&g, 6)).unwrap();
    edit(&cache, &g, |v| v["matrix"][0][1] = Value::from(-3));
    assert!(matches!(cache.load(&g).unwrap().1, LoadStatus::Discarded(_)));

    fs::write(cache.path_for(&g), "{ not json").unwrap();
    let (t, status) = cache.load(&g).unwrap();
    assert!(matches!(status, LoadStatus::Discarded(_)));
    assert_eq!(t.frontier(), 0);
}

#[test]
fn large_values_survive() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let g = presets::e10();
    let t = filled(&g, 3);
    cache.save(&t).unwrap();
    let (back, status) = cache.load(&g).unwrap();
    assert_eq!(status, LoadStatus::Loaded { frontier: 3 });
    assert_eq!(back.entries(), t.entries());
}

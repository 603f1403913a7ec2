#![allow(dead_code)]

use std::collections::HashMap;

use hyperroot::{presets, Gcm, RootVector};

/// The three matrices used for engine and identity cross-checks.
pub fn cross_check_gcms() -> Vec<(&'static str, Gcm)> {
    vec![
        ("A1(3,3)", "2,-3;-3,2".parse().unwrap()),
        ("A1^(1)", "2,-2;-2,2".parse().unwrap()),
        ("F", presets::f()),
    ]
}

/// Seed for randomized checks, overridable through `HYPERROOT_SEED`.
pub fn seed() -> u64 {
    std::env::var("HYPERROOT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_2024)
}

/// Weyl group elements as integer matrices acting on root coordinates.
type Mat = Vec<Vec<i64>>;

fn reflection(g: &Gcm, i: usize) -> Mat {
    let n = g.rank();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let id = (r == c) as i64;
                    if r == i {
                        id - g.entry(i, c)
                    } else {
                        id
                    }
                })
                .collect()
        })
        .collect()
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect())
        .collect()
}

fn apply(m: &Mat, v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Brute-force oracle: every group element reachable by words of length
/// `<= max_len`, found breadth-first over matrices (so the first word found is
/// reduced), with `s(w) = sum_j r_{i_1} ... r_{i_{j-1}} (alpha_{i_j})` summed
/// along that word. Returns `s(w) -> length` for `w != 1`.
pub fn brute_force_weyl_sums(g: &Gcm, max_len: usize) -> HashMap<RootVector, usize> {
    let n = g.rank();
    let id: Mat = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
    let refl: Vec<Mat> = (0..n).map(|i| reflection(g, i)).collect();
    let mut seen: HashMap<Mat, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut out = HashMap::new();
    let mut layer: Vec<(Mat, Vec<i64>)> = vec![(id, vec![0; n])];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for (w, s) in &layer {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                let step = apply(w, &e);
                let wi = matmul(w, &refl[i]);
                if seen.contains_key(&wi) {
                    continue;
                }
                seen.insert(wi.clone(), ());
                let s2: Vec<i64> = s.iter().zip(&step).map(|(a, b)| a + b).collect();
                let prev = out.insert(RootVector::new(s2.clone()), len);
                assert!(prev.is_none(), "two group elements share s(w) = {s2:?}");
                next.push((wi, s2));
            }
        }
        layer = next;
    }
    out
}

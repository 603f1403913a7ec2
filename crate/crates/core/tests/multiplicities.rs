mod common;

use hyperroot::lattice::vectors_of_height;
use hyperroot::multiplicity::{coarse_bound, mult_berman_moody, mult_peterson, solution_set, MultTable};
use hyperroot::qseries::{ff_level2_series, partitions};
use hyperroot::roots::{apply_word, is_positive_imaginary_root, is_real_root, norm, reflect};
use hyperroot::{cartan, presets, Error, Gcm, RootVector};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn engines_agree_up_to_height_eight() {
    for (name, g) in common::cross_check_gcms() {
        let mut table = MultTable::new(&g);
        for h in 1..=8 {
            for v in vectors_of_height(g.rank(), h) {
                let p = mult_peterson(&g, &v, &mut table).unwrap();
                let b = mult_berman_moody(&g, &v).unwrap();
                assert_eq!(p, b, "{name} at {v}");
            }
        }
    }
}

#[test]
fn engines_agree_on_other_symmetrizable_matrices() {
    for text in ["2,-1;-4,2", "2,-2;-3,2", "2,-1,0;-1,2,-2;0,-1,2", "2,-1,-1;-1,2,-1;-1,-1,2"] {
        let g: Gcm = text.parse().unwrap();
        let mut table = MultTable::new(&g);
        for h in 1..=7 {
            for v in vectors_of_height(g.rank(), h) {
                assert_eq!(
                    mult_peterson(&g, &v, &mut table).unwrap(),
                    mult_berman_moody(&g, &v).unwrap(),
                    "{text} at {v}"
                );
            }
        }
    }
}

#[test]
fn finite_types_have_exactly_their_roots() {
    for name in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let g = presets::preset(name).unwrap();
        let roots = cartan::finite_positive_roots(&g).unwrap();
        let mut table = MultTable::new(&g);
        let top = roots.iter().map(|r| r.height()).max().unwrap();
        table.extend_to(top + 2).unwrap();
        let found: Vec<RootVector> = table.roots(top + 2).into_iter().map(|(r, m)| {
            assert_eq!(m, big(1), "{name} at {r}");
            r
        }).collect();
        let mut want = roots.clone();
        want.sort();
        let mut got = found;
        got.sort();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn affine_imaginary_roots() {
    let a11: Gcm = "2,-2;-2,2".parse().unwrap();
    let mut t = MultTable::new(&a11);
    for k in 1..=4 {
        assert_eq!(mult_peterson(&a11, &[k, k].into(), &mut t).unwrap(), big(1));
    }
    // A2^(1): every k delta has multiplicity 2
    let a21 = presets::preset("A2^(1)").unwrap();
    let mut t = MultTable::new(&a21);
    for k in 1..=4 {
        assert_eq!(mult_peterson(&a21, &[k, k, k].into(), &mut t).unwrap(), big(2));
    }
    // twisted A2^(2): delta = 2 a_0 + a_1
    let tw: Gcm = "2,-4;-1,2".parse().unwrap();
    let mut t = MultTable::new(&tw);
    for k in 1..=4 {
        assert_eq!(mult_peterson(&tw, &[2 * k, k].into(), &mut t).unwrap(), big(1));
    }
}

#[test]
fn f_golden_values_below_height_thirty() {
    let g = presets::f();
    let mut t = MultTable::new(&g);
    for (v, m) in [([7, 7, 2], 56), ([8, 10, 4], 792), ([10, 10, 5], 2434), ([11, 11, 5], 6826), ([11, 11, 7], 4557)] {
        assert_eq!(mult_peterson(&g, &v.into(), &mut t).unwrap(), big(m), "{v:?}");
    }
    assert_eq!(norm(&g, &[11, 11, 7].into()).unwrap(), -56);
    assert_eq!(norm(&g, &[10, 10, 5].into()).unwrap(), -50);
}

#[test]
fn f_levels_one_and_two_match_partition_series() {
    // level 1 (last coordinate 1): p(1 - (a|a)/2); level 2: the level-two series
    let g = presets::f();
    let mut t = MultTable::new(&g);
    t.extend_to(30).unwrap();
    let p = partitions(64);
    let ff = ff_level2_series(64);
    let mut seen = [0, 0];
    for (a, m) in t.roots(30) {
        let n = norm(&g, &a).unwrap();
        if n > 0 {
            continue;
        }
        let idx = (1 - n / 2) as usize;
        let want = match a[2] {
            1 => p.coeff(idx),
            2 => ff.coeff(idx),
            _ => continue,
        };
        seen[a[2] as usize - 1] += 1;
        assert_eq!(&num_bigint::BigInt::from(m), want, "{a}");
    }
    assert!(seen[0] > 20 && seen[1] > 20, "{seen:?}");
}

#[test]
fn real_roots_have_multiplicity_one() {
    for (_, g) in common::cross_check_gcms() {
        let mut t = MultTable::new(&g);
        t.extend_to(12).unwrap();
        for h in 1..=12 {
            for v in vectors_of_height(g.rank(), h) {
                let m = t.mult(&v).unwrap();
                if is_real_root(&g, &v) {
                    assert_eq!(m, big(1), "{v}");
                } else if is_positive_imaginary_root(&g, &v) {
                    assert!(m >= big(1), "{v}");
                } else {
                    assert_eq!(m, big(0), "{v}");
                }
                assert!(m <= coarse_bound(&g, &v));
            }
        }
    }
}

#[test]
fn weyl_invariance_on_sampled_orbits() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(common::seed());
    for (name, g) in common::cross_check_gcms() {
        let mut t = MultTable::new(&g);
        t.extend_to(14).unwrap();
        let roots = t.roots(14);
        for _ in 0..200 {
            let (alpha, m) = &roots[rng.gen_range(0..roots.len())];
            let word: Vec<usize> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..g.rank())).collect();
            let mut beta = apply_word(&g, &word, alpha);
            if beta.is_negative() {
                beta = -beta;
            }
            if beta.height() > 14 || !beta.is_positive() {
                continue;
            }
            assert_eq!(&t.mult(&beta).unwrap(), m, "{name}: {alpha} -> {beta} by {word:?}");
        }
        // a single reflection of an imaginary root keeps the multiplicity
        let imag = RootVector::from(vec![1; g.rank()]);
        if is_positive_imaginary_root(&g, &imag) {
            let r = reflect(&g, 0, &imag);
            if r.height() <= 14 {
                assert_eq!(t.mult(&r), t.mult(&imag));
            }
        }
    }
}

#[test]
fn simple_roots_and_queries() {
    let g = presets::e10();
    let mut t = MultTable::new(&g);
    for i in 0..10 {
        assert_eq!(mult_peterson(&g, &RootVector::simple(10, i), &mut t).unwrap(), big(1));
    }
    assert_eq!(t.frontier(), 1);
    let g = presets::f();
    let mut t = MultTable::new(&g);
    assert_eq!(mult_peterson(&g, &[2, 0, 0].into(), &mut t).unwrap(), big(0));
    assert_eq!(t.get(&[2, 0, 0].into()), Some(&big(0)));
    assert!(matches!(mult_peterson(&g, &[1, -1, 0].into(), &mut t), Err(Error::NotPositive(_))));
    assert!(matches!(mult_peterson(&g, &[1, 1].into(), &mut t), Err(Error::RankMismatch { .. })));
    let other: Gcm = "2,-3;-3,2".parse().unwrap();
    assert!(matches!(mult_peterson(&other, &[1, 1].into(), &mut t), Err(Error::Cache(_))));
    let nonsym: Gcm = "2,-1,-1;-2,2,-1;-1,-1,2".parse().unwrap();
    let mut t = MultTable::new(&nonsym);
    assert!(matches!(mult_peterson(&nonsym, &[1, 1, 1].into(), &mut t), Err(Error::NotSymmetrizable)));
}

#[test]
fn coarse_bound_values() {
    let g: Gcm = "2,-3;-3,2".parse().unwrap();
    assert_eq!(coarse_bound(&g, &[4, 5].into()), big(512));
    assert_eq!(coarse_bound(&g, &[0, 0].into()), big(1));
    assert_eq!(coarse_bound(&presets::f(), &[7, 7, 2].into()), big(3u64.pow(16)));
}

#[test]
fn worked_solution_set() {
    let g: Gcm = "2,-3;-3,2".parse().unwrap();
    let s = solution_set(&g, &[4, 5].into()).unwrap();
    assert_eq!(s.tuples, vec![vec![4, 5, 0, 0], vec![3, 1, 0, 1], vec![0, 4, 1, 0]]);
    let eps: Vec<i64> = s.sums.iter().map(|w| w.epsilon()).collect();
    assert_eq!(eps, vec![1, 1, -1, -1]);
}

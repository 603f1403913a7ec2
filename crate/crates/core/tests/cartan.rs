#![allow(clippy::needless_range_loop)]

use hyperroot::cartan::{classify_indecomposable, extend, overextend, AlgebraKind};
use hyperroot::{classify, presets, Error, Gcm};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn chain_from_a1_reaches_f() {
    let a1 = presets::preset("A1").unwrap();
    let aff = extend(&a1).unwrap();
    assert_eq!(aff, "2,-2;-2,2".parse().unwrap());
    let over = overextend(&aff).unwrap();
    assert_eq!(over, presets::f());
    let t = classify_indecomposable(&over).unwrap();
    assert!(t.flags.hyperbolic && !t.flags.compact_hyperbolic);
}

#[test]
fn e_chain() {
    let e8 = presets::preset("E8").unwrap();
    let e9 = extend(&e8).unwrap();
    assert_eq!(classify_indecomposable(&e9).unwrap().kind, AlgebraKind::Affine);
    let e10 = overextend(&e9).unwrap();
    assert_eq!(e10, presets::e10());
    assert_eq!(e10.det(), BigInt::from(-1));
    assert!(classify_indecomposable(&e10).unwrap().is_hyperbolic());
    let e11 = presets::e11();
    let t = classify_indecomposable(&e11).unwrap();
    assert!(!t.is_hyperbolic() && t.flags.lorentzian);
    assert_eq!(presets::preset("E8^++").unwrap(), e10);
}

#[test]
fn input_errors() {
    assert!(matches!("2,1;1,2".parse::<Gcm>(), Err(Error::NotGcm(_))));
    assert!(matches!("2,-1;0,2".parse::<Gcm>(), Err(Error::NotGcm(_))));
    assert!(matches!("3,-1;-1,2".parse::<Gcm>(), Err(Error::NotGcm(_))));
    assert!("2,-1;-1".parse::<Gcm>().is_err());
    let g: Gcm = "2,-3;-3,2".parse().unwrap();
    assert_eq!(g.symmetrizer(), Some(&[1, 1][..]));
    assert!(classify_indecomposable(&"2,0;0,2".parse().unwrap()).is_err());
}

fn gcm_strategy() -> impl Strategy<Value = Gcm> {
    (2usize..5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0i64..4, 0i64..4), n * (n - 1) / 2)))
        .prop_map(|(n, pairs)| {
            let mut a = vec![vec![0; n]; n];
            let mut k = 0;
            for i in 0..n {
                a[i][i] = 2;
                for j in i + 1..n {
                    let (x, y) = pairs[k];
                    k += 1;
                    // zero pattern must be symmetric
                    let (x, y) = if x == 0 || y == 0 { (0, 0) } else { (x, y) };
                    a[i][j] = -x;
                    a[j][i] = -y;
                }
            }
            Gcm::new(a).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn classification_invariants(g in gcm_strategy()) {
        let c = classify(&g);
        for comp in &c.components {
            let sub = g.principal(&comp.vertices);
            let t = comp.algebra_type;
            if t.flags.compact_hyperbolic { prop_assert!(t.flags.hyperbolic); }
            if t.flags.hyperbolic { prop_assert_eq!(t.kind, AlgebraKind::Indefinite); }
            match t.kind {
                AlgebraKind::Finite => prop_assert!(sub.det() > BigInt::from(0)),
                AlgebraKind::Affine => prop_assert_eq!(sub.det(), BigInt::from(0)),
                AlgebraKind::Indefinite => {}
            }
            if t.flags.hyperbolic && sub.is_symmetrizable() {
                prop_assert!(sub.det() < BigInt::from(0));
            }
        }
        if let Some(d) = g.symmetrizer() {
            let n = g.rank();
            for i in 0..n {
                prop_assert!(d[i] > 0);
                for j in 0..n {
                    prop_assert_eq!(d[i] * g.entry(i, j), d[j] * g.entry(j, i));
                }
            }
        }
    }

    #[test]
    fn classification_ignores_vertex_order(g in gcm_strategy(), rot in 0usize..4) {
        let n = g.rank();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let h = g.permuted(&perm);
        let types = |g: &Gcm| {
            let mut v: Vec<_> = classify(g).components.iter().map(|c| c.algebra_type).collect();
            v.sort_by_key(|t| format!("{t}"));
            v
        };
        prop_assert_eq!(types(&g), types(&h));
        prop_assert_eq!(g.det(), h.det());
    }

    #[test]
    fn text_form_roundtrips(g in gcm_strategy()) {
        prop_assert_eq!(g.to_string().parse::<Gcm>().unwrap(), g.clone());
        prop_assert_eq!(Gcm::from_json(&g.to_json()).unwrap(), g);
    }
}

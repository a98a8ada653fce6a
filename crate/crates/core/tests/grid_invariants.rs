//! Exhaustive identity checks over small sizes.

use std::collections::BTreeMap;

use kfact::enumerate::{forests, k_factorizations, k_forests, k_parking_functions};
use kfact::perm::product_of_cycles;
use kfact::{
    cda, cda_inverse, dual_layout, jcdal, jcdal_inverse, least_entries, KFactorization, KForest,
    Permutation, RootedForest,
};

const GRID: &[(usize, usize)] = &[
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (5, 1),
    (1, 2),
    (2, 2),
    (3, 2),
    (1, 3),
    (2, 3),
    (3, 3),
];

fn binom2(x: usize) -> i64 {
    (x * x.saturating_sub(1) / 2) as i64
}

#[test]
fn forest_statistics_complement_each_other() {
    for n in 0..=6 {
        for forest in forests(n) {
            let s = KForest::uncoloured(forest).stats();
            assert_eq!(s.maj + s.comaj, s.dep);
            assert_eq!(s.inv + s.coinv, s.dep);
            assert_eq!((s.chr, s.cochr), (0, 0));
            assert_eq!((s.maj_k, s.inv_k), (s.maj, s.inv));
        }
    }
    for &(n, k) in GRID {
        for f in k_forests(n, k) {
            let s = f.stats();
            assert_eq!(s.chr + s.cochr, (k as u64 - 1) * s.dep, "{}", f.to_text());
        }
    }
}

#[test]
fn reversing_labels_swaps_inv_and_coinv() {
    for n in 0..=5 {
        let mut inv = BTreeMap::new();
        let mut coinv_reversed = BTreeMap::new();
        for forest in forests(n) {
            let direct = KForest::uncoloured(forest.clone()).stats();
            let reversed = KForest::uncoloured(forest.reversed_labels()).stats();
            // relabelling swaps the two statistics pointwise
            assert_eq!((direct.inv, direct.coinv), (reversed.coinv, reversed.inv));
            *inv.entry(direct.inv).or_insert(0) += 1;
            *coinv_reversed.entry(reversed.coinv).or_insert(0) += 1;
        }
        assert_eq!(inv, coinv_reversed);
    }
}

#[test]
fn factor_products_are_full_cycles() {
    for &(n, k) in GRID {
        for f in k_factorizations(n, k) {
            let p = product_of_cycles(f.m(), f.factors()).unwrap();
            assert_eq!(p, Permutation::full_cycle(f.m()));
            let mut acc = Permutation::identity(f.m());
            for c in f.factors() {
                acc = acc.compose(&c.to_permutation(f.m()).unwrap()).unwrap();
            }
            assert_eq!(acc, p);
        }
    }
}

#[test]
fn area_statistics_under_lower_and_upper() {
    for &(n, k) in GRID {
        let shift = n as i64 * binom2(k);
        for f in k_factorizations(n, k) {
            let a = f.area_stats();
            let lo = f.lower().area_stats();
            let up = f.upper().area_stats();
            let kk = k as i64;
            assert_eq!(
                [
                    a.area % kk,
                    a.coarea % kk,
                    a.semiarea % kk,
                    a.cosemiarea % kk
                ],
                [0; 4]
            );
            assert_eq!(lo.area, a.area + shift, "{f}");
            assert_eq!(a.cosemiarea, lo.coarea, "{f}");
            assert_eq!(up.coarea, a.coarea + shift, "{f}");
            assert_eq!(a.semiarea, up.area, "{f}");
            if k == 1 {
                assert_eq!((a.area, a.coarea), (a.semiarea, a.cosemiarea));
            }
            assert_eq!(a.area, kk * least_entries(&f).disp());
        }
    }
}

#[test]
fn arch_lengths_are_hook_lengths() {
    for m in 1..=5 {
        for f in k_factorizations(m, 1) {
            let layout = dual_layout(&f).unwrap();
            let s = KForest::uncoloured(cda(&f).unwrap()).stats();
            for i in 0..m {
                let (l, r, d) = (
                    layout.left[i] as u64,
                    layout.right[i] as u64,
                    layout.down[i] as u64,
                );
                assert_eq!(s.hook[i], r - l, "{f} arch {}", i + 1);
                assert_eq!(s.hook_left[i], d - l, "{f} arch {}", i + 1);
                assert_eq!(s.hook_right[i], r - d - 1, "{f} arch {}", i + 1);
            }
        }
    }
}

#[test]
fn equal_neighbouring_least_entries_mean_parent_child() {
    for m in 1..=5 {
        for f in k_factorizations(m, 1) {
            let forest = cda(&f).unwrap();
            let a = f.least_entries();
            for i in 1..m {
                assert_eq!(
                    a[i - 1] == a[i],
                    forest.parent(i) == Some(i + 1),
                    "{f} at {i}"
                );
            }
        }
    }
}

#[test]
fn arch_map_round_trips() {
    for m in 1..=5 {
        for f in k_factorizations(m, 1) {
            assert_eq!(cda_inverse(&cda(&f).unwrap()).unwrap(), f);
        }
        for forest in forests(m) {
            assert_eq!(cda(&cda_inverse(&forest).unwrap()).unwrap(), forest);
        }
    }
}

/// Every colouring of the same underlying forest maps back to factorizations
/// with the same semiarea and cosemiarea.
#[test]
fn semiareas_ignore_colours() {
    for &(n, k) in GRID {
        let mut by_shape: BTreeMap<RootedForest, (i64, i64)> = BTreeMap::new();
        for forest in k_forests(n, k) {
            let f: KFactorization = jcdal_inverse(&forest).unwrap();
            let a = f.area_stats();
            let seen = by_shape
                .entry(forest.forest().clone())
                .or_insert((a.semiarea, a.cosemiarea));
            assert_eq!(*seen, (a.semiarea, a.cosemiarea), "{}", forest.to_text());
        }
        for f in k_factorizations(n, k) {
            let forest = jcdal(&f).unwrap();
            let rotated: Vec<usize> = (0..k).map(|c| (c + 1) % k).collect();
            let g = jcdal_inverse(&forest.recoloured(&rotated).unwrap()).unwrap();
            let (a, b) = (f.area_stats(), g.area_stats());
            assert_eq!((a.semiarea, a.cosemiarea), (b.semiarea, b.cosemiarea));
        }
    }
}

#[test]
fn parking_functions_and_forests_share_displacement() {
    for &(n, k) in GRID {
        let mut disp = BTreeMap::new();
        for p in k_parking_functions(n, k) {
            *disp.entry(p.disp()).or_insert(0usize) += 1;
        }
        let mut maj = BTreeMap::new();
        let mut inv = BTreeMap::new();
        for f in k_forests(n, k) {
            let s = f.stats();
            *maj.entry(s.maj_k as i64).or_insert(0usize) += 1;
            *inv.entry(s.inv_k as i64).or_insert(0usize) += 1;
        }
        assert_eq!(disp, inv, "n={n} k={k}");
        assert_eq!(disp, maj, "n={n} k={k}");
    }
}

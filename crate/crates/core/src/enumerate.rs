//! Exhaustive generators for small forests, factorizations and parking
//! functions, plus a search-based enumerator used only as a cross-check.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::archmap::jcdal_inverse;
use crate::error::{Error, Result};
use crate::factorization::KFactorization;
use crate::forest::{validate_parents, KForest, RootedForest};
use crate::parking::{is_k_parking, ParkingFunction};
use crate::perm::{Cycle, Permutation};

/// Largest `kn` the brute-force enumerator accepts without an override.
pub const BRUTE_FORCE_LIMIT: usize = 6;

/// `(kn + 1)^(n - 1)`, the common size of every family here. Taken as 1 at `n = 0`.
pub fn count_formula(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let base = BigUint::from(k) * BigUint::from(n) + 1u32;
    let exp = u32::try_from(n - 1).expect("n fits in u32");
    base.pow(exp)
}

/// Counts through every digit vector in `0..=max` lexicographically.
struct Odometer {
    digits: Vec<usize>,
    max: usize,
    done: bool,
}

impl Odometer {
    fn new(len: usize, max: usize) -> Self {
        Odometer {
            digits: vec![0; len],
            max,
            done: false,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.digits.clone();
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            if *d < self.max {
                *d += 1;
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(current)
    }
}

/// Every rooted forest on `1..=n`, in lexicographic order of parent arrays.
pub fn forests(n: usize) -> impl Iterator<Item = RootedForest> {
    Odometer::new(n, n)
        .filter(|p| validate_parents(p).is_ok())
        .map(RootedForest::from_trusted)
}

/// Every k-forest on `1..=n`: all edge colourings of every forest.
pub fn k_forests(n: usize, k: usize) -> impl Iterator<Item = KForest> {
    assert!(k > 0, "k must be positive");
    forests(n).flat_map(move |forest| {
        let edged: Vec<usize> = (1..=n).filter(|&v| !forest.is_root(v)).collect();
        Odometer::new(edged.len(), k - 1).map(move |choice| {
            let mut colour = vec![None; n];
            for (&v, &c) in edged.iter().zip(&choice) {
                colour[v - 1] = Some(c);
            }
            KForest::new(forest.clone(), k, colour).expect("generated colouring is valid")
        })
    })
}

/// Every minimal k-factorization of `(0 1 ... kn)`, obtained by inverting the
/// forest bijection. Empty when `n = 0`.
pub fn k_factorizations(n: usize, k: usize) -> impl Iterator<Item = KFactorization> {
    k_forests(n, k)
        .filter(move |_| n > 0)
        .map(|forest| jcdal_inverse(&forest).expect("every k-forest has a preimage"))
}

/// Every k-parking function of length `n`, lexicographically.
pub fn k_parking_functions(n: usize, k: usize) -> impl Iterator<Item = ParkingFunction> {
    assert!(k > 0, "k must be positive");
    Odometer::new(n, k * n.saturating_sub(1))
        .filter(move |p| is_k_parking(p, k))
        .map(move |p| ParkingFunction::new(p, k).expect("filtered sequence is parking"))
}

/// Search-based enumeration of minimal k-factorizations, independent of the
/// bijections. Refuses `kn > BRUTE_FORCE_LIMIT`.
pub fn brute_force_factorizations(n: usize, k: usize) -> Result<BTreeSet<KFactorization>> {
    let kn = k.saturating_mul(n);
    if kn > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard {
            kn,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    brute_force_factorizations_unguarded(n, k)
}

/// [`brute_force_factorizations`] without the size guard. Exponential.
pub fn brute_force_factorizations_unguarded(
    n: usize,
    k: usize,
) -> Result<BTreeSet<KFactorization>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let mut found = BTreeSet::new();
    if n == 0 {
        return Ok(found);
    }
    let m = k * n;
    let target = Permutation::full_cycle(m);
    let cycles: Vec<(Cycle, Permutation)> = all_cycles(m, k + 1)
        .into_iter()
        .map(|c| {
            let p = c.to_permutation(m).expect("entries in range");
            (c, p)
        })
        .collect();
    let mut chosen = Vec::with_capacity(n);
    search(
        &cycles,
        &target,
        n,
        k,
        &Permutation::identity(m),
        &mut chosen,
        &mut found,
    );
    Ok(found)
}

/// DFS over prefixes `P_t`. A prefix of `t` factors extends to a minimal
/// factorization only if `P_t` has reflection length `tk` and `P_t^{-1} σ` has
/// reflection length `(n - t)k`.
fn search(
    cycles: &[(Cycle, Permutation)],
    target: &Permutation,
    n: usize,
    k: usize,
    prefix: &Permutation,
    chosen: &mut Vec<usize>,
    found: &mut BTreeSet<KFactorization>,
) {
    let t = chosen.len();
    if t == n {
        if prefix == target {
            let factors = chosen.iter().map(|&i| cycles[i].0.clone()).collect();
            let f = KFactorization::new(k, factors).expect("product checked");
            found.insert(f);
        }
        return;
    }
    for (i, (_, p)) in cycles.iter().enumerate() {
        let next = prefix.compose(p).expect("same size");
        if next.reflection_length() != (t + 1) * k {
            continue;
        }
        let rest = next.inverse().compose(target).expect("same size");
        if rest.reflection_length() != (n - t - 1) * k {
            continue;
        }
        chosen.push(i);
        search(cycles, target, n, k, &next, chosen, found);
        chosen.pop();
    }
}

/// All min-first cycles of length `len` on `0..=m`.
fn all_cycles(m: usize, len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(len);
    subsets(0, m, len, &mut subset, &mut |s| {
        let mut rest = s[1..].to_vec();
        permutations(&mut rest, 0, &mut |tail| {
            let mut entries = vec![s[0]];
            entries.extend_from_slice(tail);
            out.push(Cycle::new(entries).expect("min-first by construction"));
        });
    });
    out
}

fn subsets(start: usize, m: usize, len: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == len {
        f(cur);
        return;
    }
    for x in start..=m {
        cur.push(x);
        subsets(x + 1, m, len, cur, f);
        cur.pop();
    }
}

fn permutations(xs: &mut [usize], at: usize, f: &mut dyn FnMut(&[usize])) {
    if at == xs.len() {
        f(xs);
        return;
    }
    for i in at..xs.len() {
        xs.swap(at, i);
        permutations(xs, at + 1, f);
        xs.swap(at, i);
    }
}

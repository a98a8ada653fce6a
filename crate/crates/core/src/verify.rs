//! Exhaustive checks of the bijections and the identities they imply, with
//! pass/fail reports that carry a counterexample per failing check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::archmap::{cda, cda_inverse, jcdal, jcdal_inverse, jcdal_via_upper};
use crate::enumerate::{
    brute_force_factorizations, count_formula, forests, k_factorizations, k_forests,
    k_parking_functions, BRUTE_FORCE_LIMIT,
};
use crate::error::{Error, Result};
use crate::factorization::{contract_lower, KFactorization};
use crate::parking::{least_entries, least_entries_inverse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Main,
    Dist,
    Hooks,
    Roundtrip,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Main,
        Suite::Dist,
        Suite::Hooks,
        Suite::Roundtrip,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Dist => "dist",
            Suite::Hooks => "hooks",
            Suite::Roundtrip => "roundtrip",
            Suite::Counts => "counts",
        }
    }

    pub fn run(self, n: usize, k: usize) -> Report {
        match self {
            Suite::Main => check_main_theorem(n, k),
            Suite::Dist => check_distributions(n, k),
            Suite::Hooks => check_hook_identities(n, k),
            Suite::Roundtrip => check_roundtrips(n, k),
            Suite::Counts => check_counts(n, k),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub object: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite on one `(n, k)` cell. Only the first failure of each
/// check is kept; `failed` counts all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    fn new(suite: Suite, n: usize, k: usize) -> Self {
        Report {
            suite: suite.name().to_string(),
            n,
            k,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn fail(
        &mut self,
        check: &str,
        object: impl FnOnce() -> String,
        expected: String,
        actual: String,
    ) {
        self.failed += 1;
        if self.failures.iter().all(|f| f.check != check) {
            self.failures.push(Failure {
                check: check.to_string(),
                object: object(),
                expected,
                actual,
            });
        }
    }

    fn expect_eq<T: PartialEq + fmt::Debug>(
        &mut self,
        check: &str,
        object: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        if expected != actual {
            self.fail(
                check,
                object,
                format!("{expected:?}"),
                format!("{actual:?}"),
            );
        }
    }

    fn expect_ok<T>(
        &mut self,
        check: &str,
        object: impl FnOnce() -> String,
        r: Result<T>,
    ) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(check, object, "ok".into(), e.to_string());
                None
            }
        }
    }

    /// One summary line followed by one line per recorded failure.
    pub fn to_lines(&self) -> Vec<String> {
        let status = if self.passed() { "pass" } else { "FAIL" };
        let mut lines = vec![format!(
            "{status} suite={} n={} k={} checked={} failed={}",
            self.suite, self.n, self.k, self.checked, self.failed
        )];
        for f in &self.failures {
            lines.push(format!(
                "  {}: {} expected={} actual={}",
                f.check, f.object, f.expected, f.actual
            ));
        }
        lines
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Runs `suites` on `(n, k)` using up to `jobs` threads. Reports come back in
/// the order of `suites`.
pub fn run_suites(n: usize, k: usize, suites: &[Suite], jobs: usize) -> Vec<Report> {
    let jobs = jobs.max(1);
    if jobs == 1 || suites.len() <= 1 {
        return suites.iter().map(|s| s.run(n, k)).collect();
    }
    let mut out: Vec<Option<Report>> = vec![None; suites.len()];
    for (batch, slots) in suites.chunks(jobs).zip(out.chunks_mut(jobs)) {
        std::thread::scope(|scope| {
            let handles: Vec<_> = batch
                .iter()
                .map(|&suite| scope.spawn(move || suite.run(n, k)))
                .collect();
            for (slot, handle) in slots.iter_mut().zip(handles) {
                *slot = Some(handle.join().expect("suite thread panicked"));
            }
        });
    }
    out.into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

/// For every minimal k-factorization `f` with `F = jcdal(f)`: the four area
/// statistics equal `k` times the matching forest statistics, widths equal `k`
/// times hook lengths, and the upper route gives the same forest.
pub fn check_main_theorem(n: usize, k: usize) -> Report {
    let mut report = Report::new(Suite::Main, n, k);
    for f in k_factorizations(n, k) {
        main_theorem_one(&mut report, &f);
    }
    report
}

/// [`check_main_theorem`] restricted to the given factorizations.
pub fn check_main_theorem_on(fs: &[KFactorization]) -> Report {
    let (n, k) = fs.first().map_or((0, 1), |f| (f.n(), f.k()));
    let mut report = Report::new(Suite::Main, n, k);
    for f in fs {
        main_theorem_one(&mut report, f);
    }
    report
}

fn main_theorem_one(report: &mut Report, f: &KFactorization) {
    report.checked += 1;
    let obj = || f.to_text();
    if let Some(forest) = report.expect_ok("jcdal", obj, jcdal(f)) {
        let s = forest.stats();
        let a = f.area_stats();
        let k = f.k() as i64;
        report.expect_eq("area=k*maj_k", obj, k * s.maj_k as i64, a.area);
        report.expect_eq("coarea=k*comaj_k", obj, k * s.comaj_k as i64, a.coarea);
        report.expect_eq("semiarea=k*maj", obj, k * s.maj as i64, a.semiarea);
        report.expect_eq("cosemiarea=k*comaj", obj, k * s.comaj as i64, a.cosemiarea);
        let scaled: Vec<u64> = s.hook.iter().map(|&h| f.k() as u64 * h).collect();
        let widths: Vec<u64> = f.widths().iter().map(|&w| w as u64).collect();
        report.expect_eq("width=k*hook", obj, scaled, widths);
        let residues = [a.area % k, a.coarea % k, a.semiarea % k, a.cosemiarea % k];
        report.expect_eq("divisible-by-k", obj, [0; 4], residues);
        if let Some(upper) = report.expect_ok("jcdal-via-upper", obj, jcdal_via_upper(f)) {
            report.expect_eq("upper-route", obj, forest.to_text(), upper.to_text());
        }
    }
}

fn tally<T: Ord>(items: impl Iterator<Item = T>) -> BTreeMap<T, usize> {
    let mut counts = BTreeMap::new();
    for item in items {
        *counts.entry(item).or_insert(0) += 1;
    }
    counts
}

fn compare_multisets<T: Ord + fmt::Debug>(
    report: &mut Report,
    check: &str,
    left: &BTreeMap<T, usize>,
    right: &BTreeMap<T, usize>,
) {
    let keys: BTreeSet<&T> = left.keys().chain(right.keys()).collect();
    for key in keys {
        let (l, r) = (left.get(key).copied(), right.get(key).copied());
        if l != r {
            report.fail(
                check,
                || format!("value {key:?}"),
                format!("{}", l.unwrap_or(0)),
                format!("{}", r.unwrap_or(0)),
            );
        }
    }
}

/// Multiset equalities: `(inv, coinv)` on forests against `(area, coarea)` on
/// transposition factorizations (only when `k = 1`), `disp_k` on k-parking
/// functions against `inv_k` on k-forests, and `(maj_k, comaj_k)` against
/// `(inv_k, coinv_k)` on k-forests.
pub fn check_distributions(n: usize, k: usize) -> Report {
    let mut report = Report::new(Suite::Dist, n, k);
    if k == 1 && n > 0 {
        let inv = tally(forests(n).map(|f| {
            let s = crate::forest::KForest::uncoloured(f).stats();
            (s.inv as i64, s.coinv as i64)
        }));
        let area = tally(k_factorizations(n, 1).map(|f| {
            let a = f.area_stats();
            (a.area, a.coarea)
        }));
        report.checked += inv.values().sum::<usize>() + area.values().sum::<usize>();
        compare_multisets(&mut report, "(inv,coinv)~(area,coarea)", &inv, &area);
    }
    let stats: Vec<_> = k_forests(n, k).map(|f| f.stats()).collect();
    let disp = tally(k_parking_functions(n, k).map(|p| p.disp()));
    let inv_k = tally(stats.iter().map(|s| s.inv_k as i64));
    report.checked += stats.len() + disp.values().sum::<usize>();
    compare_multisets(&mut report, "disp_k~inv_k", &disp, &inv_k);
    let maj = tally(stats.iter().map(|s| (s.maj_k, s.comaj_k)));
    let inv = tally(stats.iter().map(|s| (s.inv_k, s.coinv_k)));
    compare_multisets(&mut report, "(maj_k,comaj_k)~(inv_k,coinv_k)", &maj, &inv);
    report
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational hook-length sums: the forest generating function at
/// `z = 1..=n+1`, the sum over transposition factorizations giving `n!`, and the
/// sum over k-factorizations giving `(k+1)(2k+1)...((n-1)k+1) / k^n`.
pub fn check_hook_identities(n: usize, k: usize) -> Report {
    let mut report = Report::new(Suite::Hooks, n, k);

    let weights: Vec<(usize, BigRational)> = forests(n)
        .map(|f| {
            let w = f
                .hook_sizes()
                .iter()
                .fold(BigRational::one(), |acc, &h| acc / ratio(h as u64, 1));
            (f.components(), w)
        })
        .collect();
    report.checked += weights.len();
    for z in 1..=(n as u64 + 1) {
        let lhs = weights.iter().fold(BigRational::zero(), |acc, (c, w)| {
            acc + w * ratio(z, 1).pow(*c as i32)
        });
        let rhs = (0..n as u64).fold(BigRational::one(), |acc, i| acc * ratio(z + i, 1));
        report.expect_eq("forest-hook-polynomial", || format!("z={z}"), rhs, lhs);
    }

    if n > 0 {
        let (count, sum) = width_sum(k_factorizations(n, 1));
        report.checked += count;
        let factorial = (1..=n as u64).fold(BigRational::one(), |acc, i| acc * ratio(i, 1));
        report.expect_eq(
            "transposition-width-sum",
            || format!("n={n}"),
            factorial,
            sum,
        );

        let (count, sum) = width_sum(k_factorizations(n, k));
        report.checked += count;
        let rhs = (1..n as u64).fold(BigRational::one(), |acc, i| {
            acc * ratio(i * k as u64 + 1, 1)
        }) / ratio(k as u64, 1).pow(n as i32);
        report.expect_eq("k-width-sum", || format!("n={n} k={k}"), rhs, sum);
    }
    report
}

fn width_sum(fs: impl Iterator<Item = KFactorization>) -> (usize, BigRational) {
    let mut count = 0;
    let mut sum = BigRational::zero();
    for f in fs {
        count += 1;
        sum += f
            .widths()
            .iter()
            .fold(BigRational::one(), |acc, &w| acc / ratio(w as u64, 1));
    }
    (count, sum)
}

/// Every bijection composed with its inverse is the identity on the grid, and
/// when `kn` is small enough the bijective enumeration agrees with brute force.
pub fn check_roundtrips(n: usize, k: usize) -> Report {
    let mut report = Report::new(Suite::Roundtrip, n, k);
    if n == 0 {
        return report;
    }
    let mut factorizations = BTreeSet::new();
    let mut lowers = BTreeSet::new();
    let mut uppers = BTreeSet::new();
    for forest in k_forests(n, k) {
        report.checked += 1;
        let obj = || forest.to_text();
        let Some(f) = report.expect_ok("jcdal_inverse", obj, jcdal_inverse(&forest)) else {
            continue;
        };
        let fobj = || f.to_text();
        report.expect_ok("validate", fobj, f.validate());
        if let Some(back) = report.expect_ok("jcdal", fobj, jcdal(&f)) {
            report.expect_eq("jcdal(jcdal_inverse(F))=F", obj, &forest, &back);
        }
        let lower = f.lower();
        report.expect_eq(
            "contract_lower(lower(f))=f",
            fobj,
            Ok(&f),
            contract_lower(&lower, k).as_ref(),
        );
        if let Some(tree) = report.expect_ok("cda", fobj, cda(&lower)) {
            report.expect_eq(
                "cda_inverse(cda(g))=g",
                fobj,
                Ok(&lower),
                cda_inverse(&tree).as_ref(),
            );
        }
        let p = least_entries(&f);
        report.expect_eq(
            "L_inverse(L(f))=f",
            fobj,
            Ok(&f),
            least_entries_inverse(&p).as_ref(),
        );
        lowers.insert(lower);
        uppers.insert(f.upper());
        factorizations.insert(f);
    }
    report.expect_eq(
        "lower-injective",
        || format!("n={n} k={k}"),
        factorizations.len(),
        lowers.len(),
    );
    report.expect_eq(
        "upper-injective",
        || format!("n={n} k={k}"),
        factorizations.len(),
        uppers.len(),
    );

    if k == 1 {
        for forest in forests(n) {
            report.checked += 1;
            let obj = || format!("{:?}", forest.parents());
            if let Some(f) = report.expect_ok("cda_inverse", obj, cda_inverse(&forest)) {
                report.expect_eq("cda(cda_inverse(F))=F", obj, Ok(&forest), cda(&f).as_ref());
            }
        }
    }

    for p in k_parking_functions(n, k) {
        report.checked += 1;
        let obj = || p.to_text();
        if let Some(f) = report.expect_ok("L_inverse", obj, least_entries_inverse(&p)) {
            report.expect_eq("L(L_inverse(p))=p", obj, &p, &least_entries(&f));
        }
    }

    if k * n <= BRUTE_FORCE_LIMIT {
        if let Some(brute) = report.expect_ok(
            "brute-force",
            || format!("n={n} k={k}"),
            brute_force_factorizations(n, k),
        ) {
            report.checked += brute.len();
            if brute != factorizations {
                let only_brute = brute
                    .difference(&factorizations)
                    .next()
                    .map(|f| f.to_text());
                let only_bij = factorizations
                    .difference(&brute)
                    .next()
                    .map(|f| f.to_text());
                report.fail(
                    "brute-force=bijective",
                    || format!("n={n} k={k}"),
                    format!("{} elements, e.g. {only_brute:?}", brute.len()),
                    format!("{} elements, e.g. {only_bij:?}", factorizations.len()),
                );
            }
        }
    }
    report
}

/// Sizes of every family against `(kn + 1)^(n - 1)`, and duplicate-freeness.
pub fn check_counts(n: usize, k: usize) -> Report {
    let mut report = Report::new(Suite::Counts, n, k);
    let expected = count_formula(n, k).to_string();
    let cell = || format!("n={n} k={k}");

    let plain: Vec<_> = forests(n).collect();
    let plain_set: BTreeSet<_> = plain.iter().collect();
    report.checked += plain.len();
    report.expect_eq(
        "|R_n|",
        cell,
        count_formula(n, 1).to_string(),
        plain.len().to_string(),
    );
    report.expect_eq("R_n-distinct", cell, plain.len(), plain_set.len());

    let coloured: BTreeSet<_> = k_forests(n, k).collect();
    report.checked += coloured.len();
    report.expect_eq(
        "|R_n^k|",
        cell,
        expected.clone(),
        coloured.len().to_string(),
    );

    if n > 0 {
        let facts: Vec<_> = k_factorizations(n, k).collect();
        let fact_set: BTreeSet<_> = facts.iter().collect();
        report.checked += facts.len();
        report.expect_eq("|F_n^k|", cell, expected.clone(), facts.len().to_string());
        report.expect_eq("F_n^k-distinct", cell, facts.len(), fact_set.len());
    }

    let parking: Vec<_> = k_parking_functions(n, k).collect();
    let parking_set: BTreeSet<_> = parking.iter().collect();
    report.checked += parking.len();
    report.expect_eq("|P_n^k|", cell, expected, parking.len().to_string());
    report.expect_eq("P_n^k-distinct", cell, parking.len(), parking_set.len());
    report
}

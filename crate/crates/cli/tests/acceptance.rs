//! Acceptance suite: one line per criterion, exact equality throughout.
//! Runs without the libtest harness so every line shows up in `cargo test`.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use kfact::enumerate::{
    brute_force_factorizations, forests, k_factorizations, k_forests, k_parking_functions,
};
use kfact::{
    cda, cda_inverse, contract_lower, dual_layout, jcdal, jcdal_inverse, jcdal_via_upper,
    least_entries, least_entries_inverse, KFactorization, KForest,
};

const K1_EXAMPLE: &str = "(6 7)(0 2)(3 6)(3 10)(8 9)(0 3)(5 6)(4 5)(8 10)(1 2)";
const K2_EXAMPLE: &str =
    "(0 1 4)(6 7 8)(13 16 17)(5 6 9)(18 19 20)(0 13 18)(10 11 12)(5 10 13)(2 3 4)(14 15 16)";

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn grid() -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> = (1..=6).map(|n| (n, 1)).collect();
    cells.extend((1..=4).map(|n| (n, 2)));
    cells.extend((1..=3).map(|n| (n, 3)));
    cells
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Outcome {
    ensure(expected == actual, || {
        format!("{what}: expected {expected:?}, got {actual:?}")
    })
}

fn fact(s: &str) -> KFactorization {
    KFactorization::from_text(s).expect("example parses")
}

/// Plain integer power, kept apart from the library's own count.
fn formula(n: usize, k: usize) -> u64 {
    ((k * n + 1) as u64).pow(n as u32 - 1)
}

fn criterion_1() -> Outcome {
    let expected: BTreeSet<String> = ["(0 1)(0 2)", "(0 2)(1 2)", "(1 2)(0 1)"]
        .into_iter()
        .map(String::from)
        .collect();
    let listed: Vec<String> = k_factorizations(2, 1).map(|f| f.to_text()).collect();
    same("F_2 size", 3, listed.len())?;
    same("F_2", expected.clone(), listed.into_iter().collect())?;
    let brute: BTreeSet<String> = brute_force_factorizations(2, 1)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|f| f.to_text())
        .collect();
    same("F_2 by search", expected, brute)
}

fn criterion_2() -> Outcome {
    for (n, k) in grid() {
        let want = formula(n, k);
        same(
            &format!("|R_{n}^{k}|"),
            want,
            k_forests(n, k).count() as u64,
        )?;
        let facts: BTreeSet<KFactorization> = k_factorizations(n, k).collect();
        same(&format!("|F_{n}^{k}|"), want, facts.len() as u64)?;
        same(
            &format!("|P_{n}^{k}|"),
            want,
            k_parking_functions(n, k).count() as u64,
        )?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let f = fact(K1_EXAMPLE);
    let a = f.area_stats();
    same("area", 7, a.area)?;
    same("coarea", 5, a.coarea)?;
    let tree = cda(&f).map_err(|e| e.to_string())?;
    let s = KForest::uncoloured(tree).stats();
    same("maj", 7, s.maj)?;
    same("comaj", 5, s.comaj)?;
    let hooks = vec![1, 2, 3, 7, 1, 3, 1, 1, 2, 1];
    same("hooks", hooks.clone(), s.hook)?;
    same(
        "b - a",
        hooks,
        f.factors()
            .iter()
            .map(|c| (c.max() - c.min()) as u64)
            .collect(),
    )?;
    let layout = dual_layout(&f).map_err(|e| e.to_string())?;
    same("d(4)", 7, layout.down[3])
}

fn criterion_4() -> Outcome {
    let f = fact(K2_EXAMPLE);
    let a = f.area_stats();
    same("area_2", 34, a.area)?;
    same("cosemiarea_2", 12, a.cosemiarea)?;
    same("semiarea_2", 16, a.semiarea)?;
    same("coarea_2", 22, a.coarea)?;
    let star = cda(&f.lower()).map_err(|e| e.to_string())?;
    let s_star = KForest::uncoloured(star).stats();
    same("maj(F*)", 44, s_star.maj)?;
    same("comaj(F*)", 12, s_star.comaj)?;
    let s = jcdal(&f).map_err(|e| e.to_string())?.stats();
    same("maj_2(F)", 17, s.maj_k)?;
    same("comaj(F)", 6, s.comaj)?;
    same("maj(F)", 8, s.maj)?;
    same("comaj_2(F)", 11, s.comaj_k)?;
    let c8 = f.factors()[7].entries();
    same("a_8^2 - a_8^0", 8, c8[2] - c8[0])?;
    same("2 h(8)", 8, 2 * s.hook[7])
}

fn criterion_5() -> Outcome {
    for (n, k) in grid() {
        let kk = k as i64;
        for f in k_factorizations(n, k) {
            let forest = jcdal(&f).map_err(|e| format!("{f}: {e}"))?;
            let s = forest.stats();
            let a = f.area_stats();
            let here = |what: &str| format!("{what} at {f}");
            same(&here("area"), kk * s.maj_k as i64, a.area)?;
            same(&here("coarea"), kk * s.comaj_k as i64, a.coarea)?;
            same(&here("semiarea"), kk * s.maj as i64, a.semiarea)?;
            same(&here("cosemiarea"), kk * s.comaj as i64, a.cosemiarea)?;
            for (j, c) in f.factors().iter().enumerate() {
                let e = c.entries();
                same(
                    &here("a^k - a^0"),
                    k as u64 * s.hook[j],
                    (e[k] - e[0]) as u64,
                )?;
            }
            same(
                &here("residues"),
                [0; 4],
                [
                    a.area % kk,
                    a.coarea % kk,
                    a.semiarea % kk,
                    a.cosemiarea % kk,
                ],
            )?;
            same(&here("upper route"), Ok(forest), jcdal_via_upper(&f))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (n, k) in grid() {
        for forest in k_forests(n, k) {
            let f = jcdal_inverse(&forest).map_err(|e| format!("{}: {e}", forest.to_text()))?;
            same("jcdal after inverse", Ok(forest.clone()), jcdal(&f))?;
            let lower = f.lower();
            same(
                "contract_lower after lower",
                Ok(f.clone()),
                contract_lower(&lower, k),
            )?;
            let tree = cda(&lower).map_err(|e| e.to_string())?;
            same("cda inverse after cda", Ok(lower), cda_inverse(&tree))?;
            same(
                "L inverse after L",
                Ok(f.clone()),
                least_entries_inverse(&least_entries(&f)),
            )?;
        }
        if k == 1 {
            for tree in forests(n) {
                let g = cda_inverse(&tree).map_err(|e| e.to_string())?;
                same("cda after inverse", Ok(tree), cda(&g))?;
            }
        }
        for p in k_parking_functions(n, k) {
            let f = least_entries_inverse(&p).map_err(|e| format!("{}: {e}", p.to_text()))?;
            same("L after inverse", p, least_entries(&f))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (n, k) in [
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 1),
        (6, 1),
        (2, 2),
        (3, 2),
        (1, 3),
        (2, 3),
    ] {
        let brute = brute_force_factorizations(n, k).map_err(|e| e.to_string())?;
        let bijective: BTreeSet<KFactorization> = k_factorizations(n, k).collect();
        same(
            &format!("brute force size n={n} k={k}"),
            formula(n, k),
            brute.len() as u64,
        )?;
        ensure(brute == bijective, || format!("sets differ at n={n} k={k}"))?;
    }
    Ok(())
}

fn tally<T: Ord>(items: impl Iterator<Item = T>) -> BTreeMap<T, usize> {
    let mut out = BTreeMap::new();
    for x in items {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

fn criterion_8() -> Outcome {
    for n in 1..=5 {
        let forest_side = tally(forests(n).map(|t| {
            let s = KForest::uncoloured(t).stats();
            (s.inv as i64, s.coinv as i64)
        }));
        let fact_side = tally(k_factorizations(n, 1).map(|f| {
            let a = f.area_stats();
            (a.area, a.coarea)
        }));
        same(
            &format!("(inv,coinv) vs (area,coarea) n={n}"),
            forest_side,
            fact_side,
        )?;
    }
    for (n, k) in grid() {
        let stats: Vec<_> = k_forests(n, k).map(|f| f.stats()).collect();
        let disp = tally(k_parking_functions(n, k).map(|p| p.disp()));
        let inv_k = tally(stats.iter().map(|s| s.inv_k as i64));
        same(&format!("disp vs inv_k n={n} k={k}"), disp, inv_k)?;
        let maj = tally(stats.iter().map(|s| (s.maj_k, s.comaj_k)));
        let inv = tally(stats.iter().map(|s| (s.inv_k, s.coinv_k)));
        same(
            &format!("(maj_k,comaj_k) vs (inv_k,coinv_k) n={n} k={k}"),
            maj,
            inv,
        )?;
    }
    Ok(())
}

fn q(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn criterion_9() -> Outcome {
    for n in 1..=6usize {
        let terms: Vec<(usize, BigRational)> = forests(n)
            .map(|t| {
                let w = t
                    .hook_sizes()
                    .iter()
                    .fold(BigRational::one(), |acc, &h| acc / q(h as u64));
                (t.components(), w)
            })
            .collect();
        for z in 1..=(n as u64 + 1) {
            let lhs = terms.iter().fold(BigRational::zero(), |acc, (c, w)| {
                acc + w * q(z.pow(*c as u32))
            });
            let rhs = (0..n as u64).fold(BigRational::one(), |acc, i| acc * q(z + i));
            same(&format!("hook polynomial n={n} z={z}"), rhs, lhs)?;
        }
    }
    for n in 1..=5usize {
        let lhs = k_factorizations(n, 1).fold(BigRational::zero(), |acc, f| {
            acc + f
                .factors()
                .iter()
                .fold(BigRational::one(), |p, c| p / q((c.max() - c.min()) as u64))
        });
        let rhs = (1..=n as u64).fold(BigRational::one(), |acc, i| acc * q(i));
        same(&format!("sum over F_{n}"), rhs, lhs)?;
    }
    for (n, k) in grid() {
        let lhs = k_factorizations(n, k).fold(BigRational::zero(), |acc, f| {
            acc + f.factors().iter().fold(BigRational::one(), |p, c| {
                let e = c.entries();
                p / q((e[k] - e[0]) as u64)
            })
        });
        let top = (1..n as u64).fold(BigRational::one(), |acc, i| acc * q(i * k as u64 + 1));
        let rhs = top / q((k as u64).pow(n as u32));
        same(&format!("sum over F_{n}^{k}"), rhs, lhs)?;
    }
    Ok(())
}

fn kfact(args: &[&str], stdin: &str) -> (Option<i32>, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kfact"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin written");
    let out = child.wait_with_output().expect("binary finishes");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_10() -> Outcome {
    let (code, out) = kfact(
        &["convert", "--from", "fact", "--to", "parking", "--k", "2"],
        K2_EXAMPLE,
    );
    same("convert exit", Some(0), code)?;
    same("convert output", "0,6,13,5,18,0,10,5,2,14\n", out.as_str())?;

    let (code, out) = kfact(&["stats", "--type", "fact", "--k", "1"], K1_EXAMPLE);
    same("stats exit", Some(0), code)?;
    same(
        "stats output",
        "k=1\nn=10\narea=7\ncoarea=5\nsemiarea=7\ncosemiarea=5\nleast=6,0,3,3,8,0,5,4,8,1\nwidths=1,2,3,7,1,3,1,1,2,1\n",
        out.as_str(),
    )?;

    let (code, out) = kfact(&["count", "--n", "2", "--k", "1"], "");
    same("count exit", Some(0), code)?;
    same("count output", "3\n", out.as_str())?;

    let (code, _) = kfact(&["stats", "--type", "fact"], "(0 x)");
    same("parse error exit", Some(2), code)?;
    let (code, _) = kfact(&["stats", "--type", "fact"], "(0 2)(0 1)");
    same("invalid object exit", Some(1), code)?;
    let (code, _) = kfact(&["stats", "--type", "parking", "--k", "1"], "1,1");
    same("non-parking exit", Some(1), code)?;
    let (code, _) = kfact(&["count", "--n", "two", "--k", "1"], "");
    same("bad flag exit", Some(2), code)?;
    let (code, _) = kfact(&["verify", "--n", "3", "--k", "1"], "");
    same("verify exit", Some(0), code)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("F_2 reproduction", Duration::from_secs(1), criterion_1),
        (
            "family sizes on the grid",
            Duration::from_secs(120),
            criterion_2,
        ),
        ("k=1 worked example", Duration::from_secs(1), criterion_3),
        ("k=2 worked example", Duration::from_secs(1), criterion_4),
        (
            "statistics transfer on the grid",
            Duration::from_secs(180),
            criterion_5,
        ),
        (
            "round trips on the grid",
            Duration::from_secs(180),
            criterion_6,
        ),
        (
            "search agrees with bijection",
            Duration::from_secs(120),
            criterion_7,
        ),
        (
            "distribution identities",
            Duration::from_secs(120),
            criterion_8,
        ),
        ("hook-length sums", Duration::from_secs(120), criterion_9),
        ("command line contract", Duration::MAX, criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check().and_then(|()| {
            let took = start.elapsed();
            ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
        });
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({took:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({took:.2}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 10 criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}

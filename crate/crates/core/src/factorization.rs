//! Minimal factorizations of the full cycle `(0 1 ... kn)` into `n` cycles of
//! length `k + 1`, their area statistics, and the lower/upper decompositions
//! into transpositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::parse_usize;
use crate::perm::{product_of_cycles, Cycle, Permutation};

/// A sequence of `n` cycles of length `k + 1` on `{0..=kn}`, each written
/// least-entry first, whose left-to-right product is the full cycle.
///
/// Entry `i` of factor `j` is written `a_j^i`; for a valid
/// factorization the entries of each factor are increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KFactorization {
    k: usize,
    factors: Vec<Cycle>,
}

/// The four area statistics of a k-factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AreaStats {
    pub area: i64,
    pub coarea: i64,
    pub semiarea: i64,
    pub cosemiarea: i64,
}

pub(crate) fn binom2(x: usize) -> i64 {
    let x = x as i64;
    x * (x - 1) / 2
}

impl KFactorization {
    /// Validates and wraps `factors`. Factors must already be least-entry first.
    pub fn new(k: usize, factors: Vec<Cycle>) -> Result<Self> {
        let f = KFactorization { k, factors };
        f.validate()?;
        Ok(f)
    }

    /// Like [`KFactorization::new`] but also checks the declared factor count.
    pub fn with_size(n: usize, k: usize, factors: Vec<Cycle>) -> Result<Self> {
        if factors.len() != n {
            return Err(Error::WrongFactorCount {
                expected: n,
                found: factors.len(),
            });
        }
        KFactorization::new(k, factors)
    }

    /// Builds from raw entry lists; each list must start with its minimum.
    pub fn from_entries(k: usize, factors: Vec<Vec<usize>>) -> Result<Self> {
        let cycles = factors
            .into_iter()
            .map(Cycle::new)
            .collect::<Result<Vec<_>>>()?;
        KFactorization::new(k, cycles)
    }

    pub(crate) fn from_trusted(k: usize, factors: Vec<Cycle>) -> Self {
        let f = KFactorization { k, factors };
        debug_assert!(f.validate().is_ok());
        f
    }

    /// Checks cycle lengths, entry range, least-first order and the product.
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::ZeroK);
        }
        if self.factors.is_empty() {
            return Err(Error::WrongFactorCount {
                expected: 1,
                found: 0,
            });
        }
        for (index, c) in self.factors.iter().enumerate() {
            if c.len().checked_sub(1) != Some(self.k) {
                return Err(Error::WrongCycleLength {
                    index,
                    expected: self.k.saturating_add(1),
                    found: c.len(),
                });
            }
        }
        let m = self.m();
        for c in &self.factors {
            if let Some(&entry) = c.entries().iter().find(|&&x| x > m) {
                return Err(Error::EntryOutOfRange { entry, max: m });
            }
        }
        if product_of_cycles(m, &self.factors)? != Permutation::full_cycle(m) {
            return Err(Error::ProductNotFullCycle);
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// Largest point of the ground set, `kn`.
    pub fn m(&self) -> usize {
        self.k * self.factors.len()
    }

    pub fn factors(&self) -> &[Cycle] {
        &self.factors
    }

    /// `a_j^i` with `j` counted from 1.
    pub fn entry(&self, j: usize, i: usize) -> usize {
        self.factors[j - 1].entries()[i]
    }

    /// `(a_1^0, ..., a_n^0)`.
    pub fn least_entries(&self) -> Vec<usize> {
        self.factors.iter().map(|c| c.entries()[0]).collect()
    }

    /// `a_j^k - a_j^0` for each factor.
    pub fn widths(&self) -> Vec<usize> {
        self.factors
            .iter()
            .map(|c| c.entries()[self.k] - c.entries()[0])
            .collect()
    }

    pub fn area_stats(&self) -> AreaStats {
        let k = self.k;
        let n = self.n();
        let total = binom2(k * n);
        let inner = n as i64 * binom2(k);
        let column = |i: usize| -> i64 { self.factors.iter().map(|c| c.entries()[i] as i64).sum() };
        let first = column(0);
        let last = column(k);
        let lower_k: i64 = (0..k).map(column).sum();
        let upper_k: i64 = (1..=k).map(column).sum();
        let (n_i, k_i) = (n as i64, k as i64);
        AreaStats {
            area: total - inner - k_i * first,
            coarea: k_i * (last - n_i) - total - inner,
            semiarea: total - lower_k,
            cosemiarea: upper_k - k_i * n_i - total,
        }
    }

    /// Replaces each factor `(a^0 a^1 ... a^k)` by `(a^0 a^1)(a^0 a^2)...(a^0 a^k)`.
    pub fn lower(&self) -> KFactorization {
        let factors = self
            .factors
            .iter()
            .flat_map(|c| {
                let e = c.entries();
                (1..e.len()).map(move |i| Cycle::from_trusted(vec![e[0], e[i]]))
            })
            .collect();
        KFactorization::from_trusted(1, factors)
    }

    /// Replaces each factor `(a^0 ... a^k)` by `(a^0 a^k)(a^1 a^k)...(a^{k-1} a^k)`.
    pub fn upper(&self) -> KFactorization {
        let factors = self
            .factors
            .iter()
            .flat_map(|c| {
                let e = c.entries();
                let top = e[e.len() - 1];
                (0..e.len() - 1).map(move |i| Cycle::from_trusted(vec![e[i], top]))
            })
            .collect();
        KFactorization::from_trusted(1, factors)
    }

    /// The family `(0, (i-1)k+1, ..., ik)` for `i = 1..=n`.
    pub fn canonical(n: usize, k: usize) -> Result<KFactorization> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if n == 0 {
            return Err(Error::WrongFactorCount {
                expected: 1,
                found: 0,
            });
        }
        let factors = (1..=n)
            .map(|i| {
                let mut e = vec![0];
                e.extend((i - 1) * k + 1..=i * k);
                Cycle::from_trusted(e)
            })
            .collect();
        Ok(KFactorization::from_trusted(k, factors))
    }

    /// Single-spaced text form, e.g. `(0 1 2)(0 3 4)`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses concatenated `(a b c ...)` groups. Each cycle may be in any
    /// rotation; `k` is read off the cycle length.
    pub fn from_text(s: &str) -> Result<KFactorization> {
        let factors = parse_cycles(s)?;
        KFactorization::from_parsed(
            factors.first().map_or(0, |c| c.len().saturating_sub(1)),
            factors,
        )
    }

    fn from_parsed(k: usize, factors: Vec<Cycle>) -> Result<KFactorization> {
        if factors.is_empty() {
            return Err(Error::Parse("no factors".into()));
        }
        KFactorization::new(k, factors)
    }

    pub fn to_json(&self) -> String {
        let raw = FactorizationJson {
            k: self.k,
            n: self.n(),
            factors: self.factors.iter().map(|c| c.entries().to_vec()).collect(),
        };
        serde_json::to_string(&raw).expect("factorization JSON serializes")
    }

    pub fn from_json(s: &str) -> Result<KFactorization> {
        let raw: FactorizationJson = serde_json::from_str(s)
            .map_err(|e| Error::Parse(format!("factorization JSON: {e}")))?;
        let factors = raw
            .factors
            .into_iter()
            .map(Cycle::normalized)
            .collect::<Result<Vec<_>>>()?;
        if factors.is_empty() {
            return Err(Error::Parse("no factors".into()));
        }
        KFactorization::with_size(raw.n, raw.k, factors)
    }
}

impl fmt::Display for KFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.factors {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorizationJson {
    k: usize,
    n: usize,
    factors: Vec<Vec<usize>>,
}

fn parse_cycles(s: &str) -> Result<Vec<Cycle>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim_start();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {:?}", truncate(rest))))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed '('".into()))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Parse("nested '('".into()));
        }
        let entries = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse_usize)
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty cycle".into()));
        }
        cycles.push(Cycle::normalized(entries)?);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn truncate(s: &str) -> &str {
    match s.char_indices().nth(16) {
        Some((i, _)) => &s[..i],
        None => s,
    }
}

/// Inverse of [`KFactorization::lower`] on its image: groups consecutive blocks of
/// `k` transpositions sharing their least entry, with increasing second entries,
/// into one `(k + 1)`-cycle.
pub fn contract_lower(g: &KFactorization, k: usize) -> Result<KFactorization> {
    if g.k != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            found: g.k,
        });
    }
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !g.n().is_multiple_of(k) {
        return Err(Error::WrongFactorCount {
            expected: (g.n() / k + 1) * k,
            found: g.n(),
        });
    }
    let mut factors = Vec::with_capacity(g.n() / k);
    for (block, chunk) in g.factors.chunks(k).enumerate() {
        let root = chunk[0].entries()[0];
        let mut entries = Vec::with_capacity(k + 1);
        entries.push(root);
        for t in chunk {
            let (a, b) = (t.entries()[0], t.entries()[1]);
            if a != root || b <= *entries.last().expect("nonempty") {
                return Err(Error::NotInLowerImage { block });
            }
            entries.push(b);
        }
        factors.push(Cycle::from_trusted(entries));
    }
    KFactorization::new(k, factors)
}

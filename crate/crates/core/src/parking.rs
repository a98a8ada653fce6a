//! k-parking functions, displacement, and the least-entry projection `L` from
//! k-factorizations together with its inverse.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{binom2, contract_lower, KFactorization};
use crate::forest::parse_usize;
use crate::perm::Cycle;

/// A sequence whose nondecreasing rearrangement `b` satisfies `b_i <= k(i - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    k: usize,
    entries: Vec<usize>,
}

pub fn is_k_parking(entries: &[usize], k: usize) -> bool {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &b)| (b as u128) <= (k as u128) * (i as u128))
}

impl ParkingFunction {
    pub fn new(entries: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if !is_k_parking(&entries, k) {
            return Err(Error::NotParking { entries, k });
        }
        Ok(ParkingFunction { k, entries })
    }

    pub(crate) fn from_trusted(entries: Vec<usize>, k: usize) -> Self {
        debug_assert!(is_k_parking(&entries, k));
        ParkingFunction { k, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `k * C(n, 2) - sum of entries`.
    pub fn disp(&self) -> i64 {
        self.k as i64 * binom2(self.n()) - self.entries.iter().map(|&a| a as i64).sum::<i64>()
    }

    /// Repeats every entry `k` times in place, giving an ordinary parking function.
    pub fn expand(&self) -> ParkingFunction {
        let entries = self
            .entries
            .iter()
            .flat_map(|&a| std::iter::repeat_n(a, self.k))
            .collect();
        ParkingFunction::from_trusted(entries, 1)
    }

    /// Comma-separated entries, e.g. `0,6,13`.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_text(s: &str, k: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return ParkingFunction::new(Vec::new(), k);
        }
        let entries = s.split(',').map(parse_usize).collect::<Result<Vec<_>>>()?;
        ParkingFunction::new(entries, k)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ParkingJson {
            k: self.k,
            entries: self.entries.clone(),
        })
        .expect("parking JSON serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: ParkingJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("parking JSON: {e}")))?;
        ParkingFunction::new(raw.entries, raw.k)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParkingJson {
    k: usize,
    entries: Vec<usize>,
}

/// `(a_1^0, ..., a_n^0)`: the least entries of the factors.
pub fn least_entries(f: &KFactorization) -> ParkingFunction {
    ParkingFunction::from_trusted(f.least_entries(), f.k())
}

/// Rebuilds the transposition factorization whose least entries are `p`.
///
/// Sweeps baseline positions left to right keeping a stack of open arches.
/// At position `v` the arches closing there are popped first: while the top
/// label exceeds every label starting at `v` and the popped labels keep
/// decreasing. Then the arches starting at `v` are pushed, largest label first.
pub fn sb_inverse(p: &ParkingFunction) -> Result<KFactorization> {
    if p.k != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            found: p.k,
        });
    }
    let m = p.n();
    if m == 0 {
        return Err(Error::WrongFactorCount {
            expected: 1,
            found: 0,
        });
    }
    // starters[v] lists labels i with a_i = v, ascending
    let mut starters: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for (i, &a) in p.entries.iter().enumerate() {
        if a > m {
            return Err(Error::NotParking {
                entries: p.entries.clone(),
                k: 1,
            });
        }
        starters[a].push(i + 1);
    }
    let mut close = vec![0usize; m + 1];
    let mut stack: Vec<usize> = Vec::new();
    for (v, starting) in starters.iter().enumerate() {
        let ceiling = starting.last().copied().unwrap_or(0);
        let mut previous: Option<usize> = None;
        while let Some(&top) = stack.last() {
            if top <= ceiling || previous.is_some_and(|prev| top > prev) {
                break;
            }
            stack.pop();
            close[top] = v;
            previous = Some(top);
        }
        if previous.is_none() && starting.is_empty() && v > 0 {
            return Err(Error::EmptyPopRequired { position: v });
        }
        stack.extend(starting.iter().rev());
    }
    if !stack.is_empty() {
        return Err(Error::StackNotEmptied);
    }
    let factors = p
        .entries
        .iter()
        .enumerate()
        .map(|(i, &a)| Cycle::new(vec![a, close[i + 1]]))
        .collect::<Result<Vec<_>>>()?;
    KFactorization::new(1, factors)
}

/// Inverse of [`least_entries`]: `contract_lower ∘ sb_inverse ∘ expand`.
pub fn least_entries_inverse(p: &ParkingFunction) -> Result<KFactorization> {
    let lowered = sb_inverse(&p.expand())?;
    contract_lower(&lowered, p.k).map_err(|e| match e {
        Error::NotInLowerImage { block } => Error::Inconsistency(format!(
            "expanded parking function produced a non-lower block {block}"
        )),
        other => other,
    })
}

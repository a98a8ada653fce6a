//! Rooted labelled forests, their edge-coloured variants, and the Mahonian and
//! chromatic statistics on them.
//!
//! Vertices are `1..=n`. A forest is stored as a parent array where `0`
//! marks a root. Children are always enumerated in increasing label order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedForest {
    /// `parent[v - 1]` is the parent of `v`, or 0 when `v` is a root.
    parent: Vec<usize>,
}

/// Checks that a parent array describes a forest on `1..=parent.len()`.
pub fn validate_parents(parent: &[usize]) -> Result<()> {
    let n = parent.len();
    for (i, &p) in parent.iter().enumerate() {
        let v = i + 1;
        if p == v {
            return Err(Error::SelfLoop { vertex: v });
        }
        if p > n {
            return Err(Error::ParentOutOfRange {
                vertex: v,
                parent: p,
                n,
            });
        }
    }
    // 0 = unvisited, 1 = on the current walk, 2 = known to reach a root
    let mut state = vec![0u8; n + 1];
    state[0] = 2;
    let mut walk = Vec::new();
    for start in 1..=n {
        let mut v = start;
        walk.clear();
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = parent[v - 1];
        }
        if state[v] == 1 {
            return Err(Error::CycleDetected { vertex: v });
        }
        for &w in &walk {
            state[w] = 2;
        }
    }
    Ok(())
}

impl RootedForest {
    pub fn new(parent: Vec<usize>) -> Result<Self> {
        validate_parents(&parent)?;
        Ok(RootedForest { parent })
    }

    pub(crate) fn from_trusted(parent: Vec<usize>) -> Self {
        debug_assert!(validate_parents(&parent).is_ok());
        RootedForest { parent }
    }

    /// The forest on `n` vertices with no edges.
    pub fn all_roots(n: usize) -> Self {
        RootedForest { parent: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Parent of `v`, `None` for roots.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v - 1] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v - 1] == 0
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(|&v| self.is_root(v))
    }

    pub fn components(&self) -> usize {
        self.roots().count()
    }

    /// Child lists indexed by vertex; entry 0 lists the roots. Each list is ascending.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.n() + 1];
        for v in 1..=self.n() {
            children[self.parent[v - 1]].push(v);
        }
        children
    }

    /// Vertices in preorder, starting from the roots in increasing order.
    pub fn preorder(&self) -> Vec<usize> {
        let children = self.children();
        let mut order = Vec::with_capacity(self.n());
        let mut stack: Vec<usize> = children[0].iter().rev().copied().collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(children[v].iter().rev());
        }
        order
    }

    /// `h(v)` for `v = 1..=n`, returned at index `v - 1`.
    pub fn hook_sizes(&self) -> Vec<usize> {
        let mut h = vec![1usize; self.n() + 1];
        for &v in self.preorder().iter().rev() {
            let p = self.parent[v - 1];
            if p != 0 {
                h[p] += h[v];
            }
        }
        h.split_off(1)
    }

    /// The forest obtained by exchanging labels `i` and `n + 1 - i`.
    pub fn reversed_labels(&self) -> RootedForest {
        let n = self.n();
        let flip = |v: usize| if v == 0 { 0 } else { n + 1 - v };
        let mut parent = vec![0; n];
        for v in 1..=n {
            parent[flip(v) - 1] = flip(self.parent[v - 1]);
        }
        RootedForest { parent }
    }

    pub fn stats(&self) -> ForestStats {
        KForest::uncoloured(self.clone()).stats()
    }
}

/// A rooted forest with one of `k` colours on every edge, stored on the child vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KForest {
    forest: RootedForest,
    k: usize,
    /// `colour[v - 1]`; `None` exactly at roots.
    colour: Vec<Option<usize>>,
}

impl KForest {
    pub fn new(forest: RootedForest, k: usize, colour: Vec<Option<usize>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if colour.len() != forest.n() {
            return Err(Error::SizeMismatch {
                left: forest.n(),
                right: colour.len(),
            });
        }
        for v in 1..=forest.n() {
            match (forest.is_root(v), colour[v - 1]) {
                (true, Some(_)) => return Err(Error::RootColoured { vertex: v }),
                (false, None) => return Err(Error::MissingColour { vertex: v }),
                (false, Some(c)) if c >= k => {
                    return Err(Error::ColourOutOfRange {
                        vertex: v,
                        colour: c,
                        k,
                    })
                }
                _ => {}
            }
        }
        Ok(KForest { forest, k, colour })
    }

    /// Colours every edge 0 and sets `k = 1`.
    pub fn uncoloured(forest: RootedForest) -> Self {
        let colour = forest
            .parents()
            .iter()
            .map(|&p| if p == 0 { None } else { Some(0) })
            .collect();
        KForest {
            forest,
            k: 1,
            colour,
        }
    }

    pub fn forest(&self) -> &RootedForest {
        &self.forest
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.forest.n()
    }

    /// Colour of the edge into `v`, `None` for roots.
    pub fn colour(&self, v: usize) -> Option<usize> {
        self.colour[v - 1]
    }

    pub fn colours(&self) -> &[Option<usize>] {
        &self.colour
    }

    /// Same forest with every colour `c` replaced by `perm[c]`.
    /// Applies `perm`, a permutation of `0..k`, to every edge colour.
    pub fn recoloured(&self, perm: &[usize]) -> Result<KForest> {
        if perm.len() != self.k {
            return Err(Error::SizeMismatch {
                left: perm.len(),
                right: self.k,
            });
        }
        let mut seen = vec![false; self.k];
        for &c in perm {
            if c >= self.k || std::mem::replace(&mut seen[c], true) {
                return Err(Error::NotAPermutation { value: c });
            }
        }
        let colour = self.colour.iter().map(|c| c.map(|c| perm[c])).collect();
        KForest::new(self.forest.clone(), self.k, colour)
    }

    pub fn stats(&self) -> ForestStats {
        ForestStats::compute(self)
    }

    pub fn to_json(&self) -> String {
        let raw = ForestJson {
            n: self.n(),
            k: self.k,
            parent: self.forest.parent.clone(),
            colour: (self.k > 1).then(|| self.colour.clone()),
        };
        serde_json::to_string(&raw).expect("forest JSON serializes")
    }

    pub fn from_json(s: &str) -> Result<KForest> {
        let raw: ForestJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("forest JSON: {e}")))?;
        if raw.parent.len() != raw.n {
            return Err(Error::SizeMismatch {
                left: raw.n,
                right: raw.parent.len(),
            });
        }
        let forest = RootedForest::new(raw.parent)?;
        let colour = match raw.colour {
            Some(c) => c,
            None if raw.k == 1 => {
                return Ok(KForest::uncoloured(forest));
            }
            None => return Err(Error::Parse("forest JSON with k > 1 needs colours".into())),
        };
        KForest::new(forest, raw.k, colour)
    }

    /// Space-separated parents, each non-root followed by `:colour` when `k > 1`,
    /// e.g. `2:1 0`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 1..=self.n() {
            if v > 1 {
                out.push(' ');
            }
            out.push_str(&self.forest.parent[v - 1].to_string());
            if self.k > 1 {
                if let Some(c) = self.colour[v - 1] {
                    out.push(':');
                    out.push_str(&c.to_string());
                }
            }
        }
        out
    }

    /// Parses the text form. Colours may be omitted when `k = 1`.
    pub fn from_text(s: &str, k: usize) -> Result<KForest> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let mut parent = Vec::new();
        let mut colour = Vec::new();
        for tok in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let (p, c) = match tok.split_once(':') {
                Some((p, c)) => (p, Some(parse_usize(c)?)),
                None => (tok, None),
            };
            parent.push(parse_usize(p)?);
            colour.push(c);
        }
        let forest = RootedForest::new(parent)?;
        if k == 1 {
            for v in 1..=forest.n() {
                match colour[v - 1] {
                    Some(c) if c > 0 => {
                        return Err(Error::ColourOutOfRange {
                            vertex: v,
                            colour: c,
                            k,
                        })
                    }
                    Some(_) if forest.is_root(v) => return Err(Error::RootColoured { vertex: v }),
                    _ => {}
                }
            }
            return Ok(KForest::uncoloured(forest));
        }
        KForest::new(forest, k, colour)
    }
}

pub(crate) fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, found {s:?}")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ForestJson {
    n: usize,
    #[serde(default = "one")]
    k: usize,
    parent: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colour: Option<Vec<Option<usize>>>,
}

fn one() -> usize {
    1
}

/// Snapshot of every statistic of a k-forest. Per-vertex vectors are indexed by `v - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestStats {
    pub k: usize,
    pub hook: Vec<u64>,
    pub hook_left: Vec<u64>,
    pub hook_right: Vec<u64>,
    pub inv_at: Vec<u64>,
    pub coinv_at: Vec<u64>,
    pub components: u64,
    pub dep: u64,
    pub maj: u64,
    pub comaj: u64,
    pub inv: u64,
    pub coinv: u64,
    pub chr: u64,
    pub cochr: u64,
    pub maj_k: u64,
    pub comaj_k: u64,
    pub inv_k: u64,
    pub coinv_k: u64,
}

impl ForestStats {
    fn compute(f: &KForest) -> ForestStats {
        let forest = &f.forest;
        let n = forest.n();
        let k = f.k as u64;
        let order = forest.preorder();

        let mut hook = vec![1u64; n + 1];
        let mut hook_left = vec![0u64; n + 1];
        let mut hook_right = vec![0u64; n + 1];
        for &v in order.iter().rev() {
            let p = forest.parent[v - 1];
            if p != 0 {
                hook[p] += hook[v];
                if v < p {
                    hook_left[p] += hook[v];
                } else {
                    hook_right[p] += hook[v];
                }
            }
        }

        // inv(u) counts labels below u inside the preorder interval of H(u).
        let mut start = vec![0usize; n + 1];
        for (i, &v) in order.iter().enumerate() {
            start[v] = i;
        }
        let mut fenwick = Fenwick::new(n);
        let mut inv_at = vec![0u64; n + 1];
        for u in 1..=n {
            let lo = start[u];
            let hi = lo + hook[u] as usize;
            inv_at[u] = fenwick.prefix(hi) - fenwick.prefix(lo);
            fenwick.add(lo);
        }
        let coinv_at: Vec<u64> = (0..=n)
            .map(|u| if u == 0 { 0 } else { hook[u] - 1 - inv_at[u] })
            .collect();

        let mut dep = 0;
        let mut chr = 0;
        let mut cochr = 0;
        for (colour, &h) in f.colour.iter().zip(&hook[1..]) {
            if let Some(c) = colour {
                let c = *c as u64;
                dep += h;
                chr += c * h;
                cochr += (k - 1 - c) * h;
            }
        }
        let maj: u64 = hook_left[1..].iter().sum();
        let comaj: u64 = hook_right[1..].iter().sum();
        let inv: u64 = inv_at[1..].iter().sum();
        let coinv: u64 = coinv_at[1..].iter().sum();

        ForestStats {
            k: f.k,
            hook: hook.split_off(1),
            hook_left: hook_left.split_off(1),
            hook_right: hook_right.split_off(1),
            inv_at: inv_at.split_off(1),
            coinv_at: coinv_at[1..].to_vec(),
            components: forest.components() as u64,
            dep,
            maj,
            comaj,
            inv,
            coinv,
            chr,
            cochr,
            maj_k: maj + chr,
            comaj_k: comaj + cochr,
            inv_k: inv + chr,
            coinv_k: coinv + cochr,
        }
    }
}

struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick {
            tree: vec![0; n + 1],
        }
    }

    fn add(&mut self, index: usize) {
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions `0..end`.
    fn prefix(&self, end: usize) -> u64 {
        let mut i = end;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }
}

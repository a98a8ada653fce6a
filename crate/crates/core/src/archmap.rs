//! Arch diagrams of transposition factorizations, their planar duals, and the
//! bijection from k-factorizations to k-forests built on top of them.
//!
//! A factorization `(a_1 b_1)...(a_m b_m)` of `(0 1 ... m)` is drawn as arches
//! over baseline points `0..=m`; arch `i` spans the half-open interval
//! `[a_i, b_i)`. Spans never cross, and the forest [`cda`] returns is the
//! cover relation of span inclusion. The dual diagram puts one vertex in
//! every gap `x + 1/2`; gap `x` is identified with the integer `x` here.
//!
//! For `k > 1`, [`jcdal`] lowers each `(k + 1)`-cycle to `k` transpositions,
//! applies [`cda`], and joins the resulting length-`k` paths into single
//! coloured vertices. Vertex `j_i` of the intermediate forest (the `i`-th
//! transposition coming from factor `j`) carries integer label `(j - 1)k + i`.

use crate::error::{Error, Result};
use crate::factorization::{contract_lower, KFactorization};
use crate::forest::{KForest, RootedForest};
use crate::perm::Cycle;

/// Arch endpoints and dual child positions of a transposition factorization.
/// All vectors are indexed by edge label `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualLayout {
    /// Left endpoint `l(i)`.
    pub left: Vec<usize>,
    /// Right endpoint `r(i)`.
    pub right: Vec<usize>,
    /// Gap holding the child endpoint of dual edge `i`.
    pub down: Vec<usize>,
    /// Label of the arch covering arch `i`, 0 when none does.
    pub cover: Vec<usize>,
}

impl DualLayout {
    pub fn m(&self) -> usize {
        self.left.len()
    }

    /// Gap holding the parent endpoint of dual edge `i`; the outer gap `m` for
    /// arches that nothing covers.
    pub fn dual_parent(&self, i: usize) -> usize {
        match self.cover[i - 1] {
            0 => self.m(),
            j => self.down[j - 1],
        }
    }
}

fn require_transpositions(f: &KFactorization) -> Result<()> {
    if f.k() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            found: f.k(),
        });
    }
    Ok(())
}

/// One left-to-right sweep over the baseline computing, for every arch, the arch
/// that covers it and the unique gap inside it not covered by a smaller arch.
fn sweep(spans: &[(usize, usize)]) -> Result<(Vec<usize>, Vec<usize>)> {
    let m = spans.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_unstable_by(|&x, &y| {
        let (lx, rx) = spans[x];
        let (ly, ry) = spans[y];
        lx.cmp(&ly).then(ry.cmp(&rx))
    });
    let mut cover = vec![0usize; m];
    let mut down = vec![usize::MAX; m];
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for gap in 0..m {
        while stack.last().is_some_and(|&t| spans[t].1 <= gap) {
            stack.pop();
        }
        while next < m && spans[order[next]].0 == gap {
            let e = order[next];
            if let Some(&t) = stack.last() {
                if spans[e].1 > spans[t].1 {
                    return Err(Error::Inconsistency(format!(
                        "arches {} and {} cross",
                        t + 1,
                        e + 1
                    )));
                }
                cover[e] = t + 1;
            }
            stack.push(e);
            next += 1;
        }
        let top = *stack
            .last()
            .ok_or_else(|| Error::Inconsistency(format!("gap {gap} lies under no arch")))?;
        if down[top] != usize::MAX {
            return Err(Error::Inconsistency(format!(
                "arch {} encloses two free gaps",
                top + 1
            )));
        }
        down[top] = gap;
    }
    if let Some(e) = down.iter().position(|&d| d == usize::MAX) {
        return Err(Error::Inconsistency(format!(
            "arch {} encloses no free gap",
            e + 1
        )));
    }
    Ok((cover, down))
}

fn spans_of(f: &KFactorization) -> Vec<(usize, usize)> {
    f.factors()
        .iter()
        .map(|c| (c.entries()[0], c.entries()[1]))
        .collect()
}

/// Arch diagram endpoints together with the dual positions.
pub fn dual_layout(f: &KFactorization) -> Result<DualLayout> {
    require_transpositions(f)?;
    let spans = spans_of(f);
    let (cover, down) = sweep(&spans)?;
    Ok(DualLayout {
        left: spans.iter().map(|s| s.0).collect(),
        right: spans.iter().map(|s| s.1).collect(),
        down,
        cover,
    })
}

/// The forest on `1..=m` whose parent relation is span cover: the parent of `i`
/// is the smallest arch strictly containing arch `i`.
pub fn cda(f: &KFactorization) -> Result<RootedForest> {
    require_transpositions(f)?;
    let (cover, _) = sweep(&spans_of(f))?;
    RootedForest::new(cover)
}

/// Inverse of [`cda`].
///
/// Lays the edge-labelled tree out on the baseline: below a vertex entered by
/// edge `i` (the root counts as entered by +infinity) come the subtrees of
/// children smaller than `i` in decreasing order, then the vertex, then the
/// subtrees of larger children in decreasing order. Arch `i` then spans the
/// positions occupied by the subtree below edge `i`.
pub fn cda_inverse(forest: &RootedForest) -> Result<KFactorization> {
    enum Task {
        Enter(usize),
        Place,
        Leave(usize),
    }

    let n = forest.n();
    if n == 0 {
        return Err(Error::WrongFactorCount {
            expected: 1,
            found: 0,
        });
    }
    let children = forest.children();
    let mut first = vec![0usize; n + 1];
    let mut end = vec![0usize; n + 1];
    let mut pos = 0usize;
    let mut stack = vec![Task::Enter(0)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Enter(v) => {
                first[v] = pos;
                stack.push(Task::Leave(v));
                let label = if v == 0 { usize::MAX } else { v };
                let split = children[v].partition_point(|&c| c < label);
                let (smaller, larger) = children[v].split_at(split);
                // popped in the order: smaller descending, the vertex, larger descending
                stack.extend(larger.iter().map(|&c| Task::Enter(c)));
                stack.push(Task::Place);
                stack.extend(smaller.iter().map(|&c| Task::Enter(c)));
            }
            Task::Place => pos += 1,
            Task::Leave(v) => end[v] = pos,
        }
    }
    debug_assert_eq!(pos, n + 1);
    let factors = (1..=n)
        .map(|v| Cycle::new(vec![first[v], end[v]]))
        .collect::<Result<Vec<_>>>()?;
    KFactorization::new(1, factors)
}

fn split_label(label: usize, k: usize) -> (usize, usize) {
    ((label - 1) / k + 1, (label - 1) % k + 1)
}

/// Merges each path `j_1 < ... < j_k` of a forest in the image of `cda ∘ lower`
/// (where `j_i` is a child of `j_{i+1}`) into vertex `j`. An edge leaving `j_i`
/// gets colour `k - i`.
pub fn join(star: &RootedForest, k: usize) -> Result<KForest> {
    join_paths(star, k, PathDirection::Lower)
}

/// Inverse of [`join`]: splits each vertex `j` into the path `j_1, ..., j_k` and
/// hangs a child of colour `c` under `j_{k - c}`.
pub fn unjoin(forest: &KForest) -> RootedForest {
    let k = forest.k();
    let n = forest.n();
    let mut parent = vec![0usize; k * n];
    for j in 1..=n {
        let base = (j - 1) * k;
        for i in 1..k {
            parent[base + i - 1] = base + i + 1;
        }
        if let (Some(r), Some(c)) = (forest.forest().parent(j), forest.colour(j)) {
            parent[base + k - 1] = (r - 1) * k + (k - c);
        }
    }
    RootedForest::from_trusted(parent)
}

#[derive(Clone, Copy)]
enum PathDirection {
    /// `j_i` is a child of `j_{i+1}`; the path hangs from `j_k`.
    Lower,
    /// `j_{i+1}` is a child of `j_i`; the path hangs from `j_1`.
    Upper,
}

fn join_paths(star: &RootedForest, k: usize, direction: PathDirection) -> Result<KForest> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !star.n().is_multiple_of(k) {
        return Err(Error::SizeMismatch {
            left: star.n(),
            right: k,
        });
    }
    let n = star.n() / k;
    let mut parent = vec![0usize; n];
    let mut colour = vec![None; n];
    for j in 1..=n {
        let base = (j - 1) * k;
        for i in 1..k {
            let (child, expected) = match direction {
                PathDirection::Lower => (base + i, base + i + 1),
                PathDirection::Upper => (base + i + 1, base + i),
            };
            if star.parent(child) != Some(expected) {
                return Err(Error::Inconsistency(format!(
                    "vertex {child} should hang from {expected} (factor {j})"
                )));
            }
        }
        let entry = match direction {
            PathDirection::Lower => base + k,
            PathDirection::Upper => base + 1,
        };
        if let Some(p) = star.parent(entry) {
            let (r, s) = split_label(p, k);
            if r == j {
                return Err(Error::Inconsistency(format!(
                    "factor {j} hangs from itself"
                )));
            }
            parent[j - 1] = r;
            colour[j - 1] = Some(k - s);
        }
    }
    KForest::new(RootedForest::new(parent)?, k, colour)
}

/// The bijection `join ∘ cda ∘ lower` from k-factorizations to k-forests.
pub fn jcdal(f: &KFactorization) -> Result<KForest> {
    let star = cda(&f.lower())?;
    join_paths(&star, f.k(), PathDirection::Lower)
}

/// Computes the same map through upper decompositions: `join ∘ cda ∘ upper`,
/// with transposition `(a_j^i a_j^k)` labelled `j_{i+1}`.
pub fn jcdal_via_upper(f: &KFactorization) -> Result<KForest> {
    let star = cda(&f.upper())?;
    join_paths(&star, f.k(), PathDirection::Upper)
}

/// Inverse of [`jcdal`].
pub fn jcdal_inverse(forest: &KForest) -> Result<KFactorization> {
    let star = unjoin(forest);
    let lowered = cda_inverse(&star)?;
    contract_lower(&lowered, forest.k()).map_err(|e| match e {
        Error::NotInLowerImage { block } => Error::Inconsistency(format!(
            "unjoined forest produced a non-lower block {block}"
        )),
        other => other,
    })
}

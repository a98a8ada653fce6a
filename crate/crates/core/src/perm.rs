//! Permutations of `{0..=m}` multiplied left to right.
//!
//! The product `p * q` means "apply `p`, then `q`": `(p * q)(x) = q(p(x))`.
//! Cycles are written with their least entry first.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on the ground set `{0..=m}`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..=m).collect(),
        }
    }

    /// The full cycle `(0 1 2 ... m)`.
    pub fn full_cycle(m: usize) -> Self {
        Permutation {
            images: (0..=m).map(|x| if x == m { 0 } else { x + 1 }).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::Parse(
                "a permutation needs a nonempty ground set".into(),
            ));
        }
        let mut seen = vec![false; images.len()];
        for &y in &images {
            if y >= images.len() || seen[y] {
                return Err(Error::NotAPermutation { value: y });
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Largest element of the ground set.
    pub fn max_point(&self) -> usize {
        self.images.len() - 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` acts first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.images.len() != other.images.len() {
            return Err(Error::SizeMismatch {
                left: self.images.len(),
                right: other.images.len(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Disjoint cycle decomposition, fixed points included, each cycle min-first,
    /// ordered by least entry.
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut entries = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                entries.push(x);
                x = self.images[x];
            }
            out.push(Cycle { entries });
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut count = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// Minimal number of transpositions needed to write `self`.
    pub fn reflection_length(&self) -> usize {
        self.images.len() - self.cycle_count()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            write!(f, "{c}")?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// A cycle with distinct entries, least entry first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    entries: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle from entries that must already start with their minimum.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        check_distinct(&entries)?;
        match entries.iter().min() {
            Some(&min) if entries[0] != min => Err(Error::NotMinFirst { entries }),
            None => Err(Error::Parse("empty cycle".into())),
            _ => Ok(Cycle { entries }),
        }
    }

    /// Builds a cycle from entries in any rotation, rotating the minimum to the front.
    pub fn normalized(mut entries: Vec<usize>) -> Result<Self> {
        check_distinct(&entries)?;
        let pos = entries
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse("empty cycle".into()))?;
        entries.rotate_left(pos);
        Ok(Cycle { entries })
    }

    pub(crate) fn from_trusted(entries: Vec<usize>) -> Self {
        debug_assert!(Cycle::new(entries.clone()).is_ok());
        Cycle { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min(&self) -> usize {
        self.entries[0]
    }

    pub fn max(&self) -> usize {
        *self.entries.iter().max().expect("cycles are nonempty")
    }

    pub fn to_permutation(&self, m: usize) -> Result<Permutation> {
        cycle_to_permutation(self, m)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn check_distinct(entries: &[usize]) -> Result<()> {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedEntry {
            entries: entries.to_vec(),
        });
    }
    Ok(())
}

/// The permutation of `{0..=m}` that cycles the entries of `c` in written order
/// and fixes everything else.
pub fn cycle_to_permutation(c: &Cycle, m: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..=m).collect();
    for (i, &x) in c.entries.iter().enumerate() {
        if x > m {
            return Err(Error::EntryOutOfRange { entry: x, max: m });
        }
        images[x] = c.entries[(i + 1) % c.len()];
    }
    Ok(Permutation { images })
}

/// Left-to-right product of cycles on `{0..=m}`, in O(m + total cycle length).
pub fn product_of_cycles<'a, I>(m: usize, cycles: I) -> Result<Permutation>
where
    I: IntoIterator<Item = &'a Cycle>,
{
    let mut images: Vec<usize> = (0..=m).collect();
    // inverse[y] = x with images[x] = y
    let mut inverse: Vec<usize> = (0..=m).collect();
    let mut sources = Vec::new();
    for c in cycles {
        if let Some(&x) = c.entries.iter().find(|&&x| x > m) {
            return Err(Error::EntryOutOfRange { entry: x, max: m });
        }
        // Multiplying on the right by c sends x to c(images[x]).
        sources.clear();
        sources.extend(c.entries.iter().map(|&y| inverse[y]));
        for (i, &src) in sources.iter().enumerate() {
            let target = c.entries[(i + 1) % c.len()];
            images[src] = target;
            inverse[target] = src;
        }
    }
    Ok(Permutation { images })
}

use thiserror::Error;

/// Everything that can go wrong while building, parsing or converting objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: value {value} is repeated or out of range")]
    NotAPermutation { value: usize },

    #[error("entry {entry} out of range 0..={max}")]
    EntryOutOfRange { entry: usize, max: usize },

    #[error("cycle {entries:?} repeats an entry")]
    RepeatedEntry { entries: Vec<usize> },

    #[error("cycle {entries:?} does not start with its least entry")]
    NotMinFirst { entries: Vec<usize> },

    #[error("expected {expected} factors, found {found}")]
    WrongFactorCount { expected: usize, found: usize },

    #[error("factor {index} has {found} entries, expected {expected}")]
    WrongCycleLength {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("product of the factors is not the full cycle")]
    ProductNotFullCycle,

    #[error("operation needs k = {expected}, got k = {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("k must be at least 1")]
    ZeroK,

    #[error("vertex {vertex} is its own parent")]
    SelfLoop { vertex: usize },

    #[error("parent of vertex {vertex} is {parent}, outside 0..={n}")]
    ParentOutOfRange {
        vertex: usize,
        parent: usize,
        n: usize,
    },

    #[error("parent pointers from vertex {vertex} form a cycle")]
    CycleDetected { vertex: usize },

    #[error("vertex {vertex} has colour {colour}, outside 0..{k}")]
    ColourOutOfRange {
        vertex: usize,
        colour: usize,
        k: usize,
    },

    #[error("non-root vertex {vertex} has no colour")]
    MissingColour { vertex: usize },

    #[error("root vertex {vertex} carries a colour")]
    RootColoured { vertex: usize },

    #[error("block {block} is not the lower decomposition of a cycle")]
    NotInLowerImage { block: usize },

    #[error("{entries:?} is not a {k}-parking function")]
    NotParking { entries: Vec<usize>, k: usize },

    #[error("arches still open after the last position")]
    StackNotEmptied,

    #[error("position {position} has no arch to close or open")]
    EmptyPopRequired { position: usize },

    #[error("brute force limited to kn <= {limit}, got kn = {kn}")]
    SizeGuard { kn: usize, limit: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    /// The word is `root` repeated `exponent` times with `exponent >= 2`.
    #[error("word is not primitive: it is the {exponent}-th power of {root:?}")]
    NotPrimitive { root: String, exponent: usize },

    #[error("word is not a Lyndon word")]
    NotLyndon,

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("first column is not sorted")]
    UnsortedFirstColumn,

    /// The permutation recovered from a last column is not a single cycle.
    #[error("not a valid cyclic BWT: derived permutation has {cycles} cycles")]
    NotCyclic { cycles: usize },

    #[error("rotation offset {offset} out of range for length {len}")]
    BadOffset { offset: u64, len: u64 },

    #[error("Parikh vector is not positive")]
    NonPositive,

    #[error("Parikh vector letters must be strictly increasing")]
    UnorderedLetters,

    #[error("size {n} exceeds enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("length {n} outside {min}..={max}")]
    LengthOutOfRange { n: usize, min: usize, max: usize },

    #[error("empty alphabet")]
    EmptyAlphabet,

    #[error("move-to-front index {0} out of range 0..=255")]
    MtfIndex(usize),

    #[error("run-length stream has a zero-length run")]
    ZeroRun,

    #[error("malformed container: {0}")]
    Malformed(String),
}

//! Words over the byte alphabet and the elementary operations on them:
//! Parikh vectors, rotations, primitivity, rank and the least rotation.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A finite word over the byte alphabet, ordered numerically.
///
/// The derived `Ord` is the lexicographic order on words (a proper prefix
/// sorts first).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Self {
        Word(symbols.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Left rotation: the conjugate `a_{k+1} ... a_n a_1 ... a_k`.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::default();
        }
        let k = k % self.len();
        let mut out = Vec::with_capacity(self.len());
        out.extend_from_slice(&self.0[k..]);
        out.extend_from_slice(&self.0[..k]);
        Word(out)
    }

    pub fn rotate_right(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::default();
        }
        let n = self.len();
        self.rotate_left(n - k % n)
    }

    /// The nondecreasing rearrangement of the letters.
    pub fn sorted(&self) -> Word {
        let mut counts = [0usize; 256];
        for &b in &self.0 {
            counts[b as usize] += 1;
        }
        let mut out = Vec::with_capacity(self.len());
        for (b, &c) in counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(b as u8, c));
        }
        Word(out)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word(s.to_vec())
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", String::from_utf8_lossy(&self.0))
    }
}

/// Letter multiplicities, in increasing letter order.
///
/// Vectors produced by [`parikh`] only list letters that occur. A vector
/// built with [`ParikhVector::new`] may carry zero counts, which is how a
/// letter of a fixed alphabet that does not occur is represented; such a
/// vector is not *positive*.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParikhVector {
    counts: Vec<(u8, usize)>,
}

impl ParikhVector {
    pub fn new(counts: Vec<(u8, usize)>) -> Result<Self> {
        if counts.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(Error::UnorderedLetters);
        }
        Ok(ParikhVector { counts })
    }

    pub fn counts(&self) -> &[(u8, usize)] {
        &self.counts
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        self.counts.iter().map(|&(l, _)| l)
    }

    /// Number of letters `k`.
    pub fn num_letters(&self) -> usize {
        self.counts.len()
    }

    /// Sum of the counts, the length `n` of any word with this vector.
    pub fn total(&self) -> usize {
        self.counts.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.counts.iter().all(|&(_, c)| c > 0)
    }

    pub fn matches(&self, w: &[u8]) -> bool {
        parikh(w).counts == self.counts
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(l, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", char::from(l).escape_default(), c)?;
        }
        Ok(())
    }
}

pub fn parikh(w: &[u8]) -> ParikhVector {
    let mut counts = [0usize; 256];
    for &b in w {
        counts[b as usize] += 1;
    }
    let counts = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(l, &c)| (l as u8, c))
        .collect();
    ParikhVector { counts }
}

/// Length of the shortest period of `w` (KMP failure function).
fn smallest_period(w: &[u8]) -> usize {
    let n = w.len();
    let mut fail = vec![0usize; n + 1];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    n - fail[n]
}

/// The primitive root `u` and exponent `p` with `w = u^p`.
pub fn primitive_root(w: &[u8]) -> Result<(&[u8], usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let p = smallest_period(w);
    if n.is_multiple_of(p) {
        Ok((&w[..p], n / p))
    } else {
        Ok((w, 1))
    }
}

pub fn is_primitive(w: &[u8]) -> Result<bool> {
    Ok(primitive_root(w)?.1 == 1)
}

pub(crate) fn require_primitive(w: &[u8]) -> Result<()> {
    let (root, exponent) = primitive_root(w)?;
    if exponent == 1 {
        Ok(())
    } else {
        Err(Error::NotPrimitive {
            root: String::from_utf8_lossy(root).into_owned(),
            exponent,
        })
    }
}

/// Compares the rotations of `w` starting at `i` and `j` (0-based).
pub(crate) fn cmp_rotations(w: &[u8], i: usize, j: usize) -> std::cmp::Ordering {
    let n = w.len();
    (0..n)
        .map(|t| w[(i + t) % n].cmp(&w[(j + t) % n]))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// All `n` conjugates of a primitive word, sorted increasingly.
pub fn conjugates(w: &[u8]) -> Result<Vec<Word>> {
    require_primitive(w)?;
    let mut starts: Vec<usize> = (0..w.len()).collect();
    starts.sort_by(|&i, &j| cmp_rotations(w, i, j));
    let word = Word::from(w);
    Ok(starts.into_iter().map(|s| word.rotate_left(s)).collect())
}

/// Number of occurrences of `y_i` in `y_1 ... y_i` (1-based `i`).
pub fn rank(i: usize, y: &[u8]) -> Result<usize> {
    if i == 0 || i > y.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: y.len(),
        });
    }
    let letter = y[i - 1];
    Ok(y[..i].iter().filter(|&&b| b == letter).count())
}

/// Start (0-based) of the lexicographically least rotation, via the
/// Lyndon factorization of `ww`. Linear time.
pub(crate) fn least_rotation_start(w: &[u8]) -> usize {
    let n = w.len();
    let at = |t: usize| w[t % n];
    let mut i = 0;
    let mut start = 0;
    while i < n {
        start = i;
        let mut j = i + 1;
        let mut k = i;
        while j < 2 * n && at(k) <= at(j) {
            if at(k) < at(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    start
}

/// The least rotation of a primitive word and the left shift that
/// produces it: `canonical = w.rotate_left(offset)`, and
/// `w = canonical.rotate_right(offset)`.
pub fn canonical_rotation(w: &[u8]) -> Result<(Word, usize)> {
    require_primitive(w)?;
    let offset = least_rotation_start(w);
    Ok((Word::from(w).rotate_left(offset), offset))
}

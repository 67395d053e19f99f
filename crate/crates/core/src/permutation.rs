//! Permutations of `{1, ..., n}`, stored 1-indexed.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1, ..., n}`. `images()[i - 1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// Internal constructor for images already known to form a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of size `n` from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (t, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} in two cycles"
                    )));
                }
                images[p - 1] = cycle[(t + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The `n`-cycle `(c_1 c_2 ... c_n)` read from a word listing every point once.
    pub fn from_cycle_word(word: &[usize]) -> Result<Self> {
        Permutation::from_cycles(word.len(), &[word.to_vec()])
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i`, 1-based. Panics if `i` is out of range.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    /// `start, π(start), π²(start), ...` (infinite).
    pub fn orbit(&self, start: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(start), move |&i| Some(self.apply(i)))
    }

    /// Disjoint cycles, each led by its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// True when the permutation is a single cycle through all `n` points.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.len();
        n > 0 && self.orbit(1).skip(1).take_while(|&i| i != 1).count() == n - 1
    }
}

/// Parenthesized cycle notation with no separators, e.g. `(35)(124)`.
///
/// When some point exceeds 9 the digits would run together, so points are
/// separated by single spaces in that case, e.g. `(1 3 7 11 4)`.
pub fn format_cycles(cycles: &[Vec<usize>]) -> String {
    let sep = if cycles.iter().flatten().any(|&p| p > 9) {
        " "
    } else {
        ""
    };
    cycles
        .iter()
        .map(|c| {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            format!("({})", body.join(sep))
        })
        .collect()
}

/// One line of space-separated images.
pub fn format_images(p: &Permutation) -> String {
    let parts: Vec<String> = p.images().iter().map(usize::to_string).collect();
    parts.join(" ")
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(&self.cycles()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

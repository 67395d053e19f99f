//! Lyndon words and the nonincreasing Lyndon factorization.

use crate::error::{Error, Result};
use crate::words::{least_rotation_start, Word};

/// A Lyndon word is primitive and strictly smaller than its proper rotations.
pub fn is_lyndon(w: &[u8]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    // A single Duval factor covering the whole word.
    Ok(duval_spans(w).len() == 1)
}

/// The unique factorization `w = l_1 l_2 ... l_m` with every `l_i` Lyndon and
/// `l_1 >= l_2 >= ... >= l_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonFactorization {
    factors: Vec<Word>,
}

impl LyndonFactorization {
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.iter().map(Word::len)
    }

    /// `(start, len)` of each factor in the source word, 0-based.
    pub fn spans(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.factors
            .iter()
            .map(|f| {
                let span = (start, f.len());
                start += f.len();
                span
            })
            .collect()
    }

    /// The type of the word: factor lengths sorted descending.
    pub fn word_type(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.lengths().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn concat(&self) -> Word {
        Word::new(
            self.factors
                .iter()
                .flat_map(|f| f.iter().copied())
                .collect::<Vec<_>>(),
        )
    }
}

/// Duval's algorithm. Returns factor spans `(start, len)` in order.
fn duval_spans(w: &[u8]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut spans = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            spans.push((i, period));
            i += period;
        }
    }
    spans
}

pub fn lyndon_factorize(w: &[u8]) -> Result<LyndonFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let factors = duval_spans(w)
        .into_iter()
        .map(|(s, len)| Word::from(&w[s..s + len]))
        .collect();
    Ok(LyndonFactorization { factors })
}

pub fn word_type(w: &[u8]) -> Result<Vec<usize>> {
    Ok(lyndon_factorize(w)?.word_type())
}

/// The Lyndon word conjugate to a primitive `w`, i.e. its least rotation.
pub fn lyndon_conjugate(w: &[u8]) -> Result<Word> {
    crate::words::require_primitive(w)?;
    Ok(Word::from(w).rotate_left(least_rotation_start(w)))
}

//! Descents, the partial-sum set `ρ(v)`, and the correspondence between
//! words and permutations that extends the transform's `π` to arbitrary
//! words.
//!
//! For a primitive word `w` with Parikh vector `v` the descents of
//! `π = P(w)` all lie in `ρ(v)`: `π` is increasing on each block of equal
//! letters of the sorted word. Restricted to Lyndon words with a fixed
//! positive `v`, `P` is a bijection onto the `n`-cycles whose descents lie
//! in `ρ(v)`. The verification routines here check that statement by
//! exhaustive enumeration on both sides.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::bwt::{bwt_transform, permutation_from_bwt, pi_of};
use crate::error::{Error, Result};
use crate::lyndon::lyndon_factorize;
use crate::permutation::{format_cycles, Permutation};
use crate::words::{parikh, require_primitive, ParikhVector, Word};

pub const DEFAULT_LIMIT: usize = 10;

/// Indices `i` in `1..n` with `π(i) > π(i + 1)`, increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DescentSet(Vec<usize>);

/// `{n_1, n_1 + n_2, ..., n_1 + ... + n_{k-1}}` for a positive `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RhoSet(Vec<usize>);

impl DescentSet {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset_of(&self, rho: &RhoSet) -> bool {
        self.0.iter().all(|d| rho.0.binary_search(d).is_ok())
    }
}

impl RhoSet {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

pub fn descents(pi: &Permutation) -> DescentSet {
    DescentSet(
        pi.images()
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect(),
    )
}

/// Proper partial sums of a positive vector. The total `n` is excluded.
pub fn rho(v: &ParikhVector) -> Result<RhoSet> {
    if !v.is_positive() {
        return Err(Error::NonPositive);
    }
    let counts = v.counts();
    let mut sum = 0;
    let sums = counts
        .iter()
        .take(counts.len().saturating_sub(1))
        .map(|&(_, c)| {
            sum += c;
            sum
        })
        .collect();
    Ok(RhoSet(sums))
}

/// Whether `des(P(w)) ⊆ ρ(parikh(w))`.
pub fn descent_bound_check(w: &[u8]) -> Result<bool> {
    require_primitive(w)?;
    let pi = pi_of(w)?;
    Ok(descents(&pi).is_subset_of(&rho(&parikh(w))?))
}

/// Compares `u^ω` with `v^ω`. Two periodic words that agree on their first
/// `|u| + |v|` letters are equal.
fn cmp_periodic(u: &[u8], v: &[u8]) -> Ordering {
    let len = u.len() + v.len();
    (0..len)
        .map(|t| u[t % u.len()].cmp(&v[t % v.len()]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// The permutation attached to an arbitrary word, as cycles listed in the
/// order of the Lyndon factors, each starting at the rank of the factor's
/// first letter.
///
/// Every position `p` inside a factor `f` is labelled by the infinite
/// periodic word read from `p` along `f`. Positions are ranked by those
/// labels; equal labels (repeated factors) are ranked by position. Each
/// factor then gives the cycle of the ranks of its consecutive positions.
pub fn gr_cycles(w: &[u8]) -> Result<Vec<Vec<usize>>> {
    let fact = lyndon_factorize(w)?;
    let spans = fact.spans();
    // (position, factor start, factor len)
    let mut positions: Vec<(usize, usize, usize)> = spans
        .iter()
        .flat_map(|&(s, len)| (s..s + len).map(move |p| (p, s, len)))
        .collect();
    let label = |&(p, s, len): &(usize, usize, usize)| -> Vec<u8> {
        let f = &w[s..s + len];
        let k = p - s;
        [&f[k..], &f[..k]].concat()
    };
    positions.sort_by(|a, b| cmp_periodic(&label(a), &label(b)).then(a.0.cmp(&b.0)));
    let mut rank = vec![0; w.len()];
    for (r, &(p, _, _)) in positions.iter().enumerate() {
        rank[p] = r + 1;
    }
    Ok(spans
        .iter()
        .map(|&(s, len)| (s..s + len).map(|p| rank[p]).collect())
        .collect())
}

pub fn gr_map(w: &[u8]) -> Result<Permutation> {
    let cycles = gr_cycles(w)?;
    Permutation::from_cycles(w.len(), &cycles)
}

/// `gr_map` in cycle notation, cycles in factor order, e.g. `(35)(124)`.
pub fn gr_notation(w: &[u8]) -> Result<String> {
    Ok(format_cycles(&gr_cycles(w)?))
}

/// Whether the permutation rebuilt from `y` as a last column is one `n`-cycle.
pub fn is_co_lyndon(y: &[u8]) -> Result<bool> {
    Ok(permutation_from_bwt(y)?.is_full_cycle())
}

/// Sorted, deduplicated alphabet.
pub fn normalize_alphabet(letters: &[u8]) -> Result<Vec<u8>> {
    let set: BTreeSet<u8> = letters.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    Ok(set.into_iter().collect())
}

/// Lyndon words of length exactly `n` over `alphabet` (sorted, distinct),
/// in increasing order. Generates all Lyndon words of length at most `n`
/// by successive extension and increment, keeping those of length `n`.
pub fn lyndon_words(n: usize, alphabet: &[u8]) -> Vec<Word> {
    let k = alphabet.len();
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let mut digits = vec![0usize];
    loop {
        if digits.len() == n {
            out.push(
                digits
                    .iter()
                    .map(|&d| alphabet[d])
                    .collect::<Vec<u8>>()
                    .into(),
            );
        }
        let period = digits.len();
        while digits.len() < n {
            digits.push(digits[digits.len() - period]);
        }
        while digits.last() == Some(&(k - 1)) {
            digits.pop();
        }
        match digits.last_mut() {
            Some(d) => *d += 1,
            None => break,
        }
    }
    out
}

/// Calls `f` with the images of every `n`-cycle on `{1, ..., n}`.
fn for_each_full_cycle(n: usize, mut f: impl FnMut(&Permutation)) {
    if n == 0 {
        return;
    }
    // (1 c_2 ... c_n) for every arrangement of 2..=n, in lexicographic order.
    let mut tail: Vec<usize> = (2..=n).collect();
    let mut word = Vec::with_capacity(n);
    loop {
        word.clear();
        word.push(1);
        word.extend_from_slice(&tail);
        f(&Permutation::from_cycle_word(&word).expect("cycle word lists each point once"));
        if !next_permutation(&mut tail) {
            break;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Outcome of checking the Lyndon-word/`n`-cycle correspondence for one
/// Parikh vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub parikh_vector: ParikhVector,
    /// Conjugacy classes of primitive words with this vector.
    pub class_count: usize,
    /// `n`-cycles whose descents lie in `ρ(v)`.
    pub perm_count: usize,
    /// Distinct classes have distinct images.
    pub injective: bool,
    /// The image set is exactly the set of counted cycles.
    pub surjective: bool,
}

impl BijectionReport {
    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

pub fn verify_theorem1(v: &ParikhVector, limit: usize) -> Result<BijectionReport> {
    let rho_set = rho(v)?;
    let n = v.total();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    check_limit(n, limit)?;

    let letters: Vec<u8> = v.letters().collect();
    let classes: Vec<Word> = lyndon_words(n, &letters)
        .into_iter()
        .filter(|w| v.matches(w))
        .collect();
    let images: BTreeSet<Permutation> = classes.iter().map(|w| pi_of(w)).collect::<Result<_>>()?;

    let mut targets = BTreeSet::new();
    for_each_full_cycle(n, |pi| {
        if descents(pi).is_subset_of(&rho_set) {
            targets.insert(pi.clone());
        }
    });

    Ok(BijectionReport {
        parikh_vector: v.clone(),
        class_count: classes.len(),
        perm_count: targets.len(),
        injective: images.len() == classes.len(),
        surjective: images == targets,
    })
}

/// Positive Parikh vectors of total `n` over `alphabet`, in lexicographic
/// order of their count sequences.
pub fn positive_vectors(n: usize, alphabet: &[u8]) -> Vec<ParikhVector> {
    fn compositions(n: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if n >= 1 {
                prefix.push(n);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for first in 1..n {
            prefix.push(first);
            compositions(n - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    if !alphabet.is_empty() {
        compositions(n, alphabet.len(), &mut Vec::new(), &mut all);
    }
    all.into_iter()
        .map(|counts| {
            ParikhVector::new(alphabet.iter().copied().zip(counts).collect())
                .expect("alphabet is sorted")
        })
        .collect()
}

/// [`verify_theorem1`] for every positive vector of total `n` over
/// `alphabet`, run in parallel. Reports come back in vector order.
pub fn verify_all(n: usize, alphabet: &[u8], limit: usize) -> Result<Vec<BijectionReport>> {
    let alphabet = normalize_alphabet(alphabet)?;
    check_limit(n, limit)?;
    positive_vectors(n, &alphabet)
        .par_iter()
        .map(|v| verify_theorem1(v, limit))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCaseReport {
    pub n: usize,
    pub lyndon_count: usize,
    /// `n`-cycles with exactly one descent.
    pub cycle_count: usize,
    pub bijective: bool,
}

/// Checks that `P` maps the binary Lyndon words of length `n` one-to-one
/// onto the `n`-cycles with exactly one descent.
pub fn binary_special_case_check(n: usize, limit: usize) -> Result<BinaryCaseReport> {
    if n < 2 || n > limit {
        return Err(Error::LengthOutOfRange {
            n,
            min: 2,
            max: limit,
        });
    }
    let words = lyndon_words(n, b"ab");
    let images: BTreeSet<Permutation> = words.iter().map(|w| pi_of(w)).collect::<Result<_>>()?;
    let mut targets = BTreeSet::new();
    for_each_full_cycle(n, |pi| {
        if descents(pi).len() == 1 {
            targets.insert(pi.clone());
        }
    });
    Ok(BinaryCaseReport {
        n,
        lyndon_count: words.len(),
        cycle_count: targets.len(),
        bijective: images.len() == words.len() && images == targets,
    })
}

/// A Lyndon word, its transform and its cycle `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub lyndon: Word,
    pub co_lyndon: Word,
    pub cycle: Permutation,
}

impl TableRow {
    /// `lyndon<TAB>co_lyndon<TAB>(cycle)`.
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.lyndon, self.co_lyndon, self.cycle)
    }
}

pub fn enumerate_lyndon_colyndon(n: usize, alphabet: &[u8], limit: usize) -> Result<Vec<TableRow>> {
    let alphabet = normalize_alphabet(alphabet)?;
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    check_limit(n, limit)?;
    lyndon_words(n, &alphabet)
        .into_iter()
        .map(|w| {
            let co_lyndon = bwt_transform(&w)?.last_column;
            let cycle = pi_of(&w)?;
            Ok(TableRow {
                lyndon: w,
                co_lyndon,
                cycle,
            })
        })
        .collect()
}

//! The cyclic Burrows-Wheeler transform and its inverse.
//!
//! For a primitive word `w` let `w_1 < w_2 < ... < w_n` be its conjugates.
//! The transform `T(w)` is the word formed by the last letters of the
//! `w_i`. It only depends on the conjugacy class of `w`, so every
//! computation here works on the Lyndon conjugate and the container keeps
//! the rotation offset needed to give back the exact input.
//!
//! Two permutations describe the sorted array of conjugates:
//!
//! * `σ` sends `i` to the row of the conjugate starting at position `i` of
//!   the Lyndon word, so `σ(1) = 1`;
//! * `π` sends row `i` to the row of its left shift by one letter. It is the
//!   `n`-cycle `(σ(1) σ(2) ... σ(n))` and it maps the last column of the
//!   array onto the first one: `z_i = T(w)_{π(i)}` where `z` is the sorted
//!   word.
//!
//! Inversion rebuilds `π` from `T(w)` alone, matching the `r`-th occurrence
//! of each letter in `z` with its `r`-th occurrence in `T(w)`, and then
//! reads `z` along the orbit of 1.

use crate::error::{Error, Result};
use crate::lyndon::is_lyndon;
use crate::permutation::Permutation;
use crate::suffix_array::suffix_array;
use crate::words::{canonical_rotation, cmp_rotations, Word};

const CONTAINER_MAGIC: &[u8; 5] = b"BWTC1";
const HEADER_LEN: usize = 5 + 8 + 8;

/// `T(w)` together with the left shift taking the input to its Lyndon
/// conjugate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BwtContainer {
    pub last_column: Word,
    pub rotation_offset: usize,
}

impl BwtContainer {
    /// `"BWTC1"`, `n` as u64 LE, offset as u64 LE, then the `n` bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.last_column.len());
        out.extend_from_slice(CONTAINER_MAGIC);
        write_header_fields(&mut out, self.last_column.len(), self.rotation_offset);
        out.extend_from_slice(&self.last_column);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let rest = bytes
            .strip_prefix(CONTAINER_MAGIC)
            .ok_or_else(|| Error::Malformed("missing BWTC1 magic".into()))?;
        let (n, offset, payload) = read_header_fields(rest)?;
        if payload.len() != n {
            return Err(Error::Malformed(format!(
                "header declares {n} bytes, found {}",
                payload.len()
            )));
        }
        Ok(BwtContainer {
            last_column: Word::from(payload),
            rotation_offset: offset,
        })
    }
}

pub(crate) fn write_header_fields(out: &mut Vec<u8>, n: usize, offset: usize) {
    out.extend_from_slice(&(n as u64).to_le_bytes());
    out.extend_from_slice(&(offset as u64).to_le_bytes());
}

/// Parses `n` and the rotation offset, returning the remaining bytes.
pub(crate) fn read_header_fields(bytes: &[u8]) -> Result<(usize, usize, &[u8])> {
    if bytes.len() < 16 {
        return Err(Error::Malformed("truncated header".into()));
    }
    let n = u64::from_le_bytes(bytes[..8].try_into().unwrap());
    let offset = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
    if n == 0 || offset >= n {
        return Err(Error::BadOffset { offset, len: n });
    }
    let n = usize::try_from(n).map_err(|_| Error::Malformed("length overflows usize".into()))?;
    Ok((n, offset as usize, &bytes[16..]))
}

pub fn bwt_transform(w: &[u8]) -> Result<BwtContainer> {
    let (lyndon, offset) = canonical_rotation(w)?;
    let sigma = sort_conjugates_fast(&lyndon)?;
    Ok(BwtContainer {
        last_column: last_column(&lyndon, &sigma),
        rotation_offset: offset,
    })
}

/// `b_{σ(i)} = a_{i-1}`: the row holding the conjugate that starts at `i`
/// ends with the letter before `i`.
fn last_column(lyndon: &[u8], sigma: &Permutation) -> Word {
    let n = lyndon.len();
    let mut out = vec![0u8; n];
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        out[sigma.apply(i) - 1] = lyndon[prev - 1];
    }
    Word::from(out)
}

/// `σ` of the Lyndon conjugate of `w`, by suffix sorting.
pub fn sigma(w: &[u8]) -> Result<Permutation> {
    let (lyndon, _) = canonical_rotation(w)?;
    sort_conjugates_fast(&lyndon)
}

/// `σ` of the Lyndon conjugate of `w`, by comparing whole rotations.
/// Quadratic per comparison; meant for small inputs and cross-checking.
pub fn sigma_naive(w: &[u8]) -> Result<Permutation> {
    let (lyndon, _) = canonical_rotation(w)?;
    Ok(sigma_by_rotation_sort(&lyndon))
}

fn sigma_by_rotation_sort(w: &[u8]) -> Permutation {
    let mut starts: Vec<usize> = (0..w.len()).collect();
    starts.sort_by(|&i, &j| cmp_rotations(w, i, j));
    ranks_from_order(&starts)
}

/// Inverts a sorted order of 0-based starts into 1-based ranks.
fn ranks_from_order(order: &[usize]) -> Permutation {
    let mut images = vec![0; order.len()];
    for (row, &start) in order.iter().enumerate() {
        images[start] = row + 1;
    }
    Permutation::from_images_unchecked(images)
}

/// `σ` of a Lyndon word through its suffix array: for a Lyndon word the
/// conjugates are ordered like the corresponding suffixes.
pub fn sort_conjugates_fast(w: &[u8]) -> Result<Permutation> {
    if !is_lyndon(w)? {
        return Err(Error::NotLyndon);
    }
    Ok(ranks_from_order(&suffix_array(w)))
}

/// `π = P(w)`, with `π(σ(i)) = σ(i + 1)` (indices mod `n`).
pub fn pi_of(w: &[u8]) -> Result<Permutation> {
    Ok(pi_from_sigma(&sigma(w)?))
}

pub(crate) fn pi_from_sigma(sigma: &Permutation) -> Permutation {
    let n = sigma.len();
    let mut images = vec![0; n];
    for i in 1..=n {
        let next = if i == n { 1 } else { i + 1 };
        images[sigma.apply(i) - 1] = sigma.apply(next);
    }
    Permutation::from_images_unchecked(images)
}

/// Rebuilds `π` from a last column `y`: `π(i)` is the position in `y` of
/// the occurrence of `z_i` with the same rank as `i` has in `z = sort(y)`.
pub fn permutation_from_bwt(y: &[u8]) -> Result<Permutation> {
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    // First (0-based) position of each letter's block in z.
    let mut block = [0usize; 256];
    for &b in y {
        block[b as usize] += 1;
    }
    let mut sum = 0;
    for c in block.iter_mut() {
        let here = *c;
        *c = sum;
        sum += here;
    }
    let mut images = vec![0; y.len()];
    for (j, &b) in y.iter().enumerate() {
        images[block[b as usize]] = j + 1;
        block[b as usize] += 1;
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Reads `z` along the orbit of 1: `a_i = z_{π^{i-1}(1)}`.
pub fn word_from(z: &[u8], pi: &Permutation) -> Result<Word> {
    if z.len() != pi.len() {
        return Err(Error::LengthMismatch {
            expected: z.len(),
            actual: pi.len(),
        });
    }
    if z.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !z.windows(2).all(|p| p[0] <= p[1]) {
        return Err(Error::UnsortedFirstColumn);
    }
    if !pi.is_full_cycle() {
        return Err(Error::NotCyclic {
            cycles: pi.num_cycles(),
        });
    }
    Ok(pi
        .orbit(1)
        .take(z.len())
        .map(|i| z[i - 1])
        .collect::<Vec<u8>>()
        .into())
}

/// Recovers the exact word a container was built from.
pub fn invert_bwt(container: &BwtContainer) -> Result<Word> {
    let y = &container.last_column;
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    if container.rotation_offset >= y.len() {
        return Err(Error::BadOffset {
            offset: container.rotation_offset as u64,
            len: y.len() as u64,
        });
    }
    let pi = permutation_from_bwt(y)?;
    let lyndon = word_from(&y.sorted(), &pi)?;
    Ok(lyndon.rotate_right(container.rotation_offset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::conjugates;
    use proptest::prelude::*;

    const SIGMA_EX: [usize; 11] = [1, 3, 7, 11, 4, 8, 5, 9, 2, 6, 10];
    const PI_EX: [usize; 11] = [3, 6, 7, 8, 9, 10, 11, 5, 2, 1, 4];

    /// Algorithm Permutation as a direct left-to-right scan of y for each
    /// letter of z, restarting at each new letter block.
    fn permutation_by_scan(b: &[u8]) -> Vec<usize> {
        let mut c = b.to_vec();
        c.sort_unstable();
        let n = b.len();
        let mut pi = vec![0; n];
        let mut j = 0;
        for i in 1..=n {
            if i == 1 || c[i - 2] != c[i - 1] {
                j = 0;
            }
            loop {
                j += 1;
                if b[j - 1] == c[i - 1] {
                    break;
                }
            }
            pi[i - 1] = j;
        }
        pi
    }

    #[test]
    fn transform_examples() {
        let c = bwt_transform(b"abracadabra").unwrap();
        assert_eq!(c.last_column.as_bytes(), b"rdarcaaaabb");
        assert_eq!(c.rotation_offset, 10);
        let c = bwt_transform(b"a").unwrap();
        assert_eq!(
            (c.last_column.as_bytes(), c.rotation_offset),
            (&b"a"[..], 0)
        );
        let c = bwt_transform(b"ab").unwrap();
        assert_eq!(
            (c.last_column.as_bytes(), c.rotation_offset),
            (&b"ba"[..], 0)
        );
    }

    #[test]
    fn transform_errors() {
        assert_eq!(bwt_transform(b""), Err(Error::EmptyWord));
        assert_eq!(
            bwt_transform(b"abab"),
            Err(Error::NotPrimitive {
                root: "ab".into(),
                exponent: 2
            })
        );
    }

    #[test]
    fn transform_is_rotation_invariant() {
        let w = Word::from("abracadabra");
        for k in 0..w.len() {
            let c = bwt_transform(&w.rotate_left(k)).unwrap();
            assert_eq!(c.last_column.as_bytes(), b"rdarcaaaabb");
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(b"abracadabra").unwrap().images(), &SIGMA_EX);
        assert_eq!(sigma(b"aabracadabr").unwrap().images(), &SIGMA_EX);
        assert_eq!(sigma(b"a").unwrap().images(), &[1]);
        assert_eq!(sigma(b"ab").unwrap().images(), &[1, 2]);
        assert_eq!(sigma_naive(b"abracadabra").unwrap().images(), &SIGMA_EX);
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_of(b"abracadabra").unwrap().images(), &PI_EX);
        assert_eq!(pi_of(b"a").unwrap().images(), &[1]);
        assert_eq!(pi_of(b"ab").unwrap().images(), &[2, 1]);
    }

    #[test]
    fn permutation_from_bwt_examples() {
        assert_eq!(
            permutation_from_bwt(b"rdarcaaaabb").unwrap().images(),
            &PI_EX
        );
        assert_eq!(permutation_by_scan(b"rdarcaaaabb"), PI_EX);
        assert_eq!(permutation_from_bwt(b"a").unwrap().images(), &[1]);
        assert_eq!(permutation_from_bwt(b"ba").unwrap().images(), &[2, 1]);
        assert_eq!(permutation_from_bwt(b""), Err(Error::EmptyWord));
    }

    #[test]
    fn word_from_examples() {
        let pi = Permutation::from_images(PI_EX.to_vec()).unwrap();
        assert_eq!(
            word_from(b"aaaaabbcdrr", &pi).unwrap().as_bytes(),
            b"aabracadabr"
        );
        assert_eq!(
            word_from(b"a", &Permutation::identity(1))
                .unwrap()
                .as_bytes(),
            b"a"
        );
        let swap = Permutation::from_images(vec![2, 1]).unwrap();
        assert_eq!(word_from(b"ab", &swap).unwrap().as_bytes(), b"ab");
    }

    #[test]
    fn word_from_errors() {
        let id = Permutation::identity(2);
        assert_eq!(word_from(b"ab", &id), Err(Error::NotCyclic { cycles: 2 }));
        let swap = Permutation::from_images(vec![2, 1]).unwrap();
        assert_eq!(
            word_from(b"abc", &swap),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        );
        assert_eq!(word_from(b"ba", &swap), Err(Error::UnsortedFirstColumn));
    }

    #[test]
    fn invert_examples() {
        let c = BwtContainer {
            last_column: Word::from("rdarcaaaabb"),
            rotation_offset: 10,
        };
        assert_eq!(invert_bwt(&c).unwrap().as_bytes(), b"abracadabra");
        let c = BwtContainer {
            last_column: Word::from("a"),
            rotation_offset: 0,
        };
        assert_eq!(invert_bwt(&c).unwrap().as_bytes(), b"a");
        for offset in 0..2 {
            let c = BwtContainer {
                last_column: Word::from("ab"),
                rotation_offset: offset,
            };
            assert_eq!(invert_bwt(&c), Err(Error::NotCyclic { cycles: 2 }));
        }
        let c = BwtContainer {
            last_column: Word::from("ba"),
            rotation_offset: 2,
        };
        assert!(matches!(invert_bwt(&c), Err(Error::BadOffset { .. })));
    }

    #[test]
    fn sort_conjugates_fast_examples() {
        for w in [&b"aabracadabr"[..], b"ab", b"aaaab"] {
            assert_eq!(sort_conjugates_fast(w).unwrap(), sigma_by_rotation_sort(w));
        }
        assert_eq!(sort_conjugates_fast(b"ab").unwrap().images(), &[1, 2]);
        assert_eq!(sort_conjugates_fast(b"ba"), Err(Error::NotLyndon));
        assert_eq!(sort_conjugates_fast(b"aa"), Err(Error::NotLyndon));
    }

    #[test]
    fn container_bytes() {
        let c = bwt_transform(b"abracadabra").unwrap();
        let bytes = c.to_bytes();
        let mut expected = b"BWTC1".to_vec();
        expected.extend_from_slice(&11u64.to_le_bytes());
        expected.extend_from_slice(&10u64.to_le_bytes());
        expected.extend_from_slice(b"rdarcaaaabb");
        assert_eq!(bytes, expected);
        assert_eq!(BwtContainer::from_bytes(&bytes).unwrap(), c);

        assert!(matches!(
            BwtContainer::from_bytes(b"BWTC2"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            BwtContainer::from_bytes(&bytes[..20]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            BwtContainer::from_bytes(&bytes[..bytes.len() - 1]),
            Err(Error::Malformed(_))
        ));
        let mut bad = bytes.clone();
        bad[13..21].copy_from_slice(&11u64.to_le_bytes());
        assert!(matches!(
            BwtContainer::from_bytes(&bad),
            Err(Error::BadOffset { .. })
        ));
    }

    /// Every row of the sorted-conjugate array, shifted left by one letter,
    /// is the row `π` sends it to.
    #[test]
    fn pi_shifts_rows() {
        for n in 1..=10u32 {
            for code in 0..2usize.pow(n) {
                let w: Vec<u8> = (0..n).map(|t| b'a' + (code >> t & 1) as u8).collect();
                if !crate::words::is_primitive(&w).unwrap() {
                    continue;
                }
                let rows = conjugates(&w).unwrap();
                let pi = pi_of(&w).unwrap();
                for i in 1..=rows.len() {
                    assert_eq!(rows[pi.apply(i) - 1], rows[i - 1].rotate_left(1));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip(w in proptest::collection::vec(0u8..4, 1..200)) {
            prop_assume!(crate::words::is_primitive(&w).unwrap());
            let c = bwt_transform(&w).unwrap();
            prop_assert_eq!(invert_bwt(&c).unwrap().into_bytes(), w);
        }

        #[test]
        fn linear_permutation_matches_scan(y in proptest::collection::vec(0u8..5, 1..100)) {
            prop_assert_eq!(permutation_from_bwt(&y).unwrap().images().to_vec(), permutation_by_scan(&y));
        }
    }
}

//! Suffix array construction.
//!
//! [`suffix_array`] uses induced sorting (SA-IS) and runs in linear time.
//! [`suffix_array_doubling`] is an independent `O(n log n)` prefix-doubling
//! construction with radix sorting, kept for cross-checking.

const NONE: usize = usize::MAX;

/// Start positions (0-based) of the suffixes of `text` in increasing order.
/// A proper prefix sorts before any of its extensions.
pub fn suffix_array(text: &[u8]) -> Vec<usize> {
    let s: Vec<usize> = text.iter().map(|&b| b as usize).collect();
    sa_is(&s, 255)
}

/// Induced sorting over symbols in `0..=upper`.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // is_s[i]: suffix i is S-type (smaller than suffix i + 1).
    let mut is_s = vec![false; n];
    for i in (0..n - 1).rev() {
        is_s[i] = if s[i] == s[i + 1] {
            is_s[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // bucket_l[c]: start of bucket c; bucket_s[c]: start of its S-type part.
    let mut bucket_l = vec![0usize; upper + 2];
    let mut bucket_s = vec![0usize; upper + 2];
    for i in 0..n {
        if is_s[i] {
            bucket_l[s[i] + 1] += 1;
        } else {
            bucket_s[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        bucket_s[c] += bucket_l[c];
        bucket_l[c + 1] += bucket_s[c];
    }

    let induce = |sa: &mut Vec<usize>, lms: &[usize]| {
        sa.iter_mut().for_each(|x| *x = NONE);
        let mut next = bucket_s.clone();
        for &d in lms {
            sa[next[s[d]]] = d;
            next[s[d]] += 1;
        }
        let mut next = bucket_l.clone();
        sa[next[s[n - 1]]] = n - 1;
        next[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !is_s[v - 1] {
                sa[next[s[v - 1]]] = v - 1;
                next[s[v - 1]] += 1;
            }
        }
        let mut end = bucket_l.clone();
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && is_s[v - 1] {
                end[s[v - 1] + 1] -= 1;
                sa[end[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    // Leftmost S-type positions and their index among them.
    let mut lms_index = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !is_s[i - 1] && is_s[i] {
            lms_index[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();

    let mut sa = vec![NONE; n];
    induce(&mut sa, &lms);
    if m == 0 {
        return sa;
    }

    // Name the LMS substrings in sorted order and sort them recursively.
    let mut sorted_lms: Vec<usize> = sa
        .iter()
        .copied()
        .filter(|&v| lms_index[v] != NONE)
        .collect();
    let mut reduced = vec![0usize; m];
    let mut name = 0;
    for t in 1..m {
        let (mut l, mut r) = (sorted_lms[t - 1], sorted_lms[t]);
        let end_l = lms.get(lms_index[l] + 1).copied().unwrap_or(n);
        let end_r = lms.get(lms_index[r] + 1).copied().unwrap_or(n);
        let mut same = end_l - l == end_r - r;
        if same {
            while l < end_l && s[l] == s[r] {
                l += 1;
                r += 1;
            }
            if l == n || s[l] != s[r] {
                same = false;
            }
        }
        if !same {
            name += 1;
        }
        reduced[lms_index[sorted_lms[t]]] = name;
    }
    let reduced_sa = sa_is(&reduced, name);
    for (t, &r) in reduced_sa.iter().enumerate() {
        sorted_lms[t] = lms[r];
    }
    induce(&mut sa, &sorted_lms);
    sa
}

/// Prefix doubling with radix sorting. Each round sorts suffixes by their
/// first `2k` symbols using the previous round's ranks as keys and stops
/// once all ranks are distinct.
pub fn suffix_array_doubling(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }

    // Round 0: counting sort on the first symbol.
    let mut buckets = [0usize; 257];
    for &b in text {
        buckets[b as usize + 1] += 1;
    }
    for c in 1..257 {
        buckets[c] += buckets[c - 1];
    }
    let mut sa = vec![0usize; n];
    let mut next = buckets;
    for (i, &b) in text.iter().enumerate() {
        sa[next[b as usize]] = i;
        next[b as usize] += 1;
    }
    // rank[i] in 1..=classes; 0 is reserved for "past the end".
    let mut rank = vec![0usize; n];
    let mut classes = 0;
    for t in 0..n {
        if t == 0 || text[sa[t]] != text[sa[t - 1]] {
            classes += 1;
        }
        rank[sa[t]] = classes;
    }

    let mut second = vec![0usize; n];
    let mut new_rank = vec![0usize; n];
    let mut count = vec![0usize; n + 2];
    let mut k = 1;
    while classes < n {
        // Order by second key: suffixes whose second half is empty come
        // first, then the rest in the order of the current array.
        let mut t = 0;
        for i in n.saturating_sub(k)..n {
            second[t] = i;
            t += 1;
        }
        for &s in &sa {
            if s >= k {
                second[t] = s - k;
                t += 1;
            }
        }

        // Stable counting sort by first key.
        count.iter_mut().for_each(|c| *c = 0);
        for &r in &rank {
            count[r] += 1;
        }
        let mut sum = 0;
        for c in count.iter_mut() {
            let here = *c;
            *c = sum;
            sum += here;
        }
        for &s in &second {
            let r = rank[s];
            sa[count[r]] = s;
            count[r] += 1;
        }

        let key = |i: usize, rank: &[usize]| (rank[i], if i + k < n { rank[i + k] } else { 0 });
        classes = 0;
        for t in 0..n {
            if t == 0 || key(sa[t], &rank) != key(sa[t - 1], &rank) {
                classes += 1;
            }
            new_rank[sa[t]] = classes;
        }
        std::mem::swap(&mut rank, &mut new_rank);
        k *= 2;
    }
    sa
}

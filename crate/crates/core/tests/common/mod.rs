//! Independent oracles shared by the integration tests. Nothing here calls
//! into the sorting, inversion or enumeration code under test.

#![allow(dead_code)]

use rand::Rng;

/// All rotations of `w`, sorted. Row `r` (0-based) is the `(r+1)`-th conjugate.
pub fn sorted_rotations(w: &[u8]) -> Vec<Vec<u8>> {
    let n = w.len();
    let mut rows: Vec<Vec<u8>> = (0..n).map(|k| [&w[k..], &w[..k]].concat()).collect();
    rows.sort();
    rows
}

pub fn is_primitive(w: &[u8]) -> bool {
    let n = w.len();
    n > 0
        && (1..n)
            .filter(|d| n.is_multiple_of(*d))
            .all(|d| (0..n).any(|i| w[i] != w[i % d]))
}

pub fn is_lyndon(w: &[u8]) -> bool {
    is_primitive(w) && sorted_rotations(w)[0] == w
}

pub fn least_rotation(w: &[u8]) -> Vec<u8> {
    sorted_rotations(w).swap_remove(0)
}

/// 1-based σ of `w` itself: rank of the rotation starting at position i.
pub fn sigma_by_brute_force(w: &[u8]) -> Vec<usize> {
    let rows = sorted_rotations(w);
    (0..w.len())
        .map(|k| {
            let rot = [&w[k..], &w[..k]].concat();
            rows.iter().position(|r| *r == rot).unwrap() + 1
        })
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, len: usize, k: u8) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..k)).collect()
}

/// Resamples until primitive. Over two or more letters almost every draw is.
pub fn random_primitive_word<R: Rng>(rng: &mut R, len: usize, k: u8) -> Vec<u8> {
    loop {
        let w = random_word(rng, len, k);
        if is_primitive(&w) {
            return w;
        }
    }
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of Lyndon words of length n over k letters: (1/n) Σ_{d|n} μ(d) k^{n/d}.
pub fn lyndon_count(n: usize, k: u64) -> u64 {
    let sum: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * k.pow((n / d) as u32) as i64)
        .sum();
    (sum / n as i64) as u64
}

/// Number of n-cycles with exactly one descent, by enumerating all n-cycles
/// as cycle words (1 c_2 ... c_n).
pub fn one_descent_cycles(n: usize) -> usize {
    fn rec(n: usize, word: &mut Vec<usize>, used: &mut [bool], count: &mut usize) {
        if word.len() == n {
            let mut images = vec![0; n];
            for t in 0..n {
                images[word[t] - 1] = word[(t + 1) % n];
            }
            let des = images.windows(2).filter(|p| p[0] > p[1]).count();
            if des == 1 {
                *count += 1;
            }
            return;
        }
        for v in 2..=n {
            if !used[v] {
                used[v] = true;
                word.push(v);
                rec(n, word, used, count);
                word.pop();
                used[v] = false;
            }
        }
    }
    let mut count = 0;
    rec(n, &mut vec![1], &mut vec![false; n + 1], &mut count);
    count
}

/// Checks the σ/π/T(w) identities and the column-shift property on the Lyndon
/// representative of `w`, given the library's σ, π, and T(w).
pub fn check_equations(w: &[u8], sigma: &[usize], pi: &[usize], last: &[u8]) -> Result<(), String> {
    let lyn = least_rotation(w);
    let n = lyn.len();
    let mut z = lyn.clone();
    z.sort_unstable();
    let rows = sorted_rotations(&lyn);
    let wrap = |i: usize| (i + n - 1) % n + 1;
    let rank = |i: usize, y: &[u8]| y[..i].iter().filter(|&&b| b == y[i - 1]).count();

    if sigma != sigma_by_brute_force(&lyn) {
        return Err("sigma differs from brute force".into());
    }
    for i in 1..=n {
        // a_i = c_{σ(i)}
        if lyn[i - 1] != z[sigma[i - 1] - 1] {
            return Err(format!("a_i != c_sigma(i) at {i}"));
        }
    }
    let mut sigma_inv = vec![0; n];
    for i in 1..=n {
        sigma_inv[sigma[i - 1] - 1] = i;
    }
    for i in 1..=n {
        // b_i = a_{σ^{-1}(i) - 1}
        if last[i - 1] != lyn[wrap(sigma_inv[i - 1] - 1) - 1] {
            return Err(format!("last column is not the preceding letter at {i}"));
        }
        // the last column is the last letters of the sorted rotations
        if last[i - 1] != rows[i - 1][n - 1] {
            return Err(format!("last column differs from sorted rotations at {i}"));
        }
        // definition of π: π(i) = σ(σ^{-1}(i) + 1)
        if pi[i - 1] != sigma[wrap(sigma_inv[i - 1] + 1) - 1] {
            return Err(format!("pi definition fails at {i}"));
        }
        // c_i = b_{π(i)}
        if z[i - 1] != last[pi[i - 1] - 1] {
            return Err(format!("c_i != b_pi(i) at {i}"));
        }
        // rank(i, z) = rank(π(i), y)
        if rank(i, &z) != rank(pi[i - 1], last) {
            return Err(format!("rank not preserved at {i}"));
        }
    }
    // i < j, c_i = c_j ⇒ π(i) < π(j); adjacent pairs suffice within a block
    for i in 1..n {
        if z[i - 1] == z[i] && pi[i - 1] >= pi[i] {
            return Err(format!("pi not increasing on a letter block at {i}"));
        }
    }
    // σ(i) = π^{i-1}(1)
    let mut j = 1;
    for i in 1..=n {
        if sigma[i - 1] != j {
            return Err(format!("sigma is not the pi-orbit of 1 at {i}"));
        }
        j = pi[j - 1];
    }
    Ok(())
}

/// Row π(i) of the sorted-rotation array is row i shifted left by one.
pub fn check_column_shift(w: &[u8], pi: &[usize]) -> Result<(), String> {
    let rows = sorted_rotations(&least_rotation(w));
    for (i, row) in rows.iter().enumerate() {
        let shifted = [&row[1..], &row[..1]].concat();
        if rows[pi[i] - 1] != shifted {
            return Err(format!("column shift fails at row {}", i + 1));
        }
    }
    Ok(())
}

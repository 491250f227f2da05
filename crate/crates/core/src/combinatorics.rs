// Copyright 2026 The boson-jw Authors
// SPDX-License-Identifier: Apache-2.0

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    fn recurse(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, f64)>) {
        if prefix.len() == used.len() {
            out.push((prefix.clone(), permutation_sign(prefix)));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                recurse(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    recurse(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Sign of a permutation from its inversion count.
pub fn permutation_sign(perm: &[usize]) -> f64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Every occupation vector of `n` particles over `m` modes, in reverse
/// lexicographic order (`[n, 0, ..]` first).
pub fn occupations(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn recurse(m: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == m {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=left).rev() {
            prefix.push(k);
            recurse(m, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        recurse(m, n, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

//! Exhaustive iteration over `S_n` in lexicographic order, sequentially or
//! split across threads by first entry.

use rayon::prelude::*;

use crate::perm::Permutation;

/// Rearranges `values` into its lexicographic successor; returns `false` (and
/// leaves `values` as the last permutation) when there is none.
pub fn next_permutation(values: &mut [u32]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| values[i] < values[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| values[j] > values[i]).unwrap();
    values.swap(i, j);
    values[i + 1..].reverse();
    true
}

/// Calls `visit` on every permutation of length `n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&values);
        if !next_permutation(&mut values) {
            break;
        }
    }
}

/// Visits, in lexicographic order, every permutation of length `n` whose
/// first entry is `first`.
pub fn for_each_with_first(n: usize, first: u32, mut visit: impl FnMut(&[u32])) {
    let mut values = Vec::with_capacity(n);
    values.push(first);
    values.extend((1..=n as u32).filter(|&v| v != first));
    loop {
        visit(&values);
        if !next_permutation(&mut values[1..]) {
            break;
        }
    }
}

/// Parallel fold over `S_n`, partitioned by first entry. `fold` accumulates
/// into a per-partition state created by `init`; partition states are then
/// combined with `merge` in first-entry order, so any order-sensitive merge
/// (e.g. list concatenation) yields lexicographic order.
pub fn par_fold<S, I, F, M>(n: usize, init: I, fold: F, merge: M) -> S
where
    S: Send,
    I: Fn() -> S + Sync,
    F: Fn(&mut S, &[u32]) + Sync,
    M: Fn(S, S) -> S + Sync,
{
    if n == 0 {
        let mut s = init();
        fold(&mut s, &[]);
        return s;
    }
    let parts: Vec<S> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut s = init();
            for_each_with_first(n, first, |values| fold(&mut s, values));
            s
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}

/// Owning iterator over `S_n` in lexicographic order.
pub struct Permutations {
    next: Option<Vec<u32>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { next: Some((1..=n as u32).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

//! Membership in the `k`-pass-sortable classes and exhaustive computation of
//! their bases.
//!
//! The basis `B_t` of the class "tier at most `t`" consists of the
//! permutations of tier exactly `t + 1` all of whose one-point deletions have
//! tier at most `t`. Every such element has length at most `3(t + 1)`, so a
//! search over `S_L` for `L <= 3(t + 1)` is complete.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{separated_pair_count, Permutation};
use crate::sym;
use crate::tier::{max_tier, tier};

/// Largest length searched without `allow_large`.
pub const DEFAULT_LENGTH_CAP: usize = 10;
/// Largest length searched at all.
pub const LARGE_LENGTH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    pub tier_bound: usize,
    /// Sorted by length, then lexicographically.
    pub elements: Vec<Permutation>,
}

impl Basis {
    pub fn new(tier_bound: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_by(canonical_order);
        elements.dedup();
        Basis { tier_bound, elements }
    }

    pub fn counts_by_length(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.elements {
            *counts.entry(e.len()).or_insert(0) += 1;
        }
        counts
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// One permutation per line, space separated.
    pub fn to_lines(&self) -> String {
        self.elements.iter().map(|e| format!("{e}\n")).collect()
    }

    pub fn to_json(&self) -> String {
        let arr: Vec<Vec<u32>> = self.elements.iter().map(|e| e.values().to_vec()).collect();
        serde_json::to_string(&arr).expect("plain arrays serialize")
    }
}

fn canonical_order(a: &Permutation, b: &Permutation) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.values().cmp(b.values()))
}

/// `B_0 = {231}`.
pub fn b0() -> Basis {
    Basis::new(0, vec![Permutation::from_vec_unchecked(vec![2, 3, 1])])
}

/// The eleven minimal permutations that are not 2-pass sortable.
pub fn b1() -> Basis {
    const ELEMENTS: [&[u32]; 11] = [
        &[2, 4, 1, 5, 3],
        &[2, 4, 5, 1, 3],
        &[2, 4, 5, 3, 1],
        &[3, 4, 2, 5, 1],
        &[3, 5, 2, 4, 1],
        &[4, 2, 5, 1, 3],
        &[4, 2, 5, 3, 1],
        &[4, 5, 2, 3, 1],
        &[2, 3, 1, 5, 6, 4],
        &[2, 6, 1, 4, 5, 3],
        &[5, 2, 3, 1, 6, 4],
    ];
    Basis::new(1, ELEMENTS.iter().map(|e| Permutation::from_vec_unchecked(e.to_vec())).collect())
}

/// Sortable in at most `k` passes, i.e. tier `<= k - 1`.
pub fn is_k_pass_sortable(p: &Permutation, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::NonPositive);
    }
    Ok(tier(p) < k)
}

pub fn avoids_basis(p: &Permutation, basis: &Basis) -> bool {
    basis.elements.iter().all(|b| p.avoids(b))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Permit lengths up to [`LARGE_LENGTH_CAP`].
    pub allow_large: bool,
}

/// Every element of `B_t` of length `<= max_len`. `max_len` is clamped to
/// `3(t + 1)`; exceeding the search cap after clamping is an error.
pub fn compute_basis(t: usize, max_len: usize, opts: SearchOptions) -> Result<Basis> {
    let max_len = max_len.min(3 * (t + 1));
    let cap = if opts.allow_large { LARGE_LENGTH_CAP } else { DEFAULT_LENGTH_CAP };
    if max_len > cap {
        return Err(Error::CapExceeded { what: "basis length", requested: max_len, cap });
    }
    let mut elements = Vec::new();
    for len in 1..=max_len {
        elements.extend(basis_elements_of_length(t, len));
    }
    Ok(Basis::new(t, elements))
}

/// Elements of `B_t` of exactly length `len`, in lexicographic order.
pub fn basis_elements_of_length(t: usize, len: usize) -> Vec<Permutation> {
    if len == 0 || max_tier(len).unwrap() < t + 1 {
        return Vec::new();
    }
    sym::par_fold(
        len,
        Vec::new,
        |found: &mut Vec<Permutation>, values| {
            if separated_pair_count(values) == t + 1 && is_minimal(values, t) {
                found.push(Permutation::from_vec_unchecked(values.to_vec()));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

/// Every one-point deletion has tier `<= t`.
fn is_minimal(values: &[u32], t: usize) -> bool {
    let mut buf = Vec::with_capacity(values.len());
    (0..values.len()).all(|skip| {
        let removed = values[skip];
        buf.clear();
        buf.extend(
            values
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| if v > removed { v - 1 } else { v }),
        );
        separated_pair_count(&buf) <= t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn sortability() {
        assert_eq!(is_k_pass_sortable(&p("231"), 1), Ok(false));
        assert_eq!(is_k_pass_sortable(&p("231"), 2), Ok(true));
        for k in 1..5 {
            assert_eq!(is_k_pass_sortable(&Permutation::identity(8), k), Ok(true));
        }
        assert_eq!(is_k_pass_sortable(&p("231"), 0), Err(Error::NonPositive));
    }

    #[test]
    fn small_bases() {
        assert_eq!(compute_basis(0, 3, SearchOptions::default()).unwrap(), b0());
        assert_eq!(compute_basis(0, 9, SearchOptions::default()).unwrap(), b0());
        assert_eq!(compute_basis(1, 6, SearchOptions::default()).unwrap(), b1());
    }

    #[test]
    fn b1_literal_is_canonical() {
        let b = b1();
        assert_eq!(b.len(), 11);
        assert_eq!(b.counts_by_length(), BTreeMap::from([(5, 8), (6, 3)]));
        let mut sorted = b.elements.clone();
        sorted.sort_by(canonical_order);
        assert_eq!(sorted, b.elements);
    }

    #[test]
    fn avoidance_examples() {
        assert!(!avoids_basis(&p("35241"), &b1()));
        assert!(avoids_basis(&p("3241"), &b1()));
        assert!(avoids_basis(&Permutation::default(), &b1()));
        assert!(avoids_basis(&Permutation::default(), &b0()));
    }

    #[test]
    fn cap_is_reported() {
        let err = compute_basis(3, 12, SearchOptions::default()).unwrap_err();
        assert_eq!(err, Error::CapExceeded { what: "basis length", requested: 12, cap: 10 });
        assert!(compute_basis(4, 13, SearchOptions { allow_large: true }).is_err());
    }

    #[test]
    fn exports() {
        assert_eq!(b0().to_lines(), "2 3 1\n");
        assert_eq!(b0().to_json(), "[[2,3,1]]");
    }
}

//! Permutations of `1..=n`, classical pattern containment, separated pairs,
//! intervals and the plus/minus (direct/skew sum) decompositions.
//!
//! Positions and values are 1-based in the public API. Internally values are
//! stored in a `Vec<u32>` indexed from 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, `n >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v as u64, len: n });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n as u32).collect() }
    }

    /// `n (n-1) ... 1`
    pub fn reverse_identity(n: usize) -> Self {
        Permutation { values: (1..=n as u32).rev().collect() }
    }

    /// Order-isomorphic standardisation of a sequence of distinct values.
    pub fn standardize(seq: &[u32]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// Value at 1-based `position`.
    pub fn at(&self, position: usize) -> u32 {
        self.values[position - 1]
    }

    /// `positions()[v]` is the 1-based position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        positions_of(&self.values)
    }

    pub fn inverse(&self) -> Self {
        let pos = self.positions();
        Permutation { values: pos[1..].iter().map(|&p| p as u32).collect() }
    }

    /// Remove the entry at 1-based `position` and rescale the rest to `1..n-1`.
    pub fn delete_at(&self, position: usize) -> Self {
        let removed = self.values[position - 1];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != position)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation { values }
    }

    /// All single-entry deletions, in order of the deleted position.
    pub fn deletions(&self) -> impl Iterator<Item = Permutation> + '_ {
        (1..=self.len()).map(move |p| self.delete_at(p))
    }

    /// Direct sum `self ⊕ other`.
    pub fn plus(&self, other: &Permutation) -> Self {
        let shift = self.len() as u32;
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|v| v + shift));
        Permutation { values }
    }

    /// Skew sum `self ⊖ other`.
    pub fn minus(&self, other: &Permutation) -> Self {
        let shift = other.len() as u32;
        let mut values: Vec<u32> = self.values.iter().map(|v| v + shift).collect();
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    /// Compact digit form, available when `n <= 9`.
    pub fn to_compact(&self) -> Option<String> {
        if self.len() > 9 {
            return None;
        }
        Some(self.values.iter().map(|v| char::from(b'0' + *v as u8)).collect())
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_pattern(&self.values, &pattern.values)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn separated_pairs(&self) -> Vec<SeparatedPair> {
        separated_pairs(&self.values)
    }

    pub fn maximal_intervals(&self) -> Vec<Interval> {
        maximal_intervals(&self.values)
    }

    pub fn plus_decompose(&self) -> Result<Decomposition> {
        decompose(self, DecompositionKind::Plus)
    }

    pub fn minus_decompose(&self) -> Result<Decomposition> {
        decompose(self, DecompositionKind::Minus)
    }

    pub fn is_plus_indecomposable(&self) -> bool {
        !self.is_empty() && plus_cuts(&self.values).is_empty()
    }

    pub fn is_minus_indecomposable(&self) -> bool {
        !self.is_empty() && minus_cuts(&self.values).is_empty()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts either a compact digit string (`"356124"`) or integers separated
    /// by whitespace and/or commas. Blank input is the empty permutation.
    fn from_str(text: &str) -> Result<Self> {
        let values = parse_sequence(text)?;
        Permutation::new(values)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

/// Shared tokenizer for permutations and Parker sequences.
pub(crate) fn parse_sequence(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let separated = text.contains(|c: char| c.is_whitespace() || c == ',');
    if !separated {
        return text
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidInteger(c.to_string())))
            .collect();
    }
    // Whitespace runs collapse; each comma delimits exactly one token.
    let mut out = Vec::new();
    for chunk in text.split(',') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(Error::EmptyToken(text.to_string()));
        }
        for token in chunk.split_whitespace() {
            let v: u64 = token.parse().map_err(|_| Error::InvalidInteger(token.to_string()))?;
            let v = u32::try_from(v).map_err(|_| Error::InvalidInteger(token.to_string()))?;
            out.push(v);
        }
    }
    Ok(out)
}

pub(crate) fn positions_of(values: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; values.len() + 1];
    for (i, &v) in values.iter().enumerate() {
        pos[v as usize] = i + 1;
    }
    pos
}

/// Pruned depth-first search for an occurrence of `pattern` in `host`.
///
/// For every pattern index `j`, the nearest smaller and nearest larger
/// pattern values among indices `< j` bound the host value that may be
/// chosen for `j`.
pub fn contains_pattern(host: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > host.len() {
        return false;
    }
    let mut below = vec![None; k];
    let mut above = vec![None; k];
    for j in 0..k {
        for i in 0..j {
            if pattern[i] < pattern[j] {
                if below[j].is_none_or(|b: usize| pattern[i] > pattern[b]) {
                    below[j] = Some(i);
                }
            } else if above[j].is_none_or(|a: usize| pattern[i] < pattern[a]) {
                above[j] = Some(i);
            }
        }
    }
    let mut chosen = vec![0u32; k];
    search(host, 0, 0, &below, &above, &mut chosen)
}

fn search(
    host: &[u32],
    j: usize,
    from: usize,
    below: &[Option<usize>],
    above: &[Option<usize>],
    chosen: &mut [u32],
) -> bool {
    let k = chosen.len();
    if j == k {
        return true;
    }
    let lo = below[j].map_or(0, |i| chosen[i]);
    let hi = above[j].map_or(u32::MAX, |i| chosen[i]);
    let last_start = host.len() - (k - j);
    for p in from..=last_start {
        let v = host[p];
        if v > lo && v < hi {
            chosen[j] = v;
            if search(host, j + 1, p + 1, below, above, chosen) {
                return true;
            }
        }
    }
    false
}

/// A separated pair `(small + 1, small)` with a separator at `witness_position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeparatedPair {
    pub small: u32,
    pub large: u32,
    /// 1-based position of the leftmost entry `> large` lying between them.
    pub witness_position: usize,
}

impl fmt::Display for SeparatedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.large, self.small)
    }
}

pub fn separated_pairs(values: &[u32]) -> Vec<SeparatedPair> {
    let n = values.len() as u32;
    let pos = positions_of(values);
    let mut out = Vec::new();
    for small in 1..n {
        let large = small + 1;
        let (pl, ps) = (pos[large as usize], pos[small as usize]);
        if pl >= ps {
            continue;
        }
        // positions strictly between, 1-based (pl+1 .. ps-1) -> 0-based (pl .. ps-1)
        if let Some(offset) = values[pl..ps - 1].iter().position(|&v| v > large) {
            out.push(SeparatedPair { small, large, witness_position: pl + 1 + offset });
        }
    }
    out
}

/// Number of separated pairs of a raw value slice; allocation-light hot path
/// for exhaustive scans.
pub fn separated_pair_count(values: &[u32]) -> usize {
    let n = values.len();
    let mut pos = [0usize; 64];
    let heap;
    let pos: &mut [usize] = if n < 64 {
        &mut pos[..=n]
    } else {
        heap = positions_of(values);
        return count_with_positions(values, &heap);
    };
    for (i, &v) in values.iter().enumerate() {
        pos[v as usize] = i + 1;
    }
    count_with_positions(values, pos)
}

fn count_with_positions(values: &[u32], pos: &[usize]) -> usize {
    let n = values.len();
    let mut count = 0;
    for small in 1..n {
        let (pl, ps) = (pos[small + 1], pos[small]);
        if pl < ps && values[pl..ps - 1].iter().any(|&v| v as usize > small + 1) {
            count += 1;
        }
    }
    count
}

/// A run of consecutive positions holding consecutive values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    /// 1-based start position.
    pub start: usize,
    pub len: usize,
}

fn is_interval(window: &[u32]) -> bool {
    let (mut lo, mut hi) = (u32::MAX, 0);
    for &v in window {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (hi - lo) as usize + 1 == window.len()
}

/// Partition of the positions into maximal intervals, left to right.
///
/// A permutation that is plus- or minus-decomposable (this includes every
/// permutation of length `<= 2`) is a single block. Otherwise its maximal
/// proper intervals are pairwise disjoint and cover every position, and
/// those are the blocks: `685712943` splits as `6857 | 12 | 9 | 43`.
pub fn maximal_intervals(values: &[u32]) -> Vec<Interval> {
    let n = values.len();
    if n == 0 {
        return Vec::new();
    }
    if !plus_cuts(values).is_empty() || !minus_cuts(values).is_empty() || n == 1 {
        return vec![Interval { start: 1, len: n }];
    }
    let mut out = Vec::new();
    let mut start = 0;
    while start < n {
        let max_end = if start == 0 { n - 1 } else { n };
        let end = (start + 1..=max_end)
            .rev()
            .find(|&end| is_interval(&values[start..end]))
            .unwrap_or(start + 1);
        out.push(Interval { start: start + 1, len: end - start });
        start = end;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Plus,
    Minus,
}

/// `components[0] ⊕ components[1] ⊕ ...` (or `⊖`), each component rescaled to
/// `1..=len` and indecomposable for its kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub components: Vec<Permutation>,
}

impl Decomposition {
    pub fn recombine(&self) -> Permutation {
        let mut iter = self.components.iter();
        let first = iter.next().cloned().unwrap_or_default();
        iter.fold(first, |acc, c| match self.kind {
            DecompositionKind::Plus => acc.plus(c),
            DecompositionKind::Minus => acc.minus(c),
        })
    }
}

/// Prefix lengths `l` (`0 < l < n`) after which the first `l` entries are
/// exactly `1..=l`.
fn plus_cuts(values: &[u32]) -> Vec<usize> {
    let mut max = 0;
    let mut cuts = Vec::new();
    for (i, &v) in values.iter().enumerate().take(values.len().saturating_sub(1)) {
        max = max.max(v);
        if max as usize == i + 1 {
            cuts.push(i + 1);
        }
    }
    cuts
}

/// Prefix lengths `l` after which the first `l` entries are the `l` largest.
fn minus_cuts(values: &[u32]) -> Vec<usize> {
    let n = values.len();
    let mut min = u32::MAX;
    let mut cuts = Vec::new();
    for (i, &v) in values.iter().enumerate().take(n.saturating_sub(1)) {
        min = min.min(v);
        if min as usize == n - i {
            cuts.push(i + 1);
        }
    }
    cuts
}

fn decompose(p: &Permutation, kind: DecompositionKind) -> Result<Decomposition> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let cuts = match kind {
        DecompositionKind::Plus => plus_cuts(&p.values),
        DecompositionKind::Minus => minus_cuts(&p.values),
    };
    let mut bounds = vec![0];
    bounds.extend(cuts);
    bounds.push(p.len());
    let components = bounds
        .windows(2)
        .map(|w| Permutation::standardize(&p.values[w[0]..w[1]]))
        .collect();
    Ok(Decomposition { kind, components })
}

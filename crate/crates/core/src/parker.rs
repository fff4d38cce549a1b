//! Parker sequences and the bijection to permutations that carries descents
//! to separated pairs.
//!
//! A Parker sequence of length `n` is written `a_n a_{n-1} ... a_1` and stored
//! in that (left-to-right) order, so `entries()[0]` is `a_n`. The entry at
//! left-to-right position `j` (1-based) is bounded by `1 <= entry <= j`;
//! equivalently `a_i <= n - i + 1`. Indices `i` in this module are always the
//! right-based ones.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{parse_sequence, Permutation};

/// Largest `n` accepted by [`enumerate_parker`].
pub const ENUMERATION_CAP: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkerSequence {
    entries: Vec<u32>,
}

impl ParkerSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some((j, &e)) = entries.iter().enumerate().find(|&(j, &e)| e == 0 || e as usize > j + 1) {
            return Err(Error::NotParker { position: j + 1, entry: e, bound: j + 1 });
        }
        Ok(ParkerSequence { entries })
    }

    /// Left-to-right entries `a_n ... a_1`.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a_i` for right-based `i` in `1..=n`.
    pub fn a(&self, i: usize) -> u32 {
        self.entries[right_index_to_offset(self.len(), i)]
    }

    /// Right-based descent indices `i` (ascending) with `a_i > a_{i-1}`; the
    /// descent at `i` corresponds to the separated pair `(i, i-1)`.
    pub fn descents(&self) -> Vec<usize> {
        (2..=self.len()).filter(|&i| self.a(i) > self.a(i - 1)).collect()
    }

    pub fn descent_count(&self) -> usize {
        descent_count(&self.entries)
    }
}

/// Array offset of right-based index `i` in a sequence of length `n`.
pub fn right_index_to_offset(n: usize, i: usize) -> usize {
    n - i
}

/// Strict left-to-right decreases, i.e. the number of right-based descents.
fn descent_count(entries: &[u32]) -> usize {
    entries.windows(2).filter(|w| w[0] > w[1]).count()
}

impl fmt::Display for ParkerSequence {
    /// Compact digits when every entry is at most 9, space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.entries.iter().all(|&e| e <= 9);
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParkerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Parker({self})")
    }
}

impl FromStr for ParkerSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        ParkerSequence::new(parse_sequence(text)?)
    }
}

pub fn is_parker(seq: &[u32]) -> bool {
    seq.iter().enumerate().all(|(j, &e)| e >= 1 && e as usize <= j + 1)
}

/// Place `1, 2, ..., n` in turn; value `i` goes to the `a_i`-th still free
/// position counting from the right.
pub fn parker_to_perm(seq: &ParkerSequence) -> Permutation {
    let n = seq.len();
    let mut slots = vec![0u32; n];
    // free positions, right to left
    let mut free: Vec<usize> = (0..n).rev().collect();
    for i in 1..=n {
        let slot = free.remove(seq.a(i) as usize - 1);
        slots[slot] = i as u32;
    }
    Permutation::from_vec_unchecked(slots)
}

/// `a_i` is the position, counted from the right, of value `i` among the
/// values `>= i`.
pub fn perm_to_parker(p: &Permutation) -> ParkerSequence {
    let n = p.len();
    let values = p.values();
    let pos = p.positions();
    let mut entries = vec![0u32; n];
    for i in 1..=n {
        let rank = values[pos[i] - 1..].iter().filter(|&&v| v as usize >= i).count();
        entries[right_index_to_offset(n, i)] = rank as u32;
    }
    ParkerSequence { entries }
}

/// All Parker sequences of length `n` with exactly `t` descents, in
/// lexicographic order.
pub fn enumerate_parker(n: usize, t: usize) -> Result<Vec<ParkerSequence>> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { what: "Parker sequence length", requested: n, cap: ENUMERATION_CAP });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend(n, t, &mut current, 0, &mut out);
    Ok(out)
}

fn extend(n: usize, t: usize, current: &mut Vec<u32>, descents: usize, out: &mut Vec<ParkerSequence>) {
    let j = current.len();
    // at most one descent per remaining gap
    if descents > t || descents + (n - j) < t {
        return;
    }
    if j == n {
        if descents == t {
            out.push(ParkerSequence { entries: current.clone() });
        }
        return;
    }
    for e in 1..=(j as u32 + 1) {
        let d = descents + usize::from(current.last().is_some_and(|&prev| prev > e));
        current.push(e);
        extend(n, t, current, d, out);
        current.pop();
    }
}

/// Every Parker sequence of length `n` (there are `n!`), lexicographic.
pub fn all_parker(n: usize) -> impl Iterator<Item = ParkerSequence> {
    let mut next = Some(vec![1u32; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // odometer with per-position bound j+1
        let mut j = n;
        while j > 0 {
            j -= 1;
            if (succ[j] as usize) < j + 1 {
                succ[j] += 1;
                succ[j + 1..].iter_mut().for_each(|e| *e = 1);
                next = Some(succ);
                break;
            }
        }
        Some(ParkerSequence { entries: current })
    })
}

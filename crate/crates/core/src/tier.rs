//! Tiers via separated pairs, the maximum tier `τ(n)` over `S_n`, a
//! construction attaining it, and tier arithmetic under skew sums.

use crate::error::{Error, Result};
use crate::perm::{separated_pair_count, Permutation, SeparatedPair};

/// A permutation together with its separated pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TierProfile {
    pub permutation: Permutation,
    pub tier: usize,
    pub pairs: Vec<SeparatedPair>,
}

impl TierProfile {
    pub fn new(p: &Permutation) -> Self {
        let pairs = p.separated_pairs();
        TierProfile { permutation: p.clone(), tier: pairs.len(), pairs }
    }
}

/// Number of separated pairs, which equals passes minus one.
pub fn tier(p: &Permutation) -> usize {
    separated_pair_count(p.values())
}

/// `τ(n) = n - 1 - ⌊log₂ n⌋`.
pub fn max_tier(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    Ok(n - 1 - n.ilog2() as usize)
}

/// `τ(n) = ⌊(n-1)/2⌋ + τ(⌊n/2⌋)`, `τ(1) = 0`.
pub fn max_tier_recursive(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut total = 0;
    let mut m = n;
    while m > 1 {
        total += (m - 1) / 2;
        m /= 2;
    }
    Ok(total)
}

/// A permutation of length `n` with tier `τ(n)`.
///
/// For `n = 2k + 1` the descending run `k+1, k, ..., 1` is interleaved with
/// `k` separators `k+2..=2k+1`, which themselves follow the witness for `k`.
/// For `n = 2k` the run is `k, ..., 1` and the separators are `k+1..=2k`
/// following the witness for `k`; the last separator trails the run.
pub fn max_tier_witness(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    Ok(Permutation::from_vec_unchecked(witness_values(n)))
}

fn witness_values(n: usize) -> Vec<u32> {
    if n == 1 {
        return vec![1];
    }
    let k = n / 2;
    let run_len = n - k; // k+1 when odd, k when even
    let offset = run_len as u32;
    let separators: Vec<u32> = witness_values(k).into_iter().map(|v| v + offset).collect();
    let mut out = Vec::with_capacity(n);
    let mut seps = separators.into_iter();
    for small in (1..=run_len as u32).rev() {
        out.push(small);
        if small > 1 {
            out.extend(seps.next());
        }
    }
    out.extend(seps);
    out
}

/// Tier of `components[0] ⊖ components[1] ⊖ ...` from the component tiers:
/// `p - r - 1 + Σ t(σᵢ)`, with `r` the number of non-final singleton
/// components. Every component must be minus-indecomposable.
pub fn tier_of_minus_chain(components: &[Permutation]) -> Result<usize> {
    if components.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    for (index, c) in components.iter().enumerate() {
        if !c.is_minus_indecomposable() {
            return Err(Error::NotMinusIndecomposable { index, component: c.to_string() });
        }
    }
    let p = components.len();
    let r = components[..p - 1].iter().filter(|c| c.len() == 1).count();
    let sum: usize = components.iter().map(tier).sum();
    let result = p - r - 1 + sum;
    debug_assert_eq!(result, {
        let chain = components[1..].iter().fold(components[0].clone(), |acc, c| acc.minus(c));
        tier(&chain)
    });
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn tier_examples() {
        assert_eq!(tier(&p("231")), 1);
        assert_eq!(tier(&p("574836291")), 5);
        assert_eq!(tier(&p("1")), 0);
        assert_eq!(tier(&Permutation::default()), 0);
        let prof = TierProfile::new(&p("4637251"));
        assert_eq!(prof.tier, prof.pairs.len());
        assert_eq!(prof.tier, 4);
    }

    #[test]
    fn max_tier_examples() {
        assert_eq!(max_tier(7), Ok(4));
        assert_eq!(max_tier(8), Ok(4));
        assert_eq!(max_tier(10), Ok(6));
        assert_eq!(max_tier(1), Ok(0));
        assert_eq!(max_tier(15), Ok(11));
        assert_eq!(max_tier(0), Err(Error::NonPositive));
        assert_eq!(max_tier_recursive(9), Ok(5));
        assert_eq!(max_tier_recursive(2), Ok(0));
        assert_eq!(max_tier_recursive(16), Ok(11));
        assert_eq!(max_tier_recursive(0), Err(Error::NonPositive));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(max_tier_witness(7).unwrap(), p("4637251"));
        assert_eq!(max_tier_witness(9).unwrap(), p("574836291"));
        assert_eq!(max_tier_witness(4).unwrap(), p("2314"));
        assert_eq!(max_tier_witness(15).unwrap(), p("8 12 7 14 6 11 5 15 4 10 3 13 2 9 1"));
        assert_eq!(tier(&max_tier_witness(15).unwrap()), 11);
    }

    #[test]
    fn witness_attains_max_up_to_64() {
        for n in 1..=64 {
            let w = max_tier_witness(n).unwrap();
            assert_eq!(w.len(), n);
            assert_eq!(tier(&w), max_tier(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn max_tier_bounds() {
        for n in 1..=64 {
            let t = max_tier(n).unwrap();
            assert!(max_tier(n + 1).unwrap() <= t + 1);
            assert!(t >= (n - 1) / 2);
            assert_eq!(max_tier_recursive(n), Ok(t));
        }
    }

    #[test]
    fn minus_chain_examples() {
        let chain = [p("2314"), p("1"), p("1"), p("12")];
        assert_eq!(tier_of_minus_chain(&chain), Ok(2));
        assert_eq!(tier(&p("67584312")), 2);
        assert_eq!(tier_of_minus_chain(&[p("1")]), Ok(0));
        assert_eq!(tier_of_minus_chain(&[]), Err(Error::EmptyPermutation));
        // 231 = 12 ⊖ 1, so it is not a valid chain component.
        assert!(matches!(
            tier_of_minus_chain(&[p("231"), p("231")]),
            Err(Error::NotMinusIndecomposable { index: 0, .. })
        ));
        // The same permutation 564231 as a proper chain.
        let chain = p("564231").minus_decompose().unwrap().components;
        assert_eq!(chain, [p("12"), p("1"), p("12"), p("1")]);
        assert_eq!(tier_of_minus_chain(&chain), Ok(2));
        assert_eq!(tier(&p("564231")), 2);
    }
}

use std::collections::{BTreeMap, BTreeSet};

use tiersort::enumerate::table_recurrence;
use tiersort::parker::{all_parker, enumerate_parker, is_parker, parker_to_perm, perm_to_parker, ParkerSequence};
use tiersort::perm::separated_pair_count;
use tiersort::sym::{factorial, Permutations};
use tiersort::Error;

#[test]
fn bijection_is_a_bijection() {
    for n in 1..=8 {
        let images: BTreeSet<_> = all_parker(n).map(|s| parker_to_perm(&s)).collect();
        assert_eq!(images.len() as u64, factorial(n));
        let preimages: BTreeSet<_> = Permutations::new(n).map(|q| perm_to_parker(&q)).collect();
        assert_eq!(preimages.len() as u64, factorial(n));
        assert!(preimages.iter().all(|s| is_parker(s.entries())));
    }
}

#[test]
fn descents_map_to_separated_pairs() {
    // a descent at right-based index j is the separated pair (j, j - 1)
    for n in 1..=7 {
        for s in all_parker(n) {
            let q = parker_to_perm(&s);
            let mut from_pairs: Vec<usize> = q.separated_pairs().iter().map(|sp| sp.large as usize).collect();
            from_pairs.sort();
            let mut descents = s.descents();
            descents.sort();
            assert_eq!(descents, from_pairs, "{s} -> {q}");
        }
    }
}

#[test]
fn enumeration_matches_recurrence_table() {
    let (table, _) = table_recurrence(9).unwrap();
    for n in 1..=9 {
        let mut by_tier: BTreeMap<usize, u64> = BTreeMap::new();
        for s in all_parker(n) {
            *by_tier.entry(s.descent_count()).or_default() += 1;
        }
        for t in 0..n {
            let listed = enumerate_parker(n, t).unwrap();
            assert_eq!(listed.len() as u64, by_tier.get(&t).copied().unwrap_or(0));
            assert_eq!(table.get(n, t), listed.len().into(), "T({n},{t})");
            assert!(listed.windows(2).all(|w| w[0].entries() < w[1].entries()));
            assert!(listed.iter().all(|s| s.descent_count() == t));
        }
        assert_eq!(by_tier.values().sum::<u64>(), factorial(n));
    }
}

#[test]
fn sequences_validate() {
    assert!(is_parker(&[1, 2, 1, 3, 3]));
    assert!(!is_parker(&[2]));
    assert!(!is_parker(&[1, 3]));
    assert!(matches!("13".parse::<ParkerSequence>(), Err(Error::NotParker { position: 2, entry: 3, bound: 2 })));
    let s: ParkerSequence = "12133".parse().unwrap();
    assert_eq!((s.a(5), s.a(1)), (1, 3));
    assert_eq!(separated_pair_count(parker_to_perm(&s).values()), s.descent_count());
    assert!(matches!(enumerate_parker(11, 0), Err(Error::CapExceeded { .. })));
}

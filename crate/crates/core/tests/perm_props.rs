use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use tiersort::machine::tier_by_simulation;
use tiersort::perm::{contains_pattern, maximal_intervals, separated_pair_count, DecompositionKind, Interval};
use tiersort::sym::Permutations;
use tiersort::tier::tier;
use tiersort::Permutation;

/// Containment by trying every subsequence of the pattern's length.
fn contains_naive(host: &[u32], pattern: &[u32]) -> bool {
    let (n, k) = (host.len(), pattern.len());
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<u32> = idx.iter().map(|&i| host[i]).collect();
        if Permutation::standardize(&sub).values() == pattern {
            return true;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn all_up_to(n: usize) -> Vec<Permutation> {
    (0..=n).flat_map(Permutations::new).collect()
}

#[test]
fn containment_matches_naive_search() {
    let hosts = all_up_to(6);
    let patterns = all_up_to(4);
    for h in &hosts {
        for q in &patterns {
            assert_eq!(contains_pattern(h.values(), q.values()), contains_naive(h.values(), q.values()), "{h} / {q}");
        }
    }
}

#[test]
fn containment_is_reflexive_and_transitive() {
    let small = all_up_to(4);
    for p in &small {
        assert!(p.contains(p));
    }
    let mid = all_up_to(5);
    for a in Permutations::new(3) {
        for b in mid.iter().filter(|b| b.contains(&a)) {
            for c in Permutations::new(6).filter(|c| c.contains(b)).take(50) {
                assert!(c.contains(&a), "{a} ≤ {b} ≤ {c}");
            }
        }
    }
}

#[test]
fn tier_zero_iff_231_avoiding() {
    for n in 0..=8 {
        for p in Permutations::new(n) {
            let has_pair = separated_pair_count(p.values()) > 0;
            assert_eq!(has_pair, p.contains(&"231".parse().unwrap()), "{p}");
        }
    }
}

#[test]
fn deletion_never_raises_tier() {
    for n in 1..=8 {
        for p in Permutations::new(n) {
            let t = tier(&p);
            assert!(p.deletions().all(|d| tier(&d) <= t), "{p}");
        }
    }
}

/// Maximal intervals via every window, without using decomposition cuts.
fn intervals_by_windows(values: &[u32]) -> Vec<Interval> {
    let n = values.len();
    let is_interval = |s: usize, e: usize| {
        let w = &values[s..e];
        (w.iter().max().unwrap() - w.iter().min().unwrap()) as usize + 1 == w.len()
    };
    let decomposable = (1..n).any(|l| {
        let max = *values[..l].iter().max().unwrap() as usize;
        let min = *values[..l].iter().min().unwrap() as usize;
        max == l || min == n - l + 1
    });
    if n == 0 {
        return vec![];
    }
    if n == 1 || decomposable {
        return vec![Interval { start: 1, len: n }];
    }
    // proper intervals that no other proper interval strictly contains
    let proper: Vec<(usize, usize)> =
        (0..n).flat_map(|s| (s + 1..=n).map(move |e| (s, e))).filter(|&(s, e)| e - s < n && is_interval(s, e)).collect();
    let mut maximal: Vec<(usize, usize)> = proper
        .iter()
        .copied()
        .filter(|&(s, e)| !proper.iter().any(|&(s2, e2)| s2 <= s && e <= e2 && (s2, e2) != (s, e)))
        .collect();
    maximal.sort();
    maximal.into_iter().map(|(s, e)| Interval { start: s + 1, len: e - s }).collect()
}

#[test]
fn maximal_intervals_match_window_oracle() {
    for n in 0..=7 {
        for p in Permutations::new(n) {
            let got = maximal_intervals(p.values());
            assert_eq!(got, intervals_by_windows(p.values()), "{p}");
            assert_eq!(got.iter().map(|i| i.len).sum::<usize>(), n);
        }
    }
}

#[test]
fn decompositions_recombine_and_have_indecomposable_parts() {
    for n in 1..=7 {
        for p in Permutations::new(n) {
            let plus = p.plus_decompose().unwrap();
            assert_eq!(plus.kind, DecompositionKind::Plus);
            assert_eq!(plus.recombine(), p);
            assert!(plus.components.iter().all(|c| c.is_plus_indecomposable()));
            let minus = p.minus_decompose().unwrap();
            assert_eq!(minus.recombine(), p);
            assert!(minus.components.iter().all(|c| c.is_minus_indecomposable()));
        }
    }
}

fn arb_perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len, any::<u64>()).prop_map(|(n, seed)| {
        let mut v: Vec<u32> = (1..=n as u32).collect();
        v.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        Permutation::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn display_parse_roundtrip(p in arb_perm(40)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), p.clone());
        if let Some(compact) = p.to_compact() {
            prop_assert_eq!(compact.parse::<Permutation>().unwrap(), p);
        }
    }

    #[test]
    fn pair_count_matches_simulation_on_long_inputs(p in arb_perm(200)) {
        prop_assert_eq!(tier(&p), tier_by_simulation(p.values()));
    }

    #[test]
    fn separator_is_leftmost_larger_entry_between(p in arb_perm(30)) {
        let pos = p.positions();
        for sp in p.separated_pairs() {
            prop_assert_eq!(sp.large, sp.small + 1);
            let (pl, ps) = (pos[sp.large as usize], pos[sp.small as usize]);
            prop_assert!(pl < sp.witness_position && sp.witness_position < ps);
            prop_assert!(p.at(sp.witness_position) > sp.large);
            prop_assert!((pl + 1..sp.witness_position).all(|i| p.at(i) < sp.large));
        }
    }

    #[test]
    fn inverse_is_involutive(p in arb_perm(30)) {
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn sum_tier_rules(a in arb_perm(8), b in arb_perm(8)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        prop_assert_eq!(a.plus(&b).len(), a.len() + b.len());
        prop_assert_eq!(tier(&a.plus(&b)), tier(&a) + tier(&b));
        let bump = usize::from(a.values().last() != Some(&1));
        prop_assert_eq!(tier(&a.minus(&b)), tier(&a) + tier(&b) + bump);
    }
}

#[test]
fn parse_errors() {
    for bad in ["1 1", "0 1", "13", "1,,2", "a"] {
        assert!(bad.parse::<Permutation>().is_err(), "{bad:?}");
    }
    assert!("".parse::<Permutation>().unwrap().is_empty());
    assert_eq!("3,1,2".parse::<Permutation>().unwrap().values(), [3, 1, 2]);
    assert_eq!("10 1 2 3 4 5 6 7 8 9".parse::<Permutation>().unwrap().len(), 10);
}

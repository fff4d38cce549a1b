//! Cross-oracle validation: every identity that links two independent routes
//! through the library, run exhaustively up to a length bound.

use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigUint;

use crate::basis::{self, avoids_basis, b1, SearchOptions};
use crate::enumerate::{catalan, factorial, table_bruteforce, table_recurrence};
use crate::machine::{sort_with_trace, tier_by_simulation};
use crate::parker::{all_parker, parker_to_perm, perm_to_parker};
use crate::perm::{contains_pattern, separated_pair_count, Permutation};
use crate::series::{psi_tower, tier_series, RationalSeries};
use crate::sym::{self, Permutations};
use crate::tier::{max_tier, max_tier_recursive, max_tier_witness, tier, tier_of_minus_chain};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(usize) -> std::result::Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("tier: separated pairs = simulation", check_tier_dual),
    ("trace: outputs identity, leftovers are subsequences", check_traces),
    ("separated pair exists <=> contains 231", check_pair_iff_231),
    ("separated pairs monotone under deletion", check_monotone),
    ("separated pair witnesses valid", check_witnesses),
    ("decompositions recombine", check_decompositions),
    ("max tier: exhaustive = closed form = recursion", check_max_tier),
    ("max tier: unique at n = 2^k - 1", check_uniqueness),
    ("plus sum adds tiers; minus rule", check_sum_rules),
    ("minus chain formula", check_minus_chain),
    ("table: brute force = recurrence", check_brute_vs_recurrence),
    ("table: recurrence = generating function", check_recurrence_vs_gf),
    ("table: Parker descents = brute force", check_parker_histogram),
    ("table: row sums n!, column 0 Catalan", check_row_sums),
    ("bijection: roundtrips and descent transport", check_bijection),
    ("basis: B1 search = literal, avoidance = tier <= 1", check_b1),
    ("series: psi squaring and rho products", check_psi),
    ("series: T1 closed form", check_t1_closed_form),
    ("max tier: floor-sum identity to 10^6", check_floor_sum),
];

/// Runs every check with lengths bounded by `max_n` (clamped per check where
/// the exhaustive cost would explode).
pub fn run_all(max_n: usize) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, check)| match check(max_n) {
            Ok(detail) => CheckOutcome { name, passed: true, detail },
            Err(detail) => CheckOutcome { name, passed: false, detail },
        })
        .collect()
}

/// Parallel exhaustive predicate over `S_n` for each `n` in `lo..=hi`;
/// returns the first counterexample found.
fn for_all(lo: usize, hi: usize, pred: impl Fn(&[u32]) -> bool + Sync) -> std::result::Result<u64, String> {
    let mut total = 0;
    for n in lo..=hi {
        let failed = AtomicBool::new(false);
        let bad = sym::par_fold(
            n,
            || None,
            |bad: &mut Option<Vec<u32>>, v| {
                if bad.is_none() && !failed.load(Ordering::Relaxed) && !pred(v) {
                    failed.store(true, Ordering::Relaxed);
                    *bad = Some(v.to_vec());
                }
            },
            |a, b| a.or(b),
        );
        if let Some(v) = bad {
            return Err(format!("counterexample {}", Permutation::standardize(&v)));
        }
        total += sym::factorial(n);
    }
    Ok(total)
}

fn check_tier_dual(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(0, max_n, |v| separated_pair_count(v) == tier_by_simulation(v))?;
    Ok(format!("{total} permutations"))
}

fn check_traces(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(0, max_n.min(7), |v| {
        let p = Permutation::standardize(v);
        let trace = sort_with_trace(&p);
        let mut input = v.to_vec();
        let mut out = Vec::new();
        for pass in &trace.passes {
            let popped: Vec<u32> = pass.popped().collect();
            if popped.is_empty() || !is_subsequence(&pass.leftover, &input) {
                return false;
            }
            out.extend(popped);
            input = pass.leftover.clone();
        }
        out == (1..=v.len() as u32).collect::<Vec<_>>() && trace.tier() == tier(&p)
    })?;
    Ok(format!("{total} traces"))
}

fn is_subsequence(needle: &[u32], hay: &[u32]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|x| it.any(|y| y == x))
}

fn check_pair_iff_231(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(0, max_n.min(8), |v| (separated_pair_count(v) > 0) == contains_pattern(v, &[2, 3, 1]))?;
    Ok(format!("{total} permutations"))
}

fn check_monotone(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(1, max_n.min(8), |v| {
        let p = Permutation::standardize(v);
        let t = tier(&p);
        let ok = p.deletions().all(|d| tier(&d) <= t);
        ok
    })?;
    Ok(format!("{total} permutations"))
}

fn check_witnesses(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(0, max_n.min(8), |v| {
        let p = Permutation::standardize(v);
        let pos = p.positions();
        p.separated_pairs().iter().all(|sp| {
            sp.large == sp.small + 1
                && pos[sp.large as usize] < sp.witness_position
                && sp.witness_position < pos[sp.small as usize]
                && p.at(sp.witness_position) > sp.large
        })
    })?;
    Ok(format!("{total} permutations"))
}

fn check_decompositions(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(1, max_n.min(7), |v| {
        let p = Permutation::standardize(v);
        let plus = p.plus_decompose().unwrap();
        let minus = p.minus_decompose().unwrap();
        plus.recombine() == p
            && minus.recombine() == p
            && plus.components.iter().all(Permutation::is_plus_indecomposable)
            && minus.components.iter().all(Permutation::is_minus_indecomposable)
    })?;
    Ok(format!("{total} permutations"))
}

fn check_max_tier(max_n: usize) -> std::result::Result<String, String> {
    for n in 1..=max_n.min(10) {
        let exhaustive = sym::par_fold(n, || 0, |m: &mut usize, v| *m = (*m).max(separated_pair_count(v)), usize::max);
        let closed = max_tier(n).unwrap();
        if exhaustive != closed || max_tier_recursive(n).unwrap() != closed {
            return Err(format!("n = {n}: exhaustive {exhaustive}, closed form {closed}"));
        }
        if tier(&max_tier_witness(n).unwrap()) != closed {
            return Err(format!("n = {n}: witness misses the maximum"));
        }
    }
    Ok(format!("n <= {}", max_n.min(10)))
}

fn check_uniqueness(max_n: usize) -> std::result::Result<String, String> {
    for n in [3usize, 7].into_iter().filter(|&n| n <= max_n) {
        let target = max_tier(n).unwrap();
        let hits: Vec<Permutation> = Permutations::new(n).filter(|p| tier(p) == target).collect();
        if hits != [max_tier_witness(n).unwrap()] {
            return Err(format!("n = {n}: {} maximal permutations", hits.len()));
        }
    }
    let w15 = max_tier_witness(15).unwrap();
    if tier(&w15) != 11 || w15.to_string() != "8 12 7 14 6 11 5 15 4 10 3 13 2 9 1" {
        return Err(format!("length-15 witness {w15}"));
    }
    Ok("n = 3, 7 exhaustive; n = 15 witness".into())
}

fn check_sum_rules(max_n: usize) -> std::result::Result<String, String> {
    let mut pairs = 0u64;
    for total in 2..=max_n.min(9) {
        for a in 1..total {
            let left = with_tiers(a);
            let right = with_tiers(total - a);
            for (s, ts) in &left {
                let bump = usize::from(s.values().last() != Some(&1));
                for (r, tr) in &right {
                    if tier(&s.plus(r)) != ts + tr {
                        return Err(format!("{s} ⊕ {r}"));
                    }
                    if tier(&s.minus(r)) != ts + tr + bump {
                        return Err(format!("{s} ⊖ {r}"));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn with_tiers(n: usize) -> Vec<(Permutation, usize)> {
    Permutations::new(n)
        .map(|p| {
            let t = tier(&p);
            (p, t)
        })
        .collect()
}

fn check_minus_chain(max_n: usize) -> std::result::Result<String, String> {
    let total = for_all(1, max_n.min(8), |v| {
        let p = Permutation::standardize(v);
        let chain = p.minus_decompose().unwrap().components;
        tier_of_minus_chain(&chain) == Ok(tier(&p))
    })?;
    Ok(format!("{total} permutations"))
}

fn check_brute_vs_recurrence(max_n: usize) -> std::result::Result<String, String> {
    let n = max_n.clamp(1, 10);
    let brute = table_bruteforce(n).map_err(|e| e.to_string())?;
    let (rec, _) = table_recurrence(n).map_err(|e| e.to_string())?;
    if brute != rec {
        return Err("tables differ".into());
    }
    Ok(format!("n <= {n}"))
}

fn check_recurrence_vs_gf(_: usize) -> std::result::Result<String, String> {
    let (rec, _) = table_recurrence(12).map_err(|e| e.to_string())?;
    for t in 0..=4 {
        let series = tier_series(t, 12).map_err(|e| e.to_string())?;
        for n in 1..=12 {
            let expected = num_rational::BigRational::from_integer(rec.get(n, t).into());
            if series.coeff(n) != &expected {
                return Err(format!("T({n},{t})"));
            }
        }
    }
    Ok("n <= 12, t <= 4".into())
}

fn check_parker_histogram(max_n: usize) -> std::result::Result<String, String> {
    let n_max = max_n.clamp(1, 9);
    let brute = table_bruteforce(n_max).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        let mut hist = vec![0u64; n];
        for s in all_parker(n) {
            hist[s.descent_count()] += 1;
        }
        for (t, c) in hist.into_iter().enumerate() {
            if brute.get(n, t) != BigUint::from(c) {
                return Err(format!("T({n},{t})"));
            }
        }
    }
    Ok(format!("n <= {n_max}"))
}

fn check_row_sums(max_n: usize) -> std::result::Result<String, String> {
    let n_max = max_n.max(10);
    let (rec, _) = table_recurrence(n_max).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        if rec.row(n).iter().sum::<BigUint>() != factorial(n) || rec.get(n, 0) != catalan(n) {
            return Err(format!("row {n}"));
        }
    }
    Ok(format!("n <= {n_max}"))
}

fn check_bijection(max_n: usize) -> std::result::Result<String, String> {
    let n_max = max_n.min(8);
    let mut count = 0;
    for n in 0..=n_max {
        for s in all_parker(n) {
            let p = parker_to_perm(&s);
            if perm_to_parker(&p) != s {
                return Err(format!("sequence {s}"));
            }
            let pairs: Vec<usize> = p.separated_pairs().iter().map(|sp| sp.large as usize).collect();
            if pairs != s.descents() {
                return Err(format!("descents of {s} vs pairs of {p}"));
            }
            count += 1;
        }
        for p in Permutations::new(n) {
            if parker_to_perm(&perm_to_parker(&p)) != p {
                return Err(format!("permutation {p}"));
            }
        }
    }
    Ok(format!("{count} sequences"))
}

fn check_b1(max_n: usize) -> std::result::Result<String, String> {
    let computed = basis::compute_basis(1, 6, SearchOptions::default()).map_err(|e| e.to_string())?;
    let literal = b1();
    if computed != literal {
        return Err("computed B1 differs from literal".into());
    }
    let b0 = basis::compute_basis(0, 3, SearchOptions::default()).map_err(|e| e.to_string())?;
    if b0 != basis::b0() {
        return Err("B0 differs".into());
    }
    let total = for_all(0, max_n.min(8), |v| {
        let p = Permutation::standardize(v);
        avoids_basis(&p, &literal) == (tier(&p) <= 1)
    })?;
    Ok(format!("{total} permutations"))
}

fn check_psi(_: usize) -> std::result::Result<String, String> {
    let order = 32;
    let tower = psi_tower(6, order).map_err(|e| e.to_string())?;
    let one = RationalSeries::constant(1, order);
    let two = num_rational::BigRational::from_integer(2.into());
    if &tower.levels[1] * &tower.levels[1] != RationalSeries::from_ints(&[1, -4], order) {
        return Err("ψ_1² ≠ 1 - 4u".into());
    }
    for j in 2..tower.levels.len() {
        let lhs = &tower.levels[j] * &tower.levels[j];
        let rhs = &tower.levels[j - 1].scale(&two) - &one;
        if lhs != rhs {
            return Err(format!("ψ_{j}² ≠ 2ψ_{} - 1", j - 1));
        }
    }
    for j in 0..=5 {
        let mut prod = RationalSeries::constant(1, order - 1);
        for i in 0..j {
            prod = &prod * &tower.rho(i).map_err(|e| e.to_string())?;
        }
        let rhs = (&one - &tower.levels[j]).shift_down().map_err(|e| e.to_string())?;
        let rhs = rhs.scale(&num_rational::BigRational::new(1.into(), 2.into()));
        if prod != rhs {
            return Err(format!("ρ product at j = {j}"));
        }
    }
    Ok(format!("mod u^{}", order + 1))
}

fn check_t1_closed_form(_: usize) -> std::result::Result<String, String> {
    let order = 12;
    let e = |r: crate::Result<RationalSeries>| r.map_err(|e| e.to_string());
    let root = e(RationalSeries::from_ints(&[1, -4], order + 1).sqrt())?;
    let two = num_rational::BigRational::from_integer(2.into());
    let inner = &root.scale(&two) - &RationalSeries::constant(1, order + 1);
    let nested = e(inner.sqrt())?;
    let first = e((&RationalSeries::constant(1, order + 1) - &nested).shift_down())?
        .scale(&num_rational::BigRational::new(1.into(), 2.into()));
    let closed = &first - &e(root.truncate(order).inverse())?;
    let series = e(tier_series(1, order))?;
    if closed != series {
        return Err(format!("{closed:?} vs {series:?}"));
    }
    Ok(format!("n <= {order}"))
}

fn check_floor_sum(_: usize) -> std::result::Result<String, String> {
    for n in 1usize..=1_000_000 {
        let mut sum = 0;
        let mut j = 1;
        while (1usize << (j - 1)) <= n {
            sum += (n - (1 << (j - 1))) >> j;
            j += 1;
        }
        if sum != max_tier(n).unwrap() || max_tier_recursive(n).unwrap() != sum {
            return Err(format!("n = {n}"));
        }
    }
    Ok("n <= 1000000".into())
}

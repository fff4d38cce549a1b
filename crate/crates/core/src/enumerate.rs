//! The triangle `T(n, t)` of permutations of length `n` and exact tier `t`,
//! computed by exhaustive search and by the insertion recurrence on
//! `P(n, t, k)` (permutations of length `n`, tier `t`, with `1` at position
//! `k`), plus the cumulative class counts and text/CSV/JSON/b-file export.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::separated_pair_count;
use crate::sym;
use crate::tier::max_tier;

/// Largest length accepted by [`table_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `T(n, t)`
    Exact,
    /// `Σ_{j <= t} T(n, j)`
    Cumulative,
}

/// Counts indexed by `n` in `1..=max_n` and `t` in `0..max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TierTable {
    pub kind: TableKind,
    pub max_n: usize,
    rows: Vec<Vec<BigUint>>,
}

impl TierTable {
    fn zeroed(kind: TableKind, max_n: usize) -> Self {
        TierTable { kind, max_n, rows: vec![vec![BigUint::zero(); max_n]; max_n] }
    }

    /// Count for `(n, t)`; zero outside the stored range.
    pub fn get(&self, n: usize, t: usize) -> BigUint {
        if n == 0 || n > self.max_n || t >= self.max_n {
            return if self.kind == TableKind::Cumulative && n >= 1 && n <= self.max_n {
                self.rows[n - 1][self.max_n - 1].clone()
            } else {
                BigUint::zero()
            };
        }
        self.rows[n - 1][t].clone()
    }

    /// Row `n` over `t = 0..max_n`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    pub(crate) fn from_fn(kind: TableKind, max_n: usize, f: impl Fn(usize, usize) -> BigUint) -> Self {
        let rows = (1..=max_n).map(|n| (0..max_n).map(|t| f(n, t)).collect()).collect();
        TierTable { kind, max_n, rows }
    }

    pub(crate) fn set_cell(&mut self, n: usize, t: usize, v: BigUint) {
        self.set(n, t, v)
    }

    fn set(&mut self, n: usize, t: usize, v: BigUint) {
        self.rows[n - 1][t] = v;
    }

    /// Largest column index worth printing.
    fn last_column(&self) -> usize {
        max_tier(self.max_n.max(1)).unwrap()
    }

    fn shown(&self, n: usize, t: usize) -> bool {
        match self.kind {
            TableKind::Exact => t <= max_tier(n).unwrap(),
            TableKind::Cumulative => true,
        }
    }

    /// Rows `n`, columns `t`, right aligned; cells above `τ(n)` are blank in
    /// the exact table.
    pub fn to_text(&self) -> String {
        let cols = self.last_column();
        let header: Vec<String> = (0..=cols)
            .map(|t| match (self.kind, t) {
                (TableKind::Cumulative, t) if t > 0 => format!("t<={t}"),
                _ => format!("t={t}"),
            })
            .collect();
        let mut width = header.iter().map(String::len).max().unwrap_or(1);
        for n in 1..=self.max_n {
            for t in 0..=cols {
                width = width.max(self.get(n, t).to_string().len());
            }
        }
        let label_width = format!("n={}", self.max_n).len();
        let mut out = String::new();
        write!(out, "{:>label_width$}", "").unwrap();
        for h in &header {
            write!(out, " {h:>width$}").unwrap();
        }
        out.push('\n');
        for n in 1..=self.max_n {
            write!(out, "{:>label_width$}", format!("n={n}")).unwrap();
            for t in 0..=cols {
                let cell = if self.shown(n, t) { self.get(n, t).to_string() } else { String::new() };
                write!(out, " {cell:>width$}").unwrap();
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }

    /// `n,t,count`, one line per shown cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,t,count\n");
        for n in 1..=self.max_n {
            for t in 0..=self.last_column() {
                if self.shown(n, t) {
                    writeln!(out, "{n},{t},{}", self.get(n, t)).unwrap();
                }
            }
        }
        out
    }

    /// `{"kind": ..., "max_n": ..., "rows": [[...], ...]}`; row `n` lists the
    /// shown cells starting at `t = 0`.
    pub fn to_json(&self) -> String {
        let kind = match self.kind {
            TableKind::Exact => "exact",
            TableKind::Cumulative => "cumulative",
        };
        let rows: Vec<String> = (1..=self.max_n)
            .map(|n| {
                let cells: Vec<String> = (0..=self.last_column())
                    .filter(|&t| self.shown(n, t))
                    .map(|t| self.get(n, t).to_string())
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("{{\"kind\":\"{kind}\",\"max_n\":{},\"rows\":[{}]}}\n", self.max_n, rows.join(","))
    }

    /// OEIS b-file of the triangle read by rows, row `n` holding
    /// `t = 0..n-1`, indexed from 1.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        let mut index = 1;
        for n in 1..=self.max_n {
            for t in 0..n {
                writeln!(out, "{index} {}", self.get(n, t)).unwrap();
                index += 1;
            }
        }
        out
    }

    /// b-file of column `t`: lines `n value` for `n = 1..=max_n`.
    pub fn column_bfile(&self, t: usize) -> String {
        (1..=self.max_n).map(|n| format!("{n} {}\n", self.get(n, t))).collect()
    }
}

/// `P(n, t, k)` for `1 <= k <= n`, `0 <= t < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionTable {
    pub max_n: usize,
    /// `entries[n-1][t][k-1]`
    entries: Vec<Vec<Vec<BigUint>>>,
}

impl PositionTable {
    pub fn get(&self, n: usize, t: usize, k: usize) -> BigUint {
        if n == 0 || n > self.max_n || t >= n || k == 0 || k > n {
            return BigUint::zero();
        }
        self.entries[n - 1][t][k - 1].clone()
    }
}

/// Tier histogram of every permutation of length `1..=max_n`.
pub fn table_bruteforce(max_n: usize) -> Result<TierTable> {
    if max_n == 0 {
        return Err(Error::NonPositive);
    }
    if max_n > BRUTEFORCE_CAP {
        return Err(Error::CapExceeded { what: "brute-force length", requested: max_n, cap: BRUTEFORCE_CAP });
    }
    let mut table = TierTable::zeroed(TableKind::Exact, max_n);
    for n in 1..=max_n {
        let hist = tier_histogram(n);
        for (t, c) in hist.into_iter().enumerate() {
            table.set(n, t, BigUint::from(c));
        }
    }
    Ok(table)
}

/// `hist[t]` = number of permutations of length `n` with tier `t`.
pub fn tier_histogram(n: usize) -> Vec<u64> {
    let width = n.max(1);
    sym::par_fold(
        n,
        || vec![0u64; width],
        |hist, values| hist[separated_pair_count(values)] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}

/// `P(1,0,1) = 1` and
/// `P(n+1, t, k) = Σ_{j >= k-1} P(n, t, j) + Σ_{j <= k-2} P(n, t-1, j)`,
/// evaluated with running prefix and suffix sums.
pub fn table_recurrence(max_n: usize) -> Result<(TierTable, PositionTable)> {
    if max_n == 0 {
        return Err(Error::NonPositive);
    }
    let mut entries: Vec<Vec<Vec<BigUint>>> = vec![vec![vec![BigUint::one()]]];
    for n in 1..max_n {
        let prev = &entries[n - 1];
        // suffix[t][m] = Σ_{j >= m+1} P(n,t,j), m in 0..=n (0-based j = m)
        // prefix[t][m] = Σ_{j <= m} P(n,t,j), m in 0..=n
        let suffix: Vec<Vec<BigUint>> = prev
            .iter()
            .map(|row| {
                let mut s = vec![BigUint::zero(); n + 1];
                for m in (0..n).rev() {
                    s[m] = &s[m + 1] + &row[m];
                }
                s
            })
            .collect();
        let prefix: Vec<Vec<BigUint>> = prev
            .iter()
            .map(|row| {
                let mut s = vec![BigUint::zero(); n + 1];
                for m in 1..=n {
                    s[m] = &s[m - 1] + &row[m - 1];
                }
                s
            })
            .collect();
        let next: Vec<Vec<BigUint>> = (0..=n)
            .map(|t| {
                (1..=n + 1)
                    .map(|k| {
                        // j >= k-1 with j >= 1: 0-based start max(k-2, 0)
                        let same = if t < n { suffix[t][k.saturating_sub(2)].clone() } else { BigUint::zero() };
                        // j <= k-2
                        let up = if t >= 1 && t - 1 < n && k >= 2 {
                            prefix[t - 1][(k - 2).min(n)].clone()
                        } else {
                            BigUint::zero()
                        };
                        same + up
                    })
                    .collect()
            })
            .collect();
        entries.push(next);
    }
    let mut table = TierTable::zeroed(TableKind::Exact, max_n);
    for (n0, rows) in entries.iter().enumerate() {
        for (t, row) in rows.iter().enumerate() {
            table.set(n0 + 1, t, row.iter().sum());
        }
    }
    Ok((table, PositionTable { max_n, entries }))
}

/// Running row sums `Σ_{j <= t} T(n, j)`.
pub fn cumulative(table: &TierTable) -> TierTable {
    let mut out = TierTable::zeroed(TableKind::Cumulative, table.max_n);
    for n in 1..=table.max_n {
        let mut acc = BigUint::zero();
        for t in 0..table.max_n {
            acc += table.get(n, t);
            out.set(n, t, acc.clone());
        }
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// `binomial(2n, n) / (n + 1)`
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n as u64 {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

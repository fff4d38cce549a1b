//! Multi-pass stack sorting of permutations.
//!
//! A permutation is pushed through a stack that may only pop the next value
//! needed by the output; leftovers are fed through again. The number of extra
//! passes (the *tier*) equals the number of separated pairs `(i+1, i)`,
//! i.e. consecutive values that occur as the `2` and `1` of a `231`.
//!
//! Modules:
//! - [`perm`]: permutations, containment, separated pairs, decompositions
//! - [`machine`]: the stack sorter with full traces
//! - [`tier`]: tiers, maximum tier `τ(n)` and its witnesses
//! - [`basis`]: bases of the `k`-pass-sortable classes
//! - [`parker`]: Parker sequences and the descent-preserving bijection
//! - [`enumerate`]: the `T(n, t)` triangle by brute force and recurrence
//! - [`series`]: exact power series and the nested-radical generating function
//! - [`check`]: cross-oracle validation suite
//! - [`cli`]: command-line front end

pub mod basis;
pub mod check;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod machine;
pub mod parker;
pub mod perm;
pub mod series;
pub mod sym;
pub mod tier;

pub use error::{Error, Result};
pub use perm::Permutation;

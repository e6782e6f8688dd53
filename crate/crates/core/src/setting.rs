//! Settings and families.
//!
//! A *setting* fixes a ground set of combinatorial objects together with the
//! agreement threshold `t`: `k`-sets of `[n]` agreeing on at least `t`
//! vertices, permutations of `[n]` agreeing on at least `t` indices, or
//! `k`-dimensional subspaces of `F_q^n` meeting in at least a line (`t = 1`).
//! A *family* is a set of ground objects, stored as a bitset over object
//! ranks.

use crate::bitset::BitSet;
use crate::combinatorics::{self, BigCount};
use crate::error::{invalid, Result};

/// Hard cap for hypergraph ground labels so edges fit one machine word.
pub const MAX_HYPERGRAPH_N: u32 = 30;
/// Full permutation enumeration cap (8! = 40320).
pub const MAX_PERMUTATION_N: u32 = 8;
/// Subspace enumeration cap on the number of ground objects.
pub const MAX_SUBSPACE_COUNT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Setting {
    /// `k`-uniform, `t`-intersecting hypergraphs on `[n]`.
    Hypergraph { n: u32, k: u32, t: u32 },
    /// `t`-intersecting families of permutations in `S_n`.
    Permutation { n: u32, t: u32 },
    /// Intersecting families of `k`-dimensional subspaces of `F_q^n`.
    Subspace { n: u32, k: u32, q: u32 },
}

impl Setting {
    pub fn hypergraph(n: u32, k: u32, t: u32) -> Result<Self> {
        let s = Setting::Hypergraph { n, k, t };
        s.validate()?;
        Ok(s)
    }

    pub fn permutation(n: u32, t: u32) -> Result<Self> {
        let s = Setting::Permutation { n, t };
        s.validate()?;
        Ok(s)
    }

    pub fn subspace(n: u32, k: u32, q: u32) -> Result<Self> {
        let s = Setting::Subspace { n, k, q };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Setting::Hypergraph { n, k, t } => {
                if k == 0 || k > n {
                    return Err(invalid(format!("hypergraph requires 0 < k <= n, got k={k} n={n}")));
                }
                if n > MAX_HYPERGRAPH_N {
                    return Err(invalid(format!("hypergraph cap n <= {MAX_HYPERGRAPH_N}, got {n}")));
                }
                if t == 0 || t > k {
                    return Err(invalid(format!("hypergraph requires 1 <= t <= k, got t={t} k={k}")));
                }
            }
            Setting::Permutation { n, t } => {
                if n == 0 || n > MAX_PERMUTATION_N {
                    return Err(invalid(format!("permutation cap 1 <= n <= {MAX_PERMUTATION_N}, got {n}")));
                }
                if t == 0 || t > n {
                    return Err(invalid(format!("permutation requires 1 <= t <= n, got t={t}")));
                }
            }
            Setting::Subspace { n, k, q } => {
                if !matches!(q, 2 | 3 | 5) {
                    return Err(invalid(format!("subspace setting requires prime q in {{2,3,5}}, got {q}")));
                }
                if k == 0 || k > n {
                    return Err(invalid(format!("subspace requires 1 <= k <= n, got k={k} n={n}")));
                }
            }
        }
        Ok(())
    }

    /// Agreement threshold `t` (always 1 in the subspace setting).
    pub fn threshold(&self) -> usize {
        match *self {
            Setting::Hypergraph { t, .. } | Setting::Permutation { t, .. } => t as usize,
            Setting::Subspace { .. } => 1,
        }
    }

    /// Number of ground objects: `C(n,k)`, `n!` or `[n choose k]_q`.
    pub fn ground_size(&self) -> Result<BigCount> {
        self.validate()?;
        Ok(match *self {
            Setting::Hypergraph { n, k, .. } => combinatorics::binomial(n as u64, k as i64),
            Setting::Permutation { n, .. } => combinatorics::factorial(n as u64),
            Setting::Subspace { n, k, q } => {
                combinatorics::gaussian_binomial(n as i64, k as i64, q as u64)?
            }
        })
    }

    pub fn label(&self) -> String {
        match *self {
            Setting::Hypergraph { n, k, t } => format!("hypergraph(n={n},k={k},t={t})"),
            Setting::Permutation { n, t } => format!("permutation(n={n},t={t})"),
            Setting::Subspace { n, k, q } => format!("subspace(n={n},k={k},q={q})"),
        }
    }
}

/// A family of ground objects in one setting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    pub setting: Setting,
    pub members: BitSet,
}

impl Family {
    pub fn empty(setting: Setting, ground_size: usize) -> Self {
        Family {
            setting,
            members: BitSet::new(ground_size),
        }
    }

    pub fn from_ranks(setting: Setting, ground_size: usize, ranks: impl IntoIterator<Item = usize>) -> Self {
        Family {
            setting,
            members: BitSet::from_indices(ground_size, ranks),
        }
    }

    pub fn size(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

//! The hypergraph setting: edges as single machine words, plus the two
//! candidate maximum non-trivial `t`-intersecting families.

use crate::bitset::BitSet;
use crate::combinatorics::{binomial, subsets_colex, BigCount};
use crate::error::{invalid, Result};
use crate::setting::{Family, Setting, MAX_HYPERGRAPH_N};

/// A `k`-subset of `[n]` packed into the low `n` bits of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge(pub u32);

impl Edge {
    pub fn agreement(self, other: Edge) -> usize {
        (self.0 & other.0).count_ones() as usize
    }
}

/// All `C(n,k)` edges in rank (colex) order.
pub fn enumerate_edges(n: u32, k: u32) -> Result<Vec<Edge>> {
    if k == 0 || k > n || n > MAX_HYPERGRAPH_N {
        return Err(invalid(format!(
            "enumerate_edges requires 0 < k <= n <= {MAX_HYPERGRAPH_N}, got n={n} k={k}"
        )));
    }
    Ok(subsets_colex(n, k).into_iter().map(Edge).collect())
}

fn family_from_masks(setting: Setting, edges: &[Edge], pred: impl Fn(u32) -> bool) -> Family {
    let mut members = BitSet::new(edges.len());
    for (rank, e) in edges.iter().enumerate() {
        if pred(e.0) {
            members.insert(rank);
        }
    }
    Family { setting, members }
}

/// The family `{F : |F ∩ [t+2]| >= t+1}` on the canonical first `t+2`
/// labels.  Its size is `(t+2) C(n-t-2, k-t-1) + C(n-t-2, k-t-2)`.
pub fn build_h1(n: u32, k: u32, t: u32) -> Result<Family> {
    let setting = Setting::hypergraph(n, k, t)?;
    if k <= t || n < k + 2 {
        return Err(invalid(format!(
            "H1 requires k > t and n >= k+2, got n={n} k={k} t={t}"
        )));
    }
    let edges = enumerate_edges(n, k)?;
    let window = (1u32 << (t + 2)) - 1;
    Ok(family_from_masks(setting, &edges, |mask| {
        (mask & window).count_ones() >= t + 1
    }))
}

/// Size of `H1` straight from the closed form.
pub fn h1_size(n: u32, k: u32, t: u32) -> BigCount {
    let head = BigCount::from(t + 2) * binomial((n - t - 2) as u64, (k as i64) - (t as i64) - 1);
    head + binomial((n - t - 2) as u64, (k as i64) - (t as i64) - 2)
}

/// The family `{F : [t] ⊂ F, F ∩ [t+1, k+1] != ∅} ∪ {[k+1] \ {i} : i in [t]}`
/// on canonical labels.  Its size is `C(n-t,k-t) - C(n-k-1,k-t) + t`.
pub fn build_h2(n: u32, k: u32, t: u32) -> Result<Family> {
    let setting = Setting::hypergraph(n, k, t)?;
    if k <= t || n < k + 1 {
        return Err(invalid(format!(
            "H2 requires k > t and n >= k+1, got n={n} k={k} t={t}"
        )));
    }
    let edges = enumerate_edges(n, k)?;
    let first_t = (1u32 << t) - 1;
    let mid = ((1u32 << (k + 1)) - 1) & !first_t; // labels t+1 .. k+1
    let k_plus_1 = (1u32 << (k + 1)) - 1;
    Ok(family_from_masks(setting, &edges, |mask| {
        (mask & first_t == first_t && mask & mid != 0)
            || (mask & !k_plus_1 == 0 && (k_plus_1 & !mask).count_ones() == 1 && mask & first_t != first_t)
    }))
}

/// Size of `H2` straight from the closed form.
pub fn h2_size(n: u32, k: u32, t: u32) -> BigCount {
    let base = binomial((n - t) as u64, (k - t) as i64);
    let miss = binomial((n as i64 - k as i64 - 1).max(0) as u64, (k - t) as i64);
    base - miss + BigCount::from(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn edge_counts() {
        assert_eq!(enumerate_edges(5, 2).unwrap().len(), 10);
        assert_eq!(enumerate_edges(7, 3).unwrap().len(), 35);
        assert_eq!(enumerate_edges(4, 4).unwrap().len(), 1);
        assert!(enumerate_edges(31, 2).is_err());
        assert!(enumerate_edges(4, 0).is_err());
    }

    #[test]
    fn h1_examples() {
        // (5,2,1): the triangle on [3]
        let f = build_h1(5, 2, 1).unwrap();
        assert_eq!(f.size(), 3);
        assert_eq!(h1_size(5, 2, 1).to_u64().unwrap(), 3);
        // (9,3,1): 3*C(6,1) + C(6,0) = 19
        assert_eq!(build_h1(9, 3, 1).unwrap().size(), 19);
        assert_eq!(h1_size(9, 3, 1).to_u64().unwrap(), 19);
        // (7,3,2): 4*C(3,0) + C(3,-1) = 4
        assert_eq!(build_h1(7, 3, 2).unwrap().size(), 4);
        assert_eq!(h1_size(7, 3, 2).to_u64().unwrap(), 4);
        assert!(build_h1(5, 2, 2).is_err());
        assert!(build_h1(5, 4, 1).is_err());
    }

    #[test]
    fn h2_examples() {
        assert_eq!(build_h2(5, 2, 1).unwrap().size(), 3);
        assert_eq!(h2_size(5, 2, 1).to_u64().unwrap(), 3);
        assert_eq!(build_h2(7, 3, 1).unwrap().size(), 13);
        assert_eq!(h2_size(7, 3, 1).to_u64().unwrap(), 13);
        assert_eq!(build_h2(9, 3, 1).unwrap().size(), 19);
        assert_eq!(h2_size(9, 3, 1).to_u64().unwrap(), 19);
    }

    #[test]
    fn construction_matches_closed_form() {
        for n in 4..=12u32 {
            for k in 2..=4u32.min(n.saturating_sub(2)) {
                for t in 1..k {
                    if n < k + 2 {
                        continue;
                    }
                    let f1 = build_h1(n, k, t).unwrap();
                    assert_eq!(
                        BigCount::from(f1.size() as u64),
                        h1_size(n, k, t),
                        "H1 size mismatch at ({n},{k},{t})"
                    );
                    let f2 = build_h2(n, k, t).unwrap();
                    assert_eq!(
                        BigCount::from(f2.size() as u64),
                        h2_size(n, k, t),
                        "H2 size mismatch at ({n},{k},{t})"
                    );
                }
            }
        }
    }
}

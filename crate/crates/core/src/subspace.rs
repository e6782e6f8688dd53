//! The subspace setting: `k`-dimensional subspaces of `F_q^n` for prime `q`,
//! canonically represented by reduced row-echelon bases.

use crate::bitset::BitSet;
use crate::combinatorics::gaussian_binomial;
use crate::error::{invalid, Result};
use crate::setting::MAX_SUBSPACE_COUNT;
use num_traits::ToPrimitive;
use std::collections::HashMap;

fn inv_mod(a: u32, q: u32) -> u32 {
    // q <= 5, linear scan
    (1..q).find(|&x| (a * x) % q == 1).expect("nonzero element has an inverse")
}

/// A subspace of `F_q^n` stored as its unique RREF basis (`rank = k` rows).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub n: usize,
    pub q: u32,
    rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Build from arbitrary spanning rows; canonicalizes to RREF.
    pub fn from_spanning_rows(n: usize, q: u32, rows: Vec<Vec<u8>>) -> Result<Self> {
        for r in &rows {
            if r.len() != n || r.iter().any(|&x| x as u32 >= q) {
                return Err(invalid("row has wrong length or entries outside F_q"));
            }
        }
        let mut m = rows;
        rref_in_place(&mut m, q);
        Ok(Subspace { n, q, rows: m })
    }

    /// Membership of a vector in the row space, by reduction against the
    /// RREF basis.
    pub fn contains_vector(&self, v: &[u8]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let q = self.q;
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = pivot_of(row);
            let c = v[p] as u32;
            if c != 0 {
                sub_scaled(&mut v, row, c, q);
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

fn pivot_of(row: &[u8]) -> usize {
    row.iter().position(|&x| x != 0).expect("RREF rows are nonzero")
}

fn sub_scaled(dst: &mut [u8], src: &[u8], c: u32, q: u32) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = (((*d as u32) + (q - (c * s as u32) % q) % q) % q) as u8;
    }
}

/// In-place reduced row echelon form over `F_q`; drops zero rows so that the
/// remaining row count is the rank.
pub fn rref_in_place(m: &mut Vec<Vec<u8>>, q: u32) {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pivot_row);
        let inv = inv_mod(m[row][col] as u32, q);
        for x in m[row].iter_mut() {
            *x = ((*x as u32 * inv) % q) as u8;
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let c = m[r][col] as u32;
                let src = m[row].clone();
                sub_scaled(&mut m[r], &src, c, q);
            }
        }
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.retain(|r| r.iter().any(|&x| x != 0));
}

/// Rank of a matrix over `F_q` (consumes a copy).
pub fn rank_of(rows: &[Vec<u8>], q: u32) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    rref_in_place(&mut m, q);
    m.len()
}

/// `dim(U ∩ V) = dim U + dim V - rank([U; V])`.
pub fn intersection_dim(u: &Subspace, v: &Subspace) -> Result<usize> {
    if u.n != v.n || u.q != v.q {
        return Err(invalid("intersection_dim requires the same ambient space"));
    }
    let mut stacked = u.rows.clone();
    stacked.extend(v.rows.iter().cloned());
    let r = rank_of(&stacked, u.q);
    Ok(u.dim() + v.dim() - r)
}

/// All `[n choose k]_q` subspaces, each exactly once, in canonical order:
/// pivot-column sets ascending in colex, free entries as a little-endian
/// odometer.
pub fn enumerate_subspaces(n: u32, k: u32, q: u32) -> Result<Vec<Subspace>> {
    if !matches!(q, 2 | 3 | 5) {
        return Err(invalid(format!("enumerate_subspaces requires prime q in {{2,3,5}}, got {q}")));
    }
    if k == 0 || k > n {
        return Err(invalid(format!("enumerate_subspaces requires 1 <= k <= n, got n={n} k={k}")));
    }
    let total = gaussian_binomial(n as i64, k as i64, q as u64)?;
    let total = total
        .to_u64()
        .filter(|&c| c <= MAX_SUBSPACE_COUNT)
        .ok_or_else(|| invalid(format!(
            "subspace count exceeds cap {MAX_SUBSPACE_COUNT} for (n={n},k={k},q={q})"
        )))?;

    let n = n as usize;
    let k = k as usize;
    let mut out = Vec::with_capacity(total as usize);
    for pivot_mask in crate::combinatorics::subsets_colex(n as u32, k as u32) {
        let pivots: Vec<usize> = (0..n).filter(|&j| pivot_mask >> j & 1 == 1).collect();
        // free cells: (row i, col j) with j > pivots[i] and j not a pivot
        let mut free_cells: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..n {
                if pivot_mask >> j & 1 == 0 {
                    free_cells.push((i, j));
                }
            }
        }
        let mut values = vec![0u8; free_cells.len()];
        loop {
            let mut rows = vec![vec![0u8; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (&(i, j), &v) in free_cells.iter().zip(&values) {
                rows[i][j] = v;
            }
            out.push(Subspace { n, q, rows });
            // odometer step
            let mut carry = true;
            for v in values.iter_mut() {
                if *v as u32 + 1 < q {
                    *v += 1;
                    carry = false;
                    break;
                }
                *v = 0;
            }
            if carry {
                break;
            }
        }
    }
    debug_assert_eq!(out.len() as u64, total);
    Ok(out)
}

/// Canonical representatives of the 1-dimensional subspaces of `F_q^n`:
/// first nonzero coordinate scaled to 1, listed in ascending order of the
/// little-endian base-`q` encoding.
pub struct LineTable {
    pub n: usize,
    pub q: u32,
    pub reps: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl LineTable {
    pub fn new(n: usize, q: u32) -> Self {
        let mut reps = Vec::new();
        let mut index = HashMap::new();
        let total = (q as u64).pow(n as u32);
        for code in 1..total {
            let v = decode_vector(code, n, q);
            if canonical_line_rep(&v, q) == v {
                index.insert(v.clone(), reps.len());
                reps.push(v);
            }
        }
        LineTable { n, q, reps, index }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn index_of(&self, v: &[u8]) -> Option<usize> {
        self.index.get(&canonical_line_rep(v, self.q)).copied()
    }

    /// Indices of all lines lying inside `u`, as a bitset over this table.
    pub fn lines_in(&self, u: &Subspace) -> BitSet {
        let mut set = BitSet::new(self.len());
        let k = u.dim();
        let total = (self.q as u64).pow(k as u32);
        for code in 1..total {
            let coeffs = decode_vector(code, k, self.q);
            let mut v = vec![0u8; self.n];
            for (c, row) in coeffs.iter().zip(u.rows()) {
                if *c != 0 {
                    add_scaled(&mut v, row, *c as u32, self.q);
                }
            }
            if let Some(i) = self.index_of(&v) {
                set.insert(i);
            }
        }
        set
    }
}

fn add_scaled(dst: &mut [u8], src: &[u8], c: u32, q: u32) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((*d as u32 + c * s as u32) % q) as u8;
    }
}

fn decode_vector(code: u64, n: usize, q: u32) -> Vec<u8> {
    let mut v = vec![0u8; n];
    let mut c = code;
    for x in v.iter_mut() {
        *x = (c % q as u64) as u8;
        c /= q as u64;
    }
    v
}

fn canonical_line_rep(v: &[u8], q: u32) -> Vec<u8> {
    let mut out = v.to_vec();
    if let Some(first) = out.iter().position(|&x| x != 0) {
        let inv = inv_mod(out[first] as u32, q);
        for x in out.iter_mut() {
            *x = ((*x as u32 * inv) % q) as u8;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_subspaces(4, 2, 2).unwrap().len(), 35);
        assert_eq!(enumerate_subspaces(5, 2, 2).unwrap().len(), 155);
        assert_eq!(enumerate_subspaces(3, 3, 3).unwrap().len(), 1);
        assert!(enumerate_subspaces(4, 2, 4).is_err());
        assert!(enumerate_subspaces(20, 10, 2).is_err(), "cap exceeded");
    }

    #[test]
    fn enumeration_is_duplicate_free_rref() {
        let spaces = enumerate_subspaces(4, 2, 3).unwrap();
        let mut seen = std::collections::HashSet::new();
        for s in &spaces {
            assert_eq!(s.dim(), 2);
            // canonical: re-reducing changes nothing
            let again = Subspace::from_spanning_rows(4, 3, s.rows().to_vec()).unwrap();
            assert_eq!(&again, s);
            assert!(seen.insert(s.clone()), "duplicate subspace");
        }
    }

    #[test]
    fn intersection_dims() {
        let spaces = enumerate_subspaces(4, 2, 2).unwrap();
        for s in &spaces {
            assert_eq!(intersection_dim(s, s).unwrap(), 2);
        }
        // two distinct lines meet in 0
        let lines = enumerate_subspaces(4, 1, 2).unwrap();
        assert_eq!(intersection_dim(&lines[0], &lines[1]).unwrap(), 0);
        // complementary pair in F_2^4
        let u = Subspace::from_spanning_rows(
            4,
            2,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
        )
        .unwrap();
        let v = Subspace::from_spanning_rows(
            4,
            2,
            vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(intersection_dim(&u, &v).unwrap(), 0);
        // mismatched ambient rejected
        let w = enumerate_subspaces(5, 2, 2).unwrap().pop().unwrap();
        assert!(intersection_dim(&u, &w).is_err());
    }

    #[test]
    fn line_table_counts_and_membership() {
        let lt = LineTable::new(4, 2);
        assert_eq!(lt.len(), 15); // gauss(4,1,2)
        let lt3 = LineTable::new(3, 3);
        assert_eq!(lt3.len(), 13); // gauss(3,1,3)

        let u = Subspace::from_spanning_rows(
            4,
            2,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
        )
        .unwrap();
        let inside = lt.lines_in(&u);
        assert_eq!(inside.count(), 3); // gauss(2,1,2) lines inside a plane
        for i in inside.ones() {
            assert!(u.contains_vector(&lt.reps[i]));
        }
    }

    #[test]
    fn intersection_dim_agrees_with_shared_lines() {
        let lt = LineTable::new(4, 2);
        let spaces = enumerate_subspaces(4, 2, 2).unwrap();
        let sets: Vec<BitSet> = spaces.iter().map(|s| lt.lines_in(s)).collect();
        for i in 0..spaces.len() {
            for j in 0..spaces.len() {
                let d = intersection_dim(&spaces[i], &spaces[j]).unwrap();
                let shared = sets[i].intersection_count(&sets[j]);
                // a d-dimensional intersection contains gauss(d,1,q) lines
                let expected = match d {
                    0 => 0,
                    1 => 1,
                    2 => 3,
                    _ => unreachable!(),
                };
                assert_eq!(shared, expected);
            }
        }
    }
}

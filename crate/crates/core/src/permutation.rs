//! The permutation setting: image arrays plus a pair-encoded bitmask so that
//! agreement is AND + popcount, the same inner-loop shape as hypergraph
//! edges.

use crate::error::{invalid, Result};
use crate::setting::MAX_PERMUTATION_N;

/// A permutation of `[n]` stored by its image sequence (0-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_PERMUTATION_N as usize {
            return Err(invalid(format!("permutation length must be 1..={MAX_PERMUTATION_N}")));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return Err(invalid("image sequence is not a bijection"));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// The `n`-set of pairs `{(i, σ(i))}` packed as bits `i*n + σ(i)` of a
    /// word (`n <= 8`, so `n^2 <= 64`).
    pub fn pair_mask(&self) -> u64 {
        let n = self.n();
        let mut mask = 0u64;
        for (i, &v) in self.images.iter().enumerate() {
            mask |= 1u64 << (i * n + v as usize);
        }
        mask
    }

    /// The explicit pair set `{(i, σ(i))}`, 0-indexed.
    pub fn pair_encode(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, &v)| (i, v as usize))
            .collect()
    }
}

/// Number of indices where the two permutations agree.
pub fn agreement(a: &Perm, b: &Perm) -> Result<usize> {
    if a.n() != b.n() {
        return Err(invalid("agreement requires permutations of the same n"));
    }
    Ok(a.images
        .iter()
        .zip(&b.images)
        .filter(|(x, y)| x == y)
        .count())
}

/// All `n!` permutations in lexicographic order of their image sequences.
pub fn enumerate_perms(n: u32) -> Result<Vec<Perm>> {
    if n == 0 || n > MAX_PERMUTATION_N {
        return Err(invalid(format!("enumerate_perms requires 1 <= n <= {MAX_PERMUTATION_N}, got {n}")));
    }
    let n = n as usize;
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm {
            images: current.clone(),
        });
        // next lexicographic image sequence
        let Some(i) = (0..n - 1).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    Ok(out)
}

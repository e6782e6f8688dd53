//! Shared exhaustive oracles for the integration suites.
//!
//! Everything here recomputes ground truth by brute force, independently of
//! the library's counting and search paths.
#![allow(dead_code)] // each test binary uses a different slice of this module

use ekrlab_core::bitset::BitSet;
use ekrlab_core::combinatorics::BigCount;
use ekrlab_core::intersection::Ground;
use ekrlab_core::setting::Family;

/// Brute-force scan over every subset of a ground set (or of a candidate
/// list), classifying each family exactly.  Usable up to ~24 objects.
pub struct ExhaustiveOracle {
    pub by_size: Vec<u64>,
    pub total: u64,
    pub trivial: u64,
    pub maximal: Vec<Vec<usize>>,
    pub max_size: usize,
    pub max_trivial_size: usize,
    pub max_nontrivial_size: Option<usize>,
}

pub fn exhaustive_oracle(ground: &Ground, candidates: Option<&[usize]>) -> ExhaustiveOracle {
    let items: Vec<usize> = match candidates {
        Some(c) => c.to_vec(),
        None => (0..ground.size()).collect(),
    };
    let m = items.len();
    assert!(m <= 24, "oracle cap");
    let t = ground.threshold();

    // pairwise compatibility masks within the candidate list
    let mut compat = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && ground.agreement(items[i], items[j]) >= t {
                compat[i] |= 1 << j;
            }
        }
    }

    let mut by_size = vec![0u64; m + 1];
    let mut trivial = 0u64;
    let mut maximal = Vec::new();
    let mut max_size = 0usize;
    let mut max_trivial_size = 0usize;
    let mut max_nontrivial_size: Option<usize> = None;

    'subsets: for mask in 0u32..1u32 << m {
        let mut is_indep = true;
        let mut mm = mask;
        while mm != 0 {
            let i = mm.trailing_zeros() as usize;
            mm &= mm - 1;
            if mask & !(compat[i] | (1 << i)) != 0 {
                is_indep = false;
                break;
            }
        }
        if !is_indep {
            continue 'subsets;
        }
        let size = mask.count_ones() as usize;
        by_size[size] += 1;
        max_size = max_size.max(size);

        let fam = family_from_mask(ground, &items, mask);
        let is_triv = ground.is_trivial(&fam).unwrap();
        if is_triv {
            trivial += 1;
            max_trivial_size = max_trivial_size.max(size);
        } else {
            max_nontrivial_size = Some(max_nontrivial_size.map_or(size, |x| x.max(size)));
        }

        // maximal iff no candidate outside is compatible with everything
        let mut extendable = false;
        for j in 0..m {
            if mask >> j & 1 == 0 && mask & !compat[j] == 0 {
                extendable = true;
                break;
            }
        }
        if !extendable {
            maximal.push(
                (0..m)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| items[i])
                    .collect(),
            );
        }
    }
    while by_size.last() == Some(&0) && by_size.len() > 1 {
        by_size.pop();
    }
    ExhaustiveOracle {
        total: by_size.iter().sum(),
        by_size,
        trivial,
        maximal,
        max_size,
        max_trivial_size,
        max_nontrivial_size,
    }
}

pub fn family_from_mask(ground: &Ground, items: &[usize], mask: u32) -> Family {
    ground.family_from_ranks(
        (0..items.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| items[i]),
    )
}

pub fn family_from_bitset(ground: &Ground, members: &BitSet) -> Family {
    Family {
        setting: ground.setting(),
        members: members.clone(),
    }
}

pub fn big(x: u64) -> BigCount {
    BigCount::from(x)
}

//! The generic engine: a ground set of ranked objects with a `t`-agreement
//! predicate, the closure operator `I(·)`, intersecting/maximal/trivial
//! tests, and minimal generating sets with their skew witnesses.

use crate::bitset::BitSet;
use crate::error::{invalid, Result};
use crate::hypergraph::enumerate_edges;
use crate::permutation::{enumerate_perms, Perm};
use crate::setting::{Family, Setting};
use crate::subspace::{enumerate_subspaces, LineTable, Subspace};

/// Materialized ground set for one setting: every object, rank-ordered, with
/// whatever precomputation makes agreement an AND + popcount.
pub struct Ground {
    setting: Setting,
    objects: Objects,
}

enum Objects {
    Edges {
        masks: Vec<u32>,
    },
    Perms {
        perms: Vec<Perm>,
        pair_masks: Vec<u64>,
    },
    Spaces {
        spaces: Vec<Subspace>,
        line_sets: Vec<BitSet>,
        lines: LineTable,
        /// shared-line count -> intersection dimension, index d holds
        /// gauss(d,1,q)
        shared_to_dim: Vec<usize>,
    },
}

/// Common-core mask for triviality tracking: vertices, index/value pairs, or
/// line indices contained in every member so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreMask {
    Small(u64),
    Big(BitSet),
}

impl CoreMask {
    pub fn count(&self) -> usize {
        match self {
            CoreMask::Small(w) => w.count_ones() as usize,
            CoreMask::Big(b) => b.count(),
        }
    }

    pub fn intersect_with(&mut self, other: &CoreMask) {
        match (self, other) {
            (CoreMask::Small(a), CoreMask::Small(b)) => *a &= b,
            (CoreMask::Big(a), CoreMask::Big(b)) => a.intersect_with(b),
            _ => panic!("mismatched core masks"),
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        match self {
            CoreMask::Small(w) => w >> e & 1 == 1,
            CoreMask::Big(b) => b.contains(e),
        }
    }

    pub fn elements(&self) -> Vec<usize> {
        match self {
            CoreMask::Small(w) => (0..64).filter(|&i| w >> i & 1 == 1).collect(),
            CoreMask::Big(b) => b.to_vec(),
        }
    }
}

impl Ground {
    /// Enumerate the full ground set of a setting.
    pub fn new(setting: Setting) -> Result<Self> {
        setting.validate()?;
        let objects = match setting {
            Setting::Hypergraph { n, k, .. } => Objects::Edges {
                masks: enumerate_edges(n, k)?.into_iter().map(|e| e.0).collect(),
            },
            Setting::Permutation { n, .. } => {
                let perms = enumerate_perms(n)?;
                let pair_masks = perms.iter().map(|p| p.pair_mask()).collect();
                Objects::Perms { perms, pair_masks }
            }
            Setting::Subspace { n, k, q } => {
                let spaces = enumerate_subspaces(n, k, q)?;
                let lines = LineTable::new(n as usize, q);
                let line_sets: Vec<BitSet> = spaces.iter().map(|s| lines.lines_in(s)).collect();
                let mut shared_to_dim = vec![0usize];
                let mut shared = 0u64;
                for _ in 1..=k as u64 {
                    shared = shared * q as u64 + 1; // gauss(d,1,q)
                    shared_to_dim.push(shared as usize);
                }
                Objects::Spaces {
                    spaces,
                    line_sets,
                    lines,
                    shared_to_dim,
                }
            }
        };
        Ok(Ground { setting, objects })
    }

    pub fn setting(&self) -> Setting {
        self.setting
    }

    pub fn size(&self) -> usize {
        match &self.objects {
            Objects::Edges { masks } => masks.len(),
            Objects::Perms { perms, .. } => perms.len(),
            Objects::Spaces { spaces, .. } => spaces.len(),
        }
    }

    pub fn threshold(&self) -> usize {
        self.setting.threshold()
    }

    /// Setting-specific agreement: `|edge ∩ edge|`, `#{i: σ(i)=π(i)}` or
    /// `dim(U ∩ V)`.
    pub fn agreement(&self, i: usize, j: usize) -> usize {
        match &self.objects {
            Objects::Edges { masks } => (masks[i] & masks[j]).count_ones() as usize,
            Objects::Perms { pair_masks, .. } => {
                (pair_masks[i] & pair_masks[j]).count_ones() as usize
            }
            Objects::Spaces {
                line_sets,
                shared_to_dim,
                ..
            } => {
                let shared = line_sets[i].intersection_count(&line_sets[j]);
                shared_to_dim
                    .iter()
                    .position(|&s| s == shared)
                    .expect("shared-line count must be gauss(d,1,q)")
            }
        }
    }

    pub fn agrees(&self, i: usize, j: usize) -> bool {
        self.agreement(i, j) >= self.threshold()
    }

    pub fn edge_mask(&self, i: usize) -> Option<u32> {
        match &self.objects {
            Objects::Edges { masks } => Some(masks[i]),
            _ => None,
        }
    }

    pub fn perm(&self, i: usize) -> Option<&Perm> {
        match &self.objects {
            Objects::Perms { perms, .. } => Some(&perms[i]),
            _ => None,
        }
    }

    pub fn space(&self, i: usize) -> Option<&Subspace> {
        match &self.objects {
            Objects::Spaces { spaces, .. } => Some(&spaces[i]),
            _ => None,
        }
    }

    pub fn object_label(&self, i: usize) -> String {
        match &self.objects {
            Objects::Edges { masks } => {
                let verts: Vec<String> = (0..32)
                    .filter(|b| masks[i] >> b & 1 == 1)
                    .map(|b| (b + 1).to_string())
                    .collect();
                format!("{{{}}}", verts.join(","))
            }
            Objects::Perms { perms, .. } => format!(
                "[{}]",
                perms[i]
                    .images()
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Objects::Spaces { spaces, .. } => {
                let rows: Vec<String> = spaces[i]
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
                    .collect();
                format!("<{}>", rows.join(";"))
            }
        }
    }

    /// Size of the core-element universe (vertices, pairs or lines).
    pub fn core_universe(&self) -> usize {
        match (&self.objects, self.setting) {
            (Objects::Edges { .. }, Setting::Hypergraph { n, .. }) => n as usize,
            (Objects::Perms { perms, .. }, _) => {
                let n = perms[0].n();
                n * n
            }
            (Objects::Spaces { lines, .. }, _) => lines.len(),
            _ => unreachable!(),
        }
    }

    pub fn full_core(&self) -> CoreMask {
        let u = self.core_universe();
        match &self.objects {
            Objects::Edges { .. } | Objects::Perms { .. } => {
                CoreMask::Small(if u == 64 { u64::MAX } else { (1u64 << u) - 1 })
            }
            Objects::Spaces { .. } => CoreMask::Big(BitSet::full(u)),
        }
    }

    /// Core elements carried by one member (its vertices / pairs / lines).
    pub fn member_core(&self, i: usize) -> CoreMask {
        match &self.objects {
            Objects::Edges { masks } => CoreMask::Small(masks[i] as u64),
            Objects::Perms { pair_masks, .. } => CoreMask::Small(pair_masks[i]),
            Objects::Spaces { line_sets, .. } => CoreMask::Big(line_sets[i].clone()),
        }
    }

    /// Does member `i` carry core element `e`?
    pub fn member_has_core_element(&self, i: usize, e: usize) -> bool {
        match &self.objects {
            Objects::Edges { masks } => masks[i] as u64 >> e & 1 == 1,
            Objects::Perms { pair_masks, .. } => pair_masks[i] >> e & 1 == 1,
            Objects::Spaces { line_sets, .. } => line_sets[i].contains(e),
        }
    }

    pub fn empty_family(&self) -> Family {
        Family::empty(self.setting, self.size())
    }

    pub fn family_from_ranks(&self, ranks: impl IntoIterator<Item = usize>) -> Family {
        Family::from_ranks(self.setting, self.size(), ranks)
    }

    fn check_family(&self, f: &Family) -> Result<()> {
        if f.setting != self.setting || f.members.len() != self.size() {
            return Err(invalid("family does not belong to this ground set"));
        }
        Ok(())
    }

    /// The closure operator `I(F)`: every ground object agreeing at least `t`
    /// with every member of `F`.  `closure(∅)` is the full ground set.
    pub fn closure(&self, f: &Family) -> Result<Family> {
        self.check_family(f)?;
        let members: Vec<usize> = f.members.to_vec();
        let mut out = BitSet::new(self.size());
        'obj: for g in 0..self.size() {
            for &m in &members {
                if !self.agrees(g, m) {
                    continue 'obj;
                }
            }
            out.insert(g);
        }
        Ok(Family {
            setting: self.setting,
            members: out,
        })
    }

    /// `F` is intersecting iff `F ⊆ I(F)`, equivalently all pairs agree.
    pub fn is_intersecting(&self, f: &Family) -> Result<bool> {
        self.check_family(f)?;
        let members: Vec<usize> = f.members.to_vec();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if !self.agrees(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `F` is maximal iff `F = I(F)`.
    pub fn is_maximal(&self, f: &Family) -> Result<bool> {
        Ok(self.closure(f)?.members == f.members)
    }

    /// The common core of all members: full universe for the empty family.
    pub fn common_core(&self, f: &Family) -> Result<CoreMask> {
        self.check_family(f)?;
        let mut core = self.full_core();
        for m in f.members.ones() {
            core.intersect_with(&self.member_core(m));
        }
        Ok(core)
    }

    /// Trivial means some `t` core elements are shared by every member
    /// (a `t`-set of vertices, `t` index→value pairs, or a line).  The empty
    /// family is trivial by convention.
    pub fn is_trivial(&self, f: &Family) -> Result<bool> {
        Ok(self.common_core(f)?.count() >= self.threshold())
    }

    /// Greedy maximal completion: add every compatible object in rank order.
    /// The seed must be intersecting; the result is a maximal family
    /// containing it.
    pub fn complete_maximal(&self, seed: &Family) -> Result<Family> {
        if !self.is_intersecting(seed)? {
            return Err(invalid("complete_maximal requires an intersecting seed"));
        }
        let mut members: Vec<usize> = seed.members.to_vec();
        let mut set = seed.members.clone();
        for g in 0..self.size() {
            if set.contains(g) {
                continue;
            }
            if members.iter().all(|&m| self.agrees(g, m)) {
                members.push(g);
                set.insert(g);
            }
        }
        Ok(Family {
            setting: self.setting,
            members: set,
        })
    }
}

/// A minimal generating set of a maximal family, with the per-generator
/// witnesses certifying minimality: witness `G_i` agrees at least `t` with
/// every generator except exactly the `i`-th.
#[derive(Debug, Clone)]
pub struct GeneratingSet {
    pub family: Family,
    /// Generator ranks, ascending.
    pub generators: Vec<usize>,
    /// `witnesses[i]` lies in `I(generators \ {generators[i]}) \ family`.
    pub witnesses: Vec<usize>,
}

impl GeneratingSet {
    pub fn generators_family(&self, ground: &Ground) -> Family {
        ground.family_from_ranks(self.generators.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Minimal generating set by greedy removal in rank order: scan members and
/// drop any whose removal keeps the closure equal to the family.  Yields *a*
/// minimal (not minimum) set.
pub fn minimal_generating_set(ground: &Ground, f: &Family) -> Result<GeneratingSet> {
    if !ground.is_maximal(f)? {
        return Err(invalid("minimal_generating_set requires a maximal family"));
    }
    let mut gens: Vec<usize> = f.members.to_vec();
    let mut i = 0;
    while i < gens.len() {
        let mut trial = gens.clone();
        trial.remove(i);
        let cl = ground.closure(&ground.family_from_ranks(trial.iter().copied()))?;
        if cl.members == f.members {
            gens.remove(i);
        } else {
            i += 1;
        }
    }

    let mut witnesses = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        let cl = ground.closure(&ground.family_from_ranks(rest.iter().copied()))?;
        let mut extra = cl.members;
        extra.difference_with(&f.members);
        let w = extra
            .first_one()
            .expect("minimality guarantees a witness outside the family");
        witnesses.push(w);
    }

    Ok(GeneratingSet {
        family: f.clone(),
        generators: gens,
        witnesses,
    })
}

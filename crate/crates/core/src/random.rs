//! Sparse random analogues: p-random ground subsets, exact
//! largest-intersecting-subfamily analysis, and Monte Carlo orchestration.
//!
//! Randomness is counter-based and keyed per object, so outcomes depend only
//! on `(seed, parameters)` and never on iteration order or thread schedule.

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::enumeration::{extremal_report, ConflictGraph};
use crate::error::{invalid, Result};
use crate::intersection::Ground;
use crate::setting::Family;
use rayon::prelude::*;
use std::collections::HashMap;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform variate in `[0,1)` keyed on `(seed, object rank)`.
fn object_uniform(seed: u64, rank: u64) -> f64 {
    let h = splitmix64(seed ^ splitmix64(rank.wrapping_add(0x51A5_3D1E_D546_32C1)));
    (h >> 11) as f64 / (1u64 << 53) as f64
}

/// Seed for one trial, derived from the master seed and trial index.
pub fn trial_seed(master_seed: u64, trial: u64) -> u64 {
    splitmix64(master_seed ^ splitmix64(trial.wrapping_add(0xA076_1D64_78BD_642F)))
}

/// p-random ground subset: each object included independently with
/// probability `p`.
pub fn sample(ground: &Ground, p: f64, seed: u64) -> Result<Family> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("sampling probability must lie in [0,1], got {p}")));
    }
    let mut members = BitSet::new(ground.size());
    for rank in 0..ground.size() {
        if object_uniform(seed, rank as u64) < p {
            members.insert(rank);
        }
    }
    Ok(Family {
        setting: ground.setting(),
        members,
    })
}

/// One Monte Carlo sample outcome.
#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub seed: u64,
    pub sample_size: usize,
    /// Exact largest intersecting subfamily size within the sample.
    pub max_size: usize,
    /// True iff every maximum intersecting subfamily is trivial.
    pub every_max_trivial: bool,
    /// A maximum family; non-trivial if any maximum family is.
    pub witness: Family,
}

/// Exact analysis of the largest intersecting subfamilies of a sample.
pub fn largest_in_sample(
    ground: &Ground,
    cg: &ConflictGraph,
    sample: &Family,
    seed: u64,
    budget: &Budget,
) -> Result<TrialOutcome> {
    if sample.setting != ground.setting() {
        return Err(invalid("sample does not belong to this ground set"));
    }
    let report = extremal_report(ground, cg, Some(&sample.members), budget)?;
    let witness = Family {
        setting: ground.setting(),
        members: report.witness_max.clone(),
    };
    debug_assert_eq!(witness.size(), report.max_size);
    debug_assert!(ground.is_intersecting(&witness)?);
    Ok(TrialOutcome {
        seed,
        sample_size: sample.size(),
        max_size: report.max_size,
        every_max_trivial: report.every_max_trivial,
        witness,
    })
}

/// Aggregated Monte Carlo result.
#[derive(Debug, Clone)]
pub struct ExperimentSummary {
    pub trials: u64,
    pub p: f64,
    /// Fraction of trials in which every maximum family was trivial.
    pub empirical_probability: f64,
    /// Two-sided 95% Hoeffding radius `sqrt(ln(2/0.05) / (2 trials))`.
    pub confidence_radius: f64,
    pub mean_sample_size: f64,
    pub mean_max_size: f64,
}

/// Run `trials` independent p-random samples and report how often every
/// maximum intersecting subfamily is trivial.  Identical samples are solved
/// once; trials are distributed over the rayon pool, and results are exact
/// counts, so summaries are bit-identical across thread counts.
pub fn monte_carlo(
    ground: &Ground,
    cg: &ConflictGraph,
    p: f64,
    trials: u64,
    master_seed: u64,
    budget: &Budget,
) -> Result<ExperimentSummary> {
    if trials == 0 {
        return Err(invalid("at least one trial is required"));
    }
    let samples: Vec<Family> = (0..trials)
        .map(|i| sample(ground, p, trial_seed(master_seed, i)))
        .collect::<Result<_>>()?;

    // dedup identical samples so repeated solves are free
    let mut unique: Vec<&BitSet> = Vec::new();
    let mut index_of: HashMap<&BitSet, usize> = HashMap::new();
    let mut assignment = Vec::with_capacity(samples.len());
    for s in &samples {
        let idx = *index_of.entry(&s.members).or_insert_with(|| {
            unique.push(&s.members);
            unique.len() - 1
        });
        assignment.push(idx);
    }

    let solved: Vec<Result<(usize, bool)>> = unique
        .par_iter()
        .map(|members| {
            let fam = Family {
                setting: ground.setting(),
                members: (*members).clone(),
            };
            let out = largest_in_sample(ground, cg, &fam, 0, budget)?;
            Ok((out.max_size, out.every_max_trivial))
        })
        .collect();
    let solved: Vec<(usize, bool)> = solved.into_iter().collect::<Result<_>>()?;

    let mut trivial_hits = 0u64;
    let mut total_max = 0u64;
    let mut total_sample = 0u64;
    for (i, s) in samples.iter().enumerate() {
        let (max_size, trivial) = solved[assignment[i]];
        if trivial {
            trivial_hits += 1;
        }
        total_max += max_size as u64;
        total_sample += s.size() as u64;
    }

    Ok(ExperimentSummary {
        trials,
        p,
        empirical_probability: trivial_hits as f64 / trials as f64,
        confidence_radius: ((2.0f64 / 0.05).ln() / (2.0 * trials as f64)).sqrt(),
        mean_sample_size: total_sample as f64 / trials as f64,
        mean_max_size: total_max as f64 / trials as f64,
    })
}

/// One summary per probability in the grid, with per-grid-point seed
/// streams derived from `(master_seed, grid index)`.
pub fn sweep(
    ground: &Ground,
    cg: &ConflictGraph,
    p_grid: &[f64],
    trials: u64,
    master_seed: u64,
    budget: &Budget,
) -> Result<Vec<ExperimentSummary>> {
    p_grid
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let seed = splitmix64(master_seed ^ splitmix64(0x5EED_0000 + i as u64));
            monte_carlo(ground, cg, p, trials, seed, budget)
        })
        .collect()
}

//! Kneser-graph machinery: closed-form and numeric spectrum, expander
//! mixing, supersaturation, container parameters and a working greedy
//! fingerprint container builder.

use crate::bitset::BitSet;
use crate::budget::Budget;
use crate::combinatorics::{binomial, binomial_f64};
use crate::enumeration::{enumerate_maximal, ConflictGraph};
use crate::error::{invalid, Error, Result};
use crate::intersection::Ground;
use crate::setting::Setting;
use num_traits::ToPrimitive;

/// Numeric eigensolver cap: dense methods are trivially sufficient below
/// this size.
pub const MAX_NUMERIC_VERTICES: u64 = 500;

/// Kneser graph `KG(n,k)` as the conflict graph of `hypergraph(n,k,1)`.
pub fn kneser_graph(n: u32, k: u32, budget: &Budget) -> Result<ConflictGraph> {
    let ground = Ground::new(Setting::hypergraph(n, k, 1)?)?;
    ConflictGraph::build(&ground, budget)
}

#[derive(Debug, Clone)]
pub struct SpectralReport {
    /// `N = C(n,k)` vertices.
    pub n_vertices: u64,
    /// Regular degree `D = C(n-k,k)`.
    pub degree: u64,
    /// Closed-form minimum eigenvalue `-C(n-k-1,k-1)`.
    pub lambda_min_closed: i64,
    /// Minimum eigenvalue of the adjacency matrix by cyclic Jacobi sweeps.
    pub lambda_min_numeric: f64,
}

fn require_kneser_range(n: u32, k: u32) -> Result<()> {
    if k < 2 || n < 2 * k {
        return Err(invalid(format!(
            "Kneser spectral range requires 2 <= k <= n/2, got n={n} k={k}"
        )));
    }
    Ok(())
}

/// Closed-form spectrum data plus a numeric cross-check of the minimum
/// eigenvalue (requires `C(n,k) <= 500`).
pub fn spectral_report(n: u32, k: u32, budget: &Budget) -> Result<SpectralReport> {
    require_kneser_range(n, k)?;
    let n_vertices = binomial(n as u64, k as i64)
        .to_u64()
        .filter(|&c| c <= MAX_NUMERIC_VERTICES)
        .ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "numeric eigensolver cap is C(n,k) <= {MAX_NUMERIC_VERTICES}"
            ))
        })?;
    let degree = binomial((n - k) as u64, k as i64).to_u64().unwrap();
    let lambda_min_closed = -(binomial((n - k - 1) as u64, k as i64 - 1)
        .to_i64()
        .unwrap());

    let cg = kneser_graph(n, k, budget)?;
    let nv = cg.n_vertices();
    let mut a = vec![vec![0.0f64; nv]; nv];
    for v in 0..nv {
        for u in cg.adj(v).ones() {
            a[v][u] = 1.0;
        }
    }
    let eigenvalues = jacobi_eigenvalues(&mut a, budget)?;
    let lambda_min_numeric = eigenvalues.into_iter().fold(f64::INFINITY, f64::min);

    Ok(SpectralReport {
        n_vertices,
        degree,
        lambda_min_closed,
        lambda_min_numeric,
    })
}

/// Cyclic Jacobi sweeps on a symmetric matrix until the off-diagonal mass
/// falls below `1e-12` of the matrix scale.  Returns the diagonal.
pub fn jacobi_eigenvalues(a: &mut [Vec<f64>], budget: &Budget) -> Result<Vec<f64>> {
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    for _sweep in 0..200 {
        budget.tick("jacobi sweep")?;
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-12 * scale {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p][i];
                    let aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    Err(Error::BudgetExceeded(
        "jacobi sweeps did not converge within 200 iterations".into(),
    ))
}

/// Expander-mixing lower bound on induced edges:
/// `D|S|^2/(2N) + λ|S|(N-|S|)/(2N)` with the closed-form `λ`.
pub fn mixing_lower_bound(n: u32, k: u32, s_size: usize) -> Result<f64> {
    require_kneser_range(n, k)?;
    let big_n = binomial_f64(n as u64, k as i64);
    let d = binomial_f64((n - k) as u64, k as i64);
    let lambda = -binomial_f64((n - k - 1) as u64, k as i64 - 1);
    let s = s_size as f64;
    Ok(d * s * s / (2.0 * big_n) + lambda * s * (big_n - s) / (2.0 * big_n))
}

/// Supersaturation guarantee for vertex sets of size `s >= (1+ε)C(n-1,k-1)`:
/// at least `(1 - 1/(1+ε)) * Dn/(N(n-k)) * C(s,2)` induced edges.
pub fn supersaturation_bound(n: u32, k: u32, epsilon: f64, s: u64) -> Result<f64> {
    require_kneser_range(n, k)?;
    if epsilon <= 0.0 {
        return Err(invalid("supersaturation requires epsilon > 0"));
    }
    let threshold = (1.0 + epsilon) * binomial_f64((n - 1) as u64, k as i64 - 1);
    if (s as f64) < threshold {
        return Err(invalid(format!(
            "supersaturation requires |S| >= (1+eps)C(n-1,k-1) = {threshold}, got {s}"
        )));
    }
    Ok(supersaturation_beta(n, k, epsilon) * binomial_f64(s, 2))
}

fn supersaturation_beta(n: u32, k: u32, epsilon: f64) -> f64 {
    let big_n = binomial_f64(n as u64, k as i64);
    let d = binomial_f64((n - k) as u64, k as i64);
    (1.0 - 1.0 / (1.0 + epsilon)) * d * n as f64 / (big_n * (n - k) as f64)
}

/// Container parameters: `R = (1+ε)C(n-1,k-1)`, the supersaturation density
/// `β`, and the fingerprint budget `ℓ = ln(N/R)/β`, so that
/// `e^{-βℓ} N = R` holds by construction.
#[derive(Debug, Clone)]
pub struct ContainerParams {
    pub epsilon: f64,
    pub big_r: f64,
    pub beta: f64,
    pub ell: f64,
    /// Set when ε exceeds the proof's 1/20 cap (still usable at demo scale).
    pub epsilon_above_proof_cap: bool,
}

pub fn container_params(n: u32, k: u32, epsilon: f64) -> Result<ContainerParams> {
    if k < 2 || 2 * k + 1 > n {
        return Err(invalid(format!(
            "container range requires 2 <= k <= (n-1)/2, got n={n} k={k}"
        )));
    }
    if epsilon <= 0.0 || epsilon > 0.5 {
        return Err(invalid("epsilon must lie in (0, 1/2]"));
    }
    let big_n = binomial_f64(n as u64, k as i64);
    let big_r = (1.0 + epsilon) * binomial_f64((n - 1) as u64, k as i64 - 1);
    let beta = supersaturation_beta(n, k, epsilon);
    let ell = (big_n / big_r).ln() / beta;
    Ok(ContainerParams {
        epsilon,
        big_r,
        beta,
        ell,
        epsilon_above_proof_cap: epsilon > 1.0 / 20.0,
    })
}

/// Containers for all independent sets of `KG(n,k)`.
#[derive(Debug, Clone)]
pub struct ContainerSet {
    pub params: ContainerParams,
    /// Deduplicated containers, one secured per maximal independent set.
    pub containers: Vec<BitSet>,
    /// Fingerprint size cap `⌈ℓ⌉`.
    pub fingerprint_size_cap: usize,
}

impl ContainerSet {
    pub fn max_container_size(&self) -> usize {
        self.containers.iter().map(|c| c.count()).max().unwrap_or(0)
    }

    pub fn covers(&self, independent: &BitSet) -> bool {
        self.containers.iter().any(|c| independent.is_subset(c))
    }
}

/// Derive the container of one independent set by the greedy fingerprint
/// rule: repeatedly move the maximum-degree surviving vertex of `I` (ties:
/// lowest rank) into the fingerprint and delete its neighbourhood; stop once
/// fewer than `R` vertices survive or the fingerprint is full.  When `I` is
/// exhausted first, the survivor set is pruned by the same max-degree rule,
/// which cannot touch `I` and keeps the size contract.
pub fn container_of(cg: &ConflictGraph, params: &ContainerParams, independent: &BitSet) -> BitSet {
    let n = cg.n_vertices();
    let cap = params.ell.ceil() as usize;
    let mut survivors = BitSet::full(n);
    let mut fingerprint: Vec<usize> = Vec::new();
    loop {
        if (survivors.count() as f64) < params.big_r {
            break;
        }
        if fingerprint.len() >= cap {
            break;
        }
        let mut in_i = survivors.clone();
        in_i.intersect_with(independent);
        let pick = in_i
            .ones()
            .map(|v| (cg.adj(v).intersection_count(&survivors), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v);
        match pick {
            Some(v) => {
                fingerprint.push(v);
                survivors.remove(v);
                survivors.difference_with(cg.adj(v));
            }
            None => {
                // independent set fully captured; safe to prune survivors
                while (survivors.count() as f64) >= params.big_r {
                    let v = survivors
                        .ones()
                        .map(|v| (cg.adj(v).intersection_count(&survivors), v))
                        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                        .map(|(_, v)| v)
                        .expect("survivors nonempty while >= R");
                    survivors.remove(v);
                }
                break;
            }
        }
    }
    let mut container = survivors;
    for v in fingerprint {
        container.insert(v);
    }
    container
}

/// Build the container set for `KG(n,k)`: one container per maximal
/// independent set, deduplicated.  Every independent set is a subset of a
/// maximal one and hence of some container.
pub fn build_containers(n: u32, k: u32, epsilon: f64, budget: &Budget) -> Result<ContainerSet> {
    let params = container_params(n, k, epsilon)?;
    let cg = kneser_graph(n, k, budget)?;
    let maximal = enumerate_maximal(&cg, None, budget)?;
    let mut containers: Vec<BitSet> = Vec::new();
    for m in &maximal {
        budget.tick("container derivation")?;
        let c = container_of(&cg, &params, m);
        debug_assert!(m.is_subset(&c), "independent set must lie in its container");
        if !containers.contains(&c) {
            containers.push(c);
        }
    }
    Ok(ContainerSet {
        fingerprint_size_cap: params.ell.ceil() as usize,
        params,
        containers,
    })
}

/// Container-method upper bound on `log2 I(n,k)`:
/// `R + ℓ log2(2e C(n,k) / ℓ)`.
pub fn log_count_upper(n: u32, k: u32, epsilon: f64) -> Result<f64> {
    if n < 2 * k + 1 {
        return Err(invalid("log_count_upper requires n >= 2k+1"));
    }
    let p = container_params(n, k, epsilon)?;
    let big_n = binomial_f64(n as u64, k as i64);
    Ok(p.big_r + p.ell * (2.0 * std::f64::consts::E * big_n / p.ell).log2())
}

/// Star lower bound `log2 I(n,k) >= C(n-1,k-1)` (a maximum star has
/// `C(n-1,k-1)` members and all its subsets are intersecting).
pub fn log_count_lower(n: u32, k: u32) -> f64 {
    binomial_f64((n - 1) as u64, k as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectral_closed_forms() {
        let b = Budget::unlimited();
        let r = spectral_report(5, 2, &b).unwrap();
        assert_eq!((r.n_vertices, r.degree, r.lambda_min_closed), (10, 3, -2));
        assert!((r.lambda_min_numeric - (-2.0)).abs() < 1e-9);

        let r = spectral_report(7, 3, &b).unwrap();
        assert_eq!((r.n_vertices, r.degree, r.lambda_min_closed), (35, 4, -3));
        assert!((r.lambda_min_numeric - (-3.0)).abs() < 1e-9);

        for k in [2u32, 3] {
            let r = spectral_report(2 * k, k, &b).unwrap();
            assert_eq!(r.lambda_min_closed, -1);
            assert!((r.lambda_min_numeric + 1.0).abs() < 1e-9);
        }

        assert!(spectral_report(40, 10, &b).is_err(), "numeric cap");
        assert!(spectral_report(5, 1, &b).is_err());
    }

    #[test]
    fn mixing_bound_edges() {
        let b = Budget::unlimited();
        let cg = kneser_graph(5, 2, &b).unwrap();
        // full vertex set: bound is exactly D*N/2 = e(G)
        let full = BitSet::full(10);
        let bound = mixing_lower_bound(5, 2, 10).unwrap();
        assert!((bound - 15.0).abs() < 1e-12);
        assert_eq!(cg.induced_edges(&full), 15);
        // a star is independent: zero induced edges, bound <= 0
        let ground = Ground::new(Setting::hypergraph(5, 2, 1).unwrap()).unwrap();
        let star: Vec<usize> = (0..10)
            .filter(|&r| ground.edge_mask(r).unwrap() & 1 == 1)
            .collect();
        let s = BitSet::from_indices(10, star);
        assert_eq!(cg.induced_edges(&s), 0);
        assert!(mixing_lower_bound(5, 2, s.count()).unwrap() <= 0.0);
    }

    #[test]
    fn supersaturation_examples() {
        // (7,3, eps=0.5, s=23): beta = 1/15
        let beta = supersaturation_beta(7, 3, 0.5);
        assert!((beta - 1.0 / 15.0).abs() < 1e-12);
        let bound = supersaturation_bound(7, 3, 0.5, 23).unwrap();
        assert!((bound - 253.0 / 15.0).abs() < 1e-12);
        // below threshold rejected
        assert!(supersaturation_bound(7, 3, 0.5, 22).is_err());
        // s = N: bound stays below the true edge count ND/2 = 70
        let bound = supersaturation_bound(7, 3, 0.5, 35).unwrap();
        assert!(bound <= 70.0);
    }

    #[test]
    fn container_parameter_identity() {
        let p = container_params(7, 3, 0.5).unwrap();
        assert!((p.big_r - 22.5).abs() < 1e-12);
        assert!((p.beta - 1.0 / 15.0).abs() < 1e-12);
        assert!((p.ell - 15.0 * (35.0f64 / 22.5).ln()).abs() < 1e-9);
        // e^{-beta*ell} * N = R to 1e-12 relative
        let lhs = (-p.beta * p.ell).exp() * 35.0;
        assert!((lhs - p.big_r).abs() <= 1e-12 * p.big_r);
        assert!(p.epsilon_above_proof_cap);
        assert!(container_params(7, 3, 0.0).is_err());
        assert!(container_params(7, 3, 0.6).is_err());
        assert!(container_params(6, 3, 0.1).is_err());
        // finite positive ell along the tight diagonal n = 2k+1
        for k in 2..=6u32 {
            let p = container_params(2 * k + 1, k, 0.05).unwrap();
            assert!(p.ell.is_finite() && p.ell > 0.0);
            assert!(!p.epsilon_above_proof_cap);
        }
    }

    #[test]
    fn log_count_bound_needs_strict_kneser_range() {
        assert!(log_count_upper(6, 3, 0.1).is_err(), "n = 2k is excluded");
        assert!(log_count_upper(7, 3, 0.1).is_ok());
    }

    #[test]
    fn containers_cover_and_respect_size() {
        let b = Budget::unlimited();
        let set = build_containers(7, 3, 0.5, &b).unwrap();
        let limit = set.params.big_r + set.params.ell;
        assert!(set.max_container_size() as f64 <= limit);
        let cg = kneser_graph(7, 3, &b).unwrap();
        let maximal = enumerate_maximal(&cg, None, &b).unwrap();
        for m in &maximal {
            assert!(set.covers(m));
        }
        // far fewer containers than the C(35,7) certificate bound
        assert!(set.containers.len() < 6_724_520);
    }
}

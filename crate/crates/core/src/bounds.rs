//! Closed-form quantities as pure calculators: the largest trivial size
//! `N0`, the stability value `N1`, the pairwise-overlap cap `N2`, the
//! maximal-trivial count `T`, the set-pairs cap on maximal families
//! `log2 M`, the `η` table, thresholds, and the condition evaluators.
//!
//! All `log` here is base 2 and `ln` natural.  Quantities that are only
//! meaningful asymptotically (the permutation stability value) are flagged
//! and never asserted exact.

use crate::combinatorics::{
    binomial, binomial_f64, factorial, gaussian_binomial, log2_big, power, two_pow_checked,
    BigCount,
};
use crate::error::{invalid, Result};
use crate::setting::Setting;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Closed-form report for one parameter choice.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub setting: Setting,
    /// Size of a maximal trivial family.
    pub n0: BigCount,
    /// Largest possible overlap of two distinct maximal trivial families.
    pub n2: BigCount,
    /// Number of maximal trivial families.
    pub t_count: BigCount,
    /// Exact largest non-trivial family size where a stability theorem
    /// pins it (hypergraphs in range; subspaces in range).
    pub n1_exact: Option<BigCount>,
    /// Real upper estimate on `N1` (hypergraph: `N0 - C(n-k-1,k-t)/n + n`).
    pub n1_upper: Option<f64>,
    /// Asymptotic-only `N1` reference, `(1 - 1/e)(n-t)!` for permutations;
    /// carries `o(1)` slack and is never asserted exact.
    pub n1_asymptotic: Option<f64>,
    /// `log2` upper bound on the number of maximal intersecting families.
    pub log_m_upper: f64,
    /// `η_{k,t}` (hypergraphs only).
    pub eta: Option<f64>,
    /// EKR threshold `(t+1)(k-t+1)` (hypergraphs only).
    pub ekr_threshold: Option<u64>,
    /// `log M + N1 - N0`; `None` when no `N1` value is available.
    pub cond_allsizes: Option<f64>,
    /// True when `cond_allsizes` used the asymptotic `N1` reference.
    pub cond_allsizes_asymptotic: bool,
    /// `2 log T + N2 - N0`.
    pub cond_union: f64,
    /// Candidate non-trivial family sizes (hypergraphs): `|H1|`, `|H2|`.
    pub h1_size: Option<BigCount>,
    pub h2_size: Option<BigCount>,
    /// Sparse-random threshold `800 n 2^{2n-2t} log n / (n-t)!`
    /// (permutations only; may exceed 1, flagged by the caller).
    pub random_threshold_p: Option<f64>,
}

impl BoundsReport {
    fn n1_as_f64(&self) -> Option<(f64, bool)> {
        if let Some(n1) = &self.n1_exact {
            return Some((big_f64(n1), false));
        }
        self.n1_asymptotic.map(|v| (v, true))
    }

    /// `log M - m log2(N0 / N1)`, the fixed-size condition.
    pub fn cond_fixedsize(&self, m: f64) -> Option<f64> {
        let (n1, _) = self.n1_as_f64()?;
        let n0 = big_f64(&self.n0);
        Some(self.log_m_upper - m * (n0 / n1).log2())
    }
}

fn big_f64(x: &BigCount) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

fn finish_conditions(mut report: BoundsReport) -> BoundsReport {
    let n0 = big_f64(&report.n0);
    let n2 = big_f64(&report.n2);
    report.cond_union = 2.0 * log2_big(&report.t_count) + n2 - n0;
    if let Some((n1, asymptotic)) = report.n1_as_f64() {
        report.cond_allsizes = Some(report.log_m_upper + n1 - n0);
        report.cond_allsizes_asymptotic = asymptotic;
    }
    report
}

/// `η_{k,t}` from the five-case table.
pub fn eta(k: u64, t: u64) -> Result<f64> {
    if t == 0 || t >= k {
        return Err(invalid(format!("eta requires 1 <= t < k, got k={k} t={t}")));
    }
    let lnk = (k as f64).ln();
    Ok(match (t, k - t) {
        (1, _) => k as f64 + 8.0 * lnk,
        (2, d) if d >= 3 => 12.0 * lnk,
        (_, d) if d >= 3 => 1.0, // t >= 3
        (_, 2) => 31.0,
        (_, 1) => 18.0 * k as f64,
        _ => unreachable!("cases are exhaustive for 1 <= t < k"),
    })
}

/// Bounds report for `t`-intersecting `k`-uniform hypergraphs on `[n]`.
pub fn hypergraph_bounds(n: u32, k: u32, t: u32) -> Result<BoundsReport> {
    if !(1 <= t && t < k && k < n) {
        return Err(invalid(format!(
            "hypergraph bounds require 1 <= t < k < n, got n={n} k={k} t={t}"
        )));
    }
    let (nu, ku, tu) = (n as u64, k as u64, t as u64);
    let n0 = binomial(nu - tu, (ku - tu) as i64);
    let n2 = binomial(nu - tu - 1, (ku - tu) as i64 - 1);
    let t_count = binomial(nu, tu as i64);

    let h1 = crate::hypergraph::h1_size(n, k, t);
    let h2 = crate::hypergraph::h2_size(n, k, t);
    let n1_exact = if k <= 2 * t + 1 {
        h1.clone()
    } else {
        h1.clone().max(h2.clone())
    };
    let n1_upper = big_f64(&n0) - binomial_f64(nu.saturating_sub(ku + 1), (ku - tu) as i64) / n as f64
        + n as f64;

    let genset_cap = binomial(2 * (ku - tu) + 1, (ku - tu) as i64);
    let log_m_upper = big_f64(&genset_cap) * log2_big(&binomial(nu, ku as i64));

    Ok(finish_conditions(BoundsReport {
        setting: Setting::Hypergraph { n, k, t },
        n0,
        n2,
        t_count,
        n1_exact: Some(n1_exact),
        n1_upper: Some(n1_upper),
        n1_asymptotic: None,
        log_m_upper,
        eta: Some(eta(ku, tu)?),
        ekr_threshold: Some((tu + 1) * (ku - tu + 1)),
        cond_allsizes: None,
        cond_allsizes_asymptotic: false,
        cond_union: 0.0,
        h1_size: Some(h1),
        h2_size: Some(h2),
        random_threshold_p: None,
    }))
}

/// Bounds report for `t`-intersecting permutation families in `S_n`.
pub fn permutation_bounds(n: u32, t: u32) -> Result<BoundsReport> {
    if !(1 <= t && t < n) {
        return Err(invalid(format!(
            "permutation bounds require 1 <= t < n, got n={n} t={t}"
        )));
    }
    let (nu, tu) = (n as u64, t as u64);
    let n0 = factorial(nu - tu);
    let n2 = factorial(nu - tu - 1);
    let choose = binomial(nu, tu as i64);
    let t_count = &choose * &choose * factorial(tu);

    let genset_cap = binomial(2 * nu - 2 * tu + 2, (nu - tu) as i64 + 1) / BigCount::from(2u32);
    let log_m_upper = big_f64(&genset_cap) * log2_big(&factorial(nu));

    let n1_asymptotic = (1.0 - (-1.0f64).exp()) * big_f64(&n0);
    let threshold = 800.0 * n as f64 * 2f64.powi((2 * n - 2 * t) as i32) * (n as f64).log2()
        / big_f64(&n0);

    Ok(finish_conditions(BoundsReport {
        setting: Setting::Permutation { n, t },
        n0,
        n2,
        t_count,
        n1_exact: None,
        n1_upper: None,
        n1_asymptotic: Some(n1_asymptotic),
        log_m_upper,
        eta: None,
        ekr_threshold: None,
        cond_allsizes: None,
        cond_allsizes_asymptotic: false,
        cond_union: 0.0,
        h1_size: None,
        h2_size: None,
        random_threshold_p: Some(threshold),
    }))
}

/// Bounds report for intersecting `k`-dimensional subspaces of `F_q^n`.
pub fn subspace_bounds(n: u32, k: u32, q: u32) -> Result<BoundsReport> {
    if k < 2 || k >= n {
        return Err(invalid(format!(
            "subspace bounds require 2 <= k < n, got n={n} k={k}"
        )));
    }
    if !crate::combinatorics::is_prime(q as u64) {
        return Err(invalid(format!("subspace bounds require prime q, got {q}")));
    }
    let (ni, ki, qu) = (n as i64, k as i64, q as u64);
    let n0 = gaussian_binomial(ni - 1, ki - 1, qu)?;
    let n2 = gaussian_binomial(ni - 2, ki - 2, qu)?;
    let t_count = gaussian_binomial(ni, 1, qu)?;

    // stability value valid for q >= 3, n >= 2k+1 or q = 2, n >= 2k+2
    let n1_exact = if (q >= 3 && n >= 2 * k + 1) || (q == 2 && n >= 2 * k + 2) {
        let raw = BigInt::from(n0.clone())
            - BigInt::from(power(qu, (k as u64) * (k as u64 - 1)))
                * BigInt::from(gaussian_binomial(ni - ki - 1, ki - 1, qu)?)
            + BigInt::from(power(qu, k as u64));
        if raw.is_negative() {
            return Err(invalid("internal: subspace N1 formula went negative in range"));
        }
        Some(raw.to_biguint().unwrap())
    } else {
        None
    };

    let genset_cap = binomial(2 * k as u64 - 1, k as i64 - 1);
    let log_m_upper = big_f64(&genset_cap) * log2_big(&gaussian_binomial(ni, ki, qu)?);

    Ok(finish_conditions(BoundsReport {
        setting: Setting::Subspace { n, k, q },
        n0,
        n2,
        t_count,
        n1_exact,
        n1_upper: None,
        n1_asymptotic: None,
        log_m_upper,
        eta: None,
        ekr_threshold: None,
        cond_allsizes: None,
        cond_allsizes_asymptotic: false,
        cond_union: 0.0,
        h1_size: None,
        h2_size: None,
        random_threshold_p: None,
    }))
}

/// Sparse-random hypergraph threshold
/// `p0(n,k) = 9 n log2(ne/k) C(2k,k) C(n,k) / C(n-k,k)^2`.
pub fn p0_hypergraph(n: u32, k: u32) -> Result<f64> {
    if k < 3 || 4 * k > n {
        return Err(invalid(format!("p0 requires 3 <= k <= n/4, got n={n} k={k}")));
    }
    let (nu, ki) = (n as u64, k as i64);
    let log2val = (9.0 * n as f64 * (n as f64 * std::f64::consts::E / k as f64).log2()).log2()
        + log2_big(&binomial(2 * k as u64, ki))
        + log2_big(&binomial(nu, ki))
        - 2.0 * log2_big(&binomial(nu - k as u64, ki));
    Ok(log2val.exp2())
}

/// `τ = p C(n-k-1,k-1) / 3`, the margin used in the sparse hypergraph proof.
pub fn tau_hypergraph(n: u32, k: u32, p: f64) -> Result<f64> {
    if k < 1 || k + 1 >= n {
        return Err(invalid(format!("tau requires k + 1 < n, got n={n} k={k}")));
    }
    Ok(p * binomial_f64((n - k - 1) as u64, k as i64 - 1) / 3.0)
}

/// Two-sided Hoeffding tail bound `exp(-eps^2 mu / 2)`.
pub fn hoeffding_bound(mu: f64, epsilon: f64) -> Result<f64> {
    if mu < 0.0 || epsilon <= 0.0 {
        return Err(invalid("hoeffding bound requires mu >= 0 and epsilon > 0"));
    }
    Ok((-0.5 * epsilon * epsilon * mu).exp())
}

/// `log2` of the permutation union-bound term `(M + 1) exp(-p N1 / 200)`
/// with `M = n^{n 2^{2n-2t+1}}` and the asymptotic `N1` reference.
pub fn permutation_union_bound_log2(n: u32, t: u32, p: f64) -> Result<f64> {
    if !(1 <= t && t < n) {
        return Err(invalid("requires 1 <= t < n"));
    }
    let log_m = n as f64 * 2f64.powi((2 * n - 2 * t + 1) as i32) * (n as f64).log2();
    let n1 = (1.0 - (-1.0f64).exp()) * big_f64(&factorial((n - t) as u64));
    Ok(log_m - (p * n1 / 200.0) * std::f64::consts::LOG2_E)
}

/// Bonferroni sandwich on the trivial-family count:
/// `[T 2^{N0} - C(T,2) 2^{N2}, T 2^{N0}]`, lower clamped at zero.
pub fn bonferroni_window(
    t_count: &BigCount,
    n0: &BigCount,
    n2: &BigCount,
) -> Result<(BigCount, BigCount)> {
    if n2 > n0 {
        return Err(invalid("bonferroni window requires N2 <= N0"));
    }
    let upper = t_count * two_pow_checked(n0)?;
    let one = BigCount::from(1u32);
    let pairs = if t_count > &one {
        t_count * (t_count - &one) / BigCount::from(2u32)
    } else {
        BigCount::from(0u32)
    };
    let overlap = pairs * two_pow_checked(n2)?;
    let lower = if overlap >= upper {
        BigCount::from(0u32)
    } else {
        &upper - overlap
    };
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_table_five_cases() {
        assert_eq!(eta(6, 3).unwrap(), 1.0);
        assert!((eta(5, 1).unwrap() - (5.0 + 8.0 * 5f64.ln())).abs() < 1e-12);
        assert!((eta(7, 2).unwrap() - 12.0 * 7f64.ln()).abs() < 1e-12);
        assert_eq!(eta(5, 3).unwrap(), 31.0); // k - t = 2, t >= 2
        assert_eq!(eta(4, 3).unwrap(), 72.0); // k - t = 1, t >= 2
        assert!(eta(3, 3).is_err());
    }

    #[test]
    fn hypergraph_report_values() {
        let r = hypergraph_bounds(7, 3, 1).unwrap();
        assert_eq!(r.n0, BigCount::from(15u32));
        assert_eq!(r.n2, BigCount::from(5u32));
        assert_eq!(r.t_count, BigCount::from(7u32));
        assert_eq!(r.n1_exact, Some(BigCount::from(13u32)));
        assert_eq!(r.h1_size, Some(BigCount::from(13u32)));
        assert_eq!(r.h2_size, Some(BigCount::from(13u32)));
        assert_eq!(r.ekr_threshold, Some(6));

        let r = hypergraph_bounds(9, 3, 1).unwrap();
        assert_eq!(r.n1_exact, Some(BigCount::from(19u32)));

        assert!(hypergraph_bounds(7, 3, 3).is_err());
        assert!(hypergraph_bounds(3, 3, 1).is_err());
    }

    #[test]
    fn permutation_report_values() {
        let r = permutation_bounds(4, 1).unwrap();
        assert_eq!(r.n0, BigCount::from(6u32));
        assert_eq!(r.n2, BigCount::from(2u32));
        assert_eq!(r.t_count, BigCount::from(16u32));
        assert!(r.n1_exact.is_none());
        assert!(r.cond_allsizes_asymptotic);

        let r = permutation_bounds(6, 2).unwrap();
        assert_eq!(r.t_count, BigCount::from(450u32));

        // threshold formula exactly as written: 800*6*2^10*log2(6)/120
        let r = permutation_bounds(6, 1).unwrap();
        let expect = 800.0 * 6.0 * 1024.0 * 6f64.log2() / 120.0;
        let got = r.random_threshold_p.unwrap();
        assert!((got - expect).abs() < 1e-9 * expect);
        assert!(got.is_finite() && got > 0.0);
    }

    #[test]
    fn subspace_report_values() {
        let r = subspace_bounds(6, 2, 2).unwrap();
        assert_eq!(r.n0, BigCount::from(31u32));
        assert_eq!(r.t_count, BigCount::from(63u32));
        assert_eq!(r.n2, BigCount::from(1u32));

        let r = subspace_bounds(5, 2, 3).unwrap();
        assert_eq!(r.n1_exact, Some(BigCount::from(13u32)));

        // q = 2 needs n >= 2k + 2 for the stability value
        let r = subspace_bounds(5, 2, 2).unwrap();
        assert!(r.n1_exact.is_none());
        let r = subspace_bounds(6, 2, 2).unwrap();
        assert!(r.n1_exact.is_some());
    }

    #[test]
    fn p0_and_tau() {
        let p0 = p0_hypergraph(12, 3).unwrap();
        let expect = 9.0 * 12.0 * (12.0 * std::f64::consts::E / 3.0).log2() * 20.0 * 220.0 / 7056.0;
        assert!((p0 - expect).abs() <= 1e-6 * expect);
        assert!((p0 - 231.855).abs() < 1e-2);
        assert!(p0 > 1.0, "theorem regime unreachable at this n; caller flags");
        // monotone decreasing in n for fixed k over the valid sweep
        let mut prev = f64::INFINITY;
        for n in 12..=40u32 {
            let v = p0_hypergraph(n, 3).unwrap();
            assert!(v < prev, "p0 must decrease in n, failed at n={n}");
            prev = v;
        }
        assert!(p0_hypergraph(11, 3).is_err());
        assert!(p0_hypergraph(12, 2).is_err());

        let tau = tau_hypergraph(12, 3, 0.5).unwrap();
        assert!((tau - 0.5 * 28.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn hoeffding_examples() {
        assert!((hoeffding_bound(200.0, 0.1).unwrap() - (-1.0f64).exp()).abs() < 1e-12);
        assert_eq!(hoeffding_bound(0.0, 0.3).unwrap(), 1.0);
        assert!(hoeffding_bound(-1.0, 0.3).is_err());
        // the permutation union-bound term is a finite log2 value
        let v = permutation_union_bound_log2(6, 1, 0.5).unwrap();
        assert!(v.is_finite());
    }

    #[test]
    fn bonferroni_examples() {
        let (lo, hi) = bonferroni_window(
            &BigCount::from(5u32),
            &BigCount::from(4u32),
            &BigCount::from(1u32),
        )
        .unwrap();
        assert_eq!(lo, BigCount::from(60u32));
        assert_eq!(hi, BigCount::from(80u32));

        let (lo, hi) = bonferroni_window(
            &BigCount::from(1u32),
            &BigCount::from(9u32),
            &BigCount::from(3u32),
        )
        .unwrap();
        assert_eq!(lo, BigCount::from(512u32));
        assert_eq!(hi, BigCount::from(512u32));

        assert!(bonferroni_window(
            &BigCount::from(3u32),
            &BigCount::from(2u32),
            &BigCount::from(5u32)
        )
        .is_err());
    }

    #[test]
    fn condition_values() {
        let r = hypergraph_bounds(7, 3, 1).unwrap();
        // log M = C(2(k-t)+1, k-t) * log2 C(7,3) = C(5,2) log2 35
        assert!((r.log_m_upper - 10.0 * 35f64.log2()).abs() < 1e-9);
        let cond = r.cond_allsizes.unwrap();
        assert!((cond - (r.log_m_upper + 13.0 - 15.0)).abs() < 1e-9);
        assert!(!r.cond_allsizes_asymptotic);
        let union = r.cond_union;
        assert!((union - (2.0 * 7f64.log2() + 5.0 - 15.0)).abs() < 1e-9);
        // fixed-size condition decreases in m
        let a = r.cond_fixedsize(10.0).unwrap();
        let b = r.cond_fixedsize(100.0).unwrap();
        assert!(b < a);
    }

    #[test]
    fn cond_allsizes_monotone_beyond_eta_threshold() {
        for (k, t) in [(3u32, 1u32), (4, 2), (5, 3)] {
            let start = ((t + 1) * (k - t + 1)) as f64 + eta(k as u64, t as u64).unwrap();
            let start = start.ceil() as u32;
            let mut prev = f64::INFINITY;
            for n in start..start + 20 {
                let r = hypergraph_bounds(n, k, t).unwrap();
                let c = r.cond_allsizes.unwrap();
                assert!(c < prev, "cond_allsizes must decrease, failed at ({n},{k},{t})");
                prev = c;
            }
        }
    }
}

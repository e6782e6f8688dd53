//! Exact combinatorial primitives: binomials, factorials, Gaussian binomials
//! and colexicographic subset ranking.
//!
//! Every count is an arbitrary-precision integer; floating point never enters
//! a counting path.

use crate::error::{invalid, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Exact non-negative count.  Values up to `2^C(n,k)` at desk scale are
/// routine, so this is arbitrary precision.
pub type BigCount = BigUint;

/// Binomial coefficient `C(a, r)`, exactly; `0` when `r < 0` or `r > a`.
pub fn binomial(a: u64, r: i64) -> BigCount {
    if r < 0 || r as u64 > a {
        return BigCount::zero();
    }
    let r = (r as u64).min(a - r as u64);
    let mut acc = BigCount::one();
    for i in 0..r {
        acc *= a - i;
        acc /= i + 1; // exact at every step: C(a,i+1) is an integer
    }
    acc
}

/// `C(a, r)` as an `f64` (for bound formulas only, never for counts).
pub fn binomial_f64(a: u64, r: i64) -> f64 {
    big_to_f64(&binomial(a, r))
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigCount {
    let mut acc = BigCount::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Deterministic primality check by trial division; fine for desk-scale `q`.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Gaussian binomial coefficient `[n choose k]_q` for prime `q`, computed as
/// the exact product `prod_{i<k} (q^{n-i}-1)/(q^{k-i}-1)`; `0` when `k < 0`
/// or `k > n`.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> Result<BigCount> {
    if !is_prime(q) {
        return Err(invalid(format!("gaussian binomial requires prime q, got {q}")));
    }
    if k < 0 || k > n || n < 0 {
        return Ok(BigCount::zero());
    }
    let (n, k) = (n as u64, k as u64);
    let q = BigCount::from(q);
    let mut num = BigCount::one();
    let mut den = BigCount::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((k - i) as u32) - 1u32;
    }
    let (quot, rem) = num_integer_div_rem(&num, &den);
    debug_assert!(rem.is_zero(), "gaussian binomial product must divide exactly");
    Ok(quot)
}

fn num_integer_div_rem(a: &BigCount, b: &BigCount) -> (BigCount, BigCount) {
    (a / b, a % b)
}

/// `q^e` as a `BigCount`.
pub fn power(q: u64, e: u64) -> BigCount {
    BigCount::from(q).pow(e as u32)
}

/// Cap on `2^e` material: beyond ~16 Mbit the desk-scale counting identities
/// here stop being the right tool.
pub const MAX_POWER_BITS: u64 = 1 << 24;

/// `2^e` for an exact exponent, with an explicit resource error instead of a
/// runaway allocation.
pub fn two_pow_checked(e: &BigCount) -> Result<BigCount> {
    let bits = e.to_u64().filter(|&b| b <= MAX_POWER_BITS).ok_or_else(|| {
        crate::error::Error::BudgetExceeded(format!("2^{e} exceeds the {MAX_POWER_BITS}-bit cap"))
    })?;
    Ok(BigCount::one() << bits)
}

/// `log2` of an exact count, accurate to double precision even for values
/// far beyond `f64` range.
pub fn log2_big(x: &BigCount) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().unwrap();
    top.log2() + shift as f64
}

fn big_to_f64(x: &BigCount) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Position of a `k`-subset in colexicographic order over `[n]`.
///
/// `rank` and `unrank` are mutually inverse bijections between `k`-subset
/// bitmasks and `[0, C(n,k))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetRank {
    pub n: u32,
    pub k: u32,
    pub rank: u64,
}

impl SubsetRank {
    pub fn from_mask(n: u32, mask: u32) -> Self {
        SubsetRank {
            n,
            k: mask.count_ones(),
            rank: rank_subset(mask),
        }
    }

    pub fn to_mask(self) -> Result<u32> {
        unrank_subset(self.n, self.k, self.rank)
    }
}

/// Colex rank of the subset encoded by `mask` (bit `i` = element `i`).
pub fn rank_subset(mask: u32) -> u64 {
    let mut rank = 0u64;
    let mut m = mask;
    let mut pos = 1i64;
    while m != 0 {
        let c = m.trailing_zeros() as u64;
        rank += binomial(c, pos).to_u64().expect("desk-scale rank fits u64");
        m &= m - 1;
        pos += 1;
    }
    rank
}

/// Inverse of [`rank_subset`]: the `rank`-th `k`-subset of `[n]` in colex
/// order, as a bitmask.
pub fn unrank_subset(n: u32, k: u32, rank: u64) -> Result<u32> {
    let total = binomial(n as u64, k as i64)
        .to_u64()
        .ok_or_else(|| invalid("C(n,k) too large for subset ranking"))?;
    if rank >= total {
        return Err(invalid(format!("rank {rank} out of range [0, {total})")));
    }
    let mut mask = 0u32;
    let mut r = rank;
    for pos in (1..=k as u64).rev() {
        // largest c with C(c, pos) <= r
        let mut c = pos - 1;
        while binomial(c + 1, pos as i64).to_u64().unwrap() <= r {
            c += 1;
        }
        mask |= 1 << c;
        r -= binomial(c, pos as i64).to_u64().unwrap();
    }
    Ok(mask)
}

/// All `k`-subsets of `[n]` as bitmasks, in colex (rank) order.
pub fn subsets_colex(n: u32, k: u32) -> Vec<u32> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // Gosper's hack walks fixed-popcount masks in increasing numeric order,
    // which for fixed k coincides with colex order.
    let mut mask = (1u32 << k) - 1;
    loop {
        out.push(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        if r == 0 || r > limit {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
        if mask > limit {
            break;
        }
    }
    out
}

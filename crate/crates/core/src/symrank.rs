//! Symmetry-rank thresholds.
//!
//! Every threshold has the form `rank >= k·log₂ n + h/2 + log₂ e` with small
//! integers `k`, `h`, `e`. Doubling and exponentiating turns it into
//! `2^(2·rank - h) >= n^(2k) · e²`, which is decided exactly in `u128`.

use thiserror::Error;

/// Dimensions at or above this make `n^4` overflow the exact comparison.
pub const MAX_N: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymrankError {
    #[error("need n >= c >= 2, got n = {n}, c = {c}")]
    BadQuery { n: u64, c: u64 },
    #[error("n = {0} is too large (limit {MAX_N})")]
    TooLarge(u64),
}

pub fn delta(n: u64) -> u64 {
    n % 2
}

/// `2·log₂ n + c/2 - 1 - δ(n)`.
pub fn f_c(n: u64, c: u64) -> f64 {
    2.0 * (n as f64).log2() + c as f64 / 2.0 - 1.0 - delta(n) as f64
}

/// Largest possible rank of an isometric torus action on a closed
/// positively curved `n`-manifold.
pub fn max_symrank(n: u64) -> u64 {
    n.div_ceil(2)
}

/// A threshold `k·log₂ n + h/2 + log₂ extra`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub k: u32,
    pub h: i64,
    pub extra: u64,
}

impl Threshold {
    /// `2·log₂ n + c/2 - 1`, the rank that forces periodicity up to degree `c`.
    pub fn theorem_bc(c: u64) -> Self {
        Threshold { k: 2, h: c as i64 - 2, extra: 1 }
    }

    /// `2·log₂ n + 7`, the fixed threshold used at `c = 16`.
    pub fn theorem_a() -> Self {
        Threshold { k: 2, h: 14, extra: 1 }
    }

    /// `f_c(n)`, which is also the first involution threshold.
    pub fn f_c(n: u64, c: u64) -> Self {
        Threshold { k: 2, h: c as i64 - 2 - 2 * delta(n) as i64, extra: 1 }
    }

    /// Second involution threshold: `log₂ n + c/2 + 1 + log₂ 3 - δ(n)`.
    pub fn involution_pair(n: u64, c: u64) -> Self {
        Threshold { k: 1, h: c as i64 + 2 - 2 * delta(n) as i64, extra: 3 }
    }

    /// Connected sums of rank-one spaces: `2·log₂(4n) = 2·log₂ n + 4`.
    pub fn connected_sum() -> Self {
        Threshold { k: 2, h: 8, extra: 1 }
    }

    /// Fundamental group statement in dimensions `4m + 1`: `2·log₂ n`.
    pub fn fundamental_group() -> Self {
        Threshold { k: 2, h: 0, extra: 1 }
    }

    /// Approximate real value at `n`.
    pub fn value(&self, n: u64) -> f64 {
        self.k as f64 * (n as f64).log2() + self.h as f64 / 2.0 + (self.extra as f64).log2()
    }

    /// Exact test of `rank >= value(n)`; requires `1 <= n < MAX_N`.
    pub fn met_by(&self, rank: u64, n: u64) -> bool {
        let x = 2 * rank as i128 - self.h as i128;
        if x < 0 {
            return false;
        }
        let mut rhs: u128 = u128::from(self.extra) * u128::from(self.extra);
        for _ in 0..2 * self.k {
            rhs = rhs.saturating_mul(u128::from(n));
        }
        if x >= 128 {
            return true;
        }
        1u128 << x >= rhs
    }

    /// Least integer rank meeting the threshold.
    pub fn min_rank(&self, n: u64) -> u64 {
        let mut r = (self.value(n).floor().max(0.0) as u64).saturating_sub(1);
        while !self.met_by(r, n) {
            r += 1;
        }
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdQuery {
    pub n: u64,
    pub c: u64,
    pub rank: u64,
}

/// One threshold evaluated at a query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdCheck {
    pub value: f64,
    pub min_rank: u64,
    pub met: bool,
}

impl ThresholdCheck {
    fn new(t: Threshold, n: u64, rank: u64) -> Self {
        ThresholdCheck { value: t.value(n), min_rank: t.min_rank(n), met: t.met_by(rank, n) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub query: ThresholdQuery,
    pub delta: u64,
    pub max_symrank: u64,
    /// `rank >= 2·log₂ n + c/2 - 1`.
    pub theorem_bc: ThresholdCheck,
    /// `rank >= 2·log₂ n + 7`.
    pub theorem_a: ThresholdCheck,
    /// `rank - δ(n)`, the rank left after passing to a fixed-point component
    /// of a codimension-one subtorus in odd dimensions.
    pub reduced_rank: u64,
    /// `rank - δ(n) >= f_c(n)`.
    pub reduced_meets_f_c: bool,
    pub involution_single: ThresholdCheck,
    pub involution_pair: ThresholdCheck,
    pub connected_sum: ThresholdCheck,
    /// Only for `n ≡ 1 mod 4`.
    pub fundamental_group: Option<ThresholdCheck>,
    /// `6·rank >= n + 6`, only reported for `n >= 6000`.
    pub linear_bound: Option<bool>,
    /// One of the two main thresholds needs more rank than any action can have.
    pub vacuous: bool,
}

pub fn hypothesis_report(q: ThresholdQuery) -> Result<HypothesisReport, SymrankError> {
    let ThresholdQuery { n, c, rank } = q;
    if !(n >= c && c >= 2) {
        return Err(SymrankError::BadQuery { n, c });
    }
    if n >= MAX_N {
        return Err(SymrankError::TooLarge(n));
    }
    let theorem_bc = ThresholdCheck::new(Threshold::theorem_bc(c), n, rank);
    let theorem_a = ThresholdCheck::new(Threshold::theorem_a(), n, rank);
    let reduced_rank = rank.saturating_sub(delta(n));
    let max = max_symrank(n);
    Ok(HypothesisReport {
        query: q,
        delta: delta(n),
        max_symrank: max,
        theorem_bc,
        theorem_a,
        reduced_rank,
        reduced_meets_f_c: Threshold::f_c(n, c).met_by(reduced_rank, n),
        involution_single: ThresholdCheck::new(Threshold::f_c(n, c), n, rank),
        involution_pair: ThresholdCheck::new(Threshold::involution_pair(n, c), n, rank),
        connected_sum: ThresholdCheck::new(Threshold::connected_sum(), n, rank),
        fundamental_group: (n % 4 == 1).then(|| ThresholdCheck::new(Threshold::fundamental_group(), n, rank)),
        linear_bound: (n >= 6000).then_some(6 * rank >= n + 6),
        vacuous: theorem_bc.min_rank > max || theorem_a.min_rank > max,
    })
}

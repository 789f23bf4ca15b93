//! Betti vectors of symmetric spaces, Lie groups, products and connected sums.
//!
//! Equal-rank quotients `G/H` go through the quotient formula
//! `P(t) = ∏(1 - t^{n_i+1}) / ∏(1 - t^{m_j+1})`. Lie groups are rationally
//! products of odd spheres. Spaces with only cited data get interval-valued
//! entries: each Betti number is stored as a range `[lo, hi]`, with `hi`
//! absent when no upper bound is known.

use std::fmt;

use thiserror::Error;

use crate::catalog::{
    group_spheres, BettiSource, CatalogError, GroupDescriptor, IrreducibleSpace, Relation,
    SpaceKind,
};
use crate::series::{is_palindromic, poly_div_exact, IntPoly, PoincarePolynomial, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("rank mismatch: rank G = {g}, rank H = {h}")]
    RankMismatch { g: u32, h: u32 },
    #[error("Betti number in degree {0} is not known")]
    UnknownBetti(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not an equal-rank quotient")]
    NotEqualRank(String),
    #[error("Betti vector is not complete")]
    Incomplete,
}

/// Interval of possible values for one Betti number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BettiRange {
    pub lo: u64,
    pub hi: Option<u64>,
}

impl BettiRange {
    pub const ZERO: BettiRange = BettiRange { lo: 0, hi: Some(0) };

    pub fn exact(v: u64) -> Self {
        BettiRange { lo: v, hi: Some(v) }
    }

    pub fn at_least(v: u64) -> Self {
        BettiRange { lo: v, hi: None }
    }

    pub fn unknown() -> Self {
        BettiRange { lo: 0, hi: None }
    }

    pub fn value(&self) -> Option<u64> {
        match self.hi {
            Some(h) if h == self.lo => Some(h),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.value().is_some()
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= self.lo && self.hi.is_none_or(|h| v <= h)
    }

    /// Intersection, or `None` when the ranges are disjoint.
    pub fn intersect(&self, other: &BettiRange) -> Option<BettiRange> {
        let lo = self.lo.max(other.lo);
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match hi {
            Some(h) if h < lo => None,
            _ => Some(BettiRange { lo, hi }),
        }
    }

    fn add(self, other: BettiRange) -> Result<BettiRange, BettiError> {
        let lo = self.lo.checked_add(other.lo).ok_or(SeriesError::Overflow)?;
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.checked_add(b).ok_or(SeriesError::Overflow)?),
            _ => None,
        };
        Ok(BettiRange { lo, hi })
    }

    fn mul(self, other: BettiRange) -> Result<BettiRange, BettiError> {
        let lo = self.lo.checked_mul(other.lo).ok_or(SeriesError::Overflow)?;
        let hi = match (self.hi, other.hi) {
            (Some(0), _) | (_, Some(0)) => Some(0),
            (Some(a), Some(b)) => Some(a.checked_mul(b).ok_or(SeriesError::Overflow)?),
            _ => None,
        };
        Ok(BettiRange { lo, hi })
    }
}

impl fmt::Display for BettiRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (lo, Some(hi)) if lo == hi => write!(f, "{lo}"),
            (0, None) => write!(f, "?"),
            (lo, None) => write!(f, ">={lo}"),
            (lo, Some(hi)) => write!(f, "{lo}..{hi}"),
        }
    }
}

/// Betti numbers `b_0, b_1, ...` of a space.
///
/// Degrees past the stored entries are zero when `tail_known` is set and
/// unknown otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    entries: Vec<BettiRange>,
    tail_known: bool,
    dim: usize,
}

impl BettiVector {
    /// Vector of a complete or truncated Poincaré polynomial. A complete
    /// polynomial gives a complete vector.
    pub fn from_poly(p: &PoincarePolynomial, dim: usize) -> Self {
        let known = p.truncation().map_or(p.coeffs().len(), |t| t + 1);
        let entries = (0..known)
            .map(|d| BettiRange::exact(p.coeffs().get(d).copied().unwrap_or(0)))
            .collect();
        BettiVector { entries, tail_known: p.is_complete(), dim }
    }

    /// Complete vector from exact values.
    pub fn from_values(values: &[u64], dim: usize) -> Self {
        BettiVector {
            entries: values.iter().map(|&v| BettiRange::exact(v)).collect(),
            tail_known: true,
            dim,
        }
    }

    /// Interval entries for degrees `0..entries.len()`, unknown beyond.
    pub fn from_ranges(entries: Vec<BettiRange>, dim: usize) -> Self {
        BettiVector { entries, tail_known: false, dim }
    }

    /// Manifold dimension of the underlying space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, degree: usize) -> BettiRange {
        match self.entries.get(degree) {
            Some(r) => *r,
            None if self.tail_known || degree > self.dim => BettiRange::ZERO,
            None => BettiRange::unknown(),
        }
    }

    pub fn exact(&self, degree: usize) -> Result<u64, BettiError> {
        self.get(degree).value().ok_or(BettiError::UnknownBetti(degree))
    }

    /// `true` when every Betti number is known exactly.
    pub fn is_complete(&self) -> bool {
        (self.tail_known || self.entries.len() > self.dim)
            && self.entries.iter().all(BettiRange::is_exact)
    }

    /// Largest `d` such that `b_0..=b_d` are all exact, or `None` if even
    /// `b_0` is unknown. Complete vectors report `usize::MAX`.
    pub fn known_up_to(&self) -> Option<usize> {
        if self.is_complete() {
            return Some(usize::MAX);
        }
        let n = self.entries.iter().take_while(|r| r.is_exact()).count();
        n.checked_sub(1)
    }

    /// Exact values as a polynomial, truncated at [`Self::known_up_to`] when
    /// the vector is not complete.
    pub fn to_poly(&self) -> Result<PoincarePolynomial, BettiError> {
        if self.is_complete() {
            let v: Vec<u64> = self.entries.iter().map(|r| r.lo).collect();
            return Ok(PoincarePolynomial::new(v)?);
        }
        let d = self.known_up_to().ok_or(BettiError::UnknownBetti(0))?;
        let v: Vec<u64> = (0..=d).map(|i| self.get(i).lo).collect();
        Ok(PoincarePolynomial::truncated(v, d)?)
    }

    /// Entries `b_0..=b_d`.
    pub fn ranges(&self, d: usize) -> Vec<BettiRange> {
        (0..=d).map(|i| self.get(i)).collect()
    }

    /// Restriction to degrees `0..=d`; higher degrees become unknown.
    pub fn truncated(&self, d: usize) -> BettiVector {
        if self.is_complete() && d >= self.dim {
            return self.clone();
        }
        BettiVector::from_ranges(self.ranges(d), self.dim)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({}", parts.join(","))?;
        if !self.tail_known && self.entries.len() <= self.dim {
            write!(f, ",…")?;
        }
        write!(f, ")")
    }
}

fn rank_sum(h: &[GroupDescriptor]) -> u32 {
    h.iter().map(GroupDescriptor::rank).sum()
}

/// `∏ (1 - t^{d+1})` over sphere dimensions `d`, with terms above `limit`
/// dropped.
fn one_minus_product(dims: &[u32], limit: usize) -> Result<Vec<i64>, BettiError> {
    let mut acc = vec![0i64; limit + 1];
    acc[0] = 1;
    for &d in dims {
        let k = d as usize + 1;
        for i in (k..=limit).rev() {
            acc[i] = acc[i].checked_sub(acc[i - k]).ok_or(SeriesError::Overflow)?;
        }
    }
    Ok(acc)
}

fn collect_dims(h: &[GroupDescriptor]) -> Result<Vec<u32>, BettiError> {
    let mut dims = Vec::new();
    for x in h {
        dims.extend_from_slice(group_spheres(x)?.dims());
    }
    Ok(dims)
}

/// Poincaré polynomial of the equal-rank quotient `g / (h_1 × ... × h_k)`.
pub fn poincare_equal_rank(
    g: &GroupDescriptor,
    h: &[GroupDescriptor],
) -> Result<PoincarePolynomial, BettiError> {
    let (gr, hr) = (g.rank(), rank_sum(h));
    if gr != hr {
        return Err(BettiError::RankMismatch { g: gr, h: hr });
    }
    let gd = group_spheres(g)?;
    let hd = collect_dims(h)?;
    let top = gd.dims().iter().map(|&d| d as usize + 1).sum::<usize>();
    let num = IntPoly::new(one_minus_product(gd.dims(), top)?)?;
    let den = IntPoly::new(one_minus_product(&hd, top)?)?;
    Ok(poly_div_exact(&num, &den)?)
}

/// Coefficients `0..=limit` of the quotient series, without requiring the
/// full polynomials to fit under the degree cap.
fn equal_rank_series(
    g: &GroupDescriptor,
    h: &[GroupDescriptor],
    limit: usize,
) -> Result<PoincarePolynomial, BettiError> {
    let num = one_minus_product(group_spheres(g)?.dims(), limit)?;
    let den = one_minus_product(&collect_dims(h)?, limit)?;
    // den[0] == 1, so ascending division needs no scaling.
    let mut q = vec![0i64; limit + 1];
    for i in 0..=limit {
        let mut v = num[i];
        for j in 1..=i {
            let t = den[j].checked_mul(q[i - j]).ok_or(SeriesError::Overflow)?;
            v = v.checked_sub(t).ok_or(SeriesError::Overflow)?;
        }
        q[i] = v;
    }
    let mut out = Vec::with_capacity(q.len());
    for (i, v) in q.into_iter().enumerate() {
        out.push(u64::try_from(v).map_err(|_| SeriesError::NegativeCoefficient(i))?);
    }
    Ok(PoincarePolynomial::truncated(out, limit)?)
}

fn periodic_pattern(step: usize, top: usize, limit: usize) -> Vec<u64> {
    (0..=top.min(limit)).map(|d| u64::from(d % step == 0)).collect()
}

fn closed_form(kind: SpaceKind) -> Option<(usize, usize)> {
    // (step, top degree) of a 1 + t^step + ... + t^top pattern
    match kind {
        SpaceKind::Sphere(n) => Some((n as usize, n as usize)),
        SpaceKind::CP(q) => Some((2, 2 * q as usize)),
        SpaceKind::HP(q) => Some((4, 4 * q as usize)),
        SpaceKind::CaP2 => Some((8, 16)),
        _ => None,
    }
}

/// Betti vector of `s` through degree `d`.
///
/// Computed sources are exact through `min(d, dim)`, and complete once
/// `d >= dim`. Witness sources carry the cited constraints together with
/// `b_0 = 1`, `b_1 = 0`, `b_{dim-1} = 0` and `b_dim = 1`. All other degrees
/// are unknown, and [`BettiVector::exact`] reports them as
/// [`BettiError::UnknownBetti`].
pub fn betti_vector(s: &IrreducibleSpace, d: usize) -> Result<BettiVector, BettiError> {
    let dim = s.dim() as usize;
    let limit = d.min(dim);
    let complete = d >= dim;
    let finish = |coeffs: Vec<u64>| -> Result<BettiVector, BettiError> {
        let p = if complete {
            PoincarePolynomial::new(coeffs)?
        } else {
            PoincarePolynomial::truncated(coeffs, limit)?
        };
        Ok(BettiVector::from_poly(&p, dim))
    };

    if let Some((step, top)) = closed_form(s.kind()) {
        return finish(periodic_pattern(step, top, limit));
    }
    if let SpaceKind::LieGroup(g) = s.kind() {
        let mut p = PoincarePolynomial::truncated(vec![1], limit)?;
        for &k in group_spheres(&g)?.dims() {
            let sphere = crate::series::truncate(&PoincarePolynomial::sphere(k as usize)?, limit);
            p = crate::series::poly_mul(&p, &sphere)?;
        }
        let coeffs = (0..=limit).map(|i| p.coeff(i)).collect::<Result<Vec<_>, _>>()?;
        return finish(coeffs);
    }
    match s.source() {
        BettiSource::Computed => {
            let (g, h) = s
                .quotient()
                .ok_or_else(|| BettiError::NotEqualRank(s.kind().to_string()))?;
            if complete {
                let p = match poincare_equal_rank(&g, &h) {
                    Err(BettiError::Series(SeriesError::DegreeCap(_))) => {
                        // The quotient has degree `dim`, so the series through
                        // `dim` is the whole polynomial.
                        let q = equal_rank_series(&g, &h, dim)?;
                        PoincarePolynomial::new(q.coeffs().to_vec())?
                    }
                    other => other?,
                };
                Ok(BettiVector::from_poly(&p, dim))
            } else {
                Ok(BettiVector::from_poly(&equal_rank_series(&g, &h, limit)?, dim))
            }
        }
        BettiSource::Witness(witnesses) => {
            let mut entries = vec![BettiRange::unknown(); limit + 1];
            let mut pin = |deg: usize, r: BettiRange| -> Result<(), BettiError> {
                if deg <= limit {
                    entries[deg] = entries[deg]
                        .intersect(&r)
                        .ok_or_else(|| CatalogError::Data(format!("contradictory witnesses for {}", s.kind())))?;
                }
                Ok(())
            };
            pin(0, BettiRange::exact(1))?;
            pin(1, BettiRange::ZERO)?;
            if dim >= 2 {
                pin(dim - 1, BettiRange::ZERO)?;
            }
            pin(dim, BettiRange::exact(1))?;
            for w in witnesses {
                let r = match w.relation {
                    Relation::Equal => BettiRange::exact(w.value),
                    Relation::AtLeast => BettiRange::at_least(w.value),
                };
                pin(w.degree, r)?;
            }
            let mut v = BettiVector::from_ranges(entries, dim);
            v.tail_known = complete;
            Ok(v)
        }
    }
}

/// Künneth product of the factors through degree `d`. Interval entries
/// propagate, so an unknown factor degree makes the affected product degrees
/// unknown rather than failing.
pub fn product_betti(factors: &[IrreducibleSpace], d: usize) -> Result<BettiVector, BettiError> {
    let vectors = factors
        .iter()
        .map(|f| betti_vector(f, d))
        .collect::<Result<Vec<_>, _>>()?;
    convolve_all(&vectors, d)
}

/// Künneth product of Betti vectors through degree `d`.
pub fn convolve_all(vectors: &[BettiVector], d: usize) -> Result<BettiVector, BettiError> {
    let mut acc = BettiVector::from_values(&[1], 0);
    for v in vectors {
        acc = convolve(&acc, v, d)?;
    }
    Ok(acc)
}

fn convolve(a: &BettiVector, b: &BettiVector, d: usize) -> Result<BettiVector, BettiError> {
    let dim = a.dim + b.dim;
    let complete = a.is_complete() && b.is_complete() && d >= dim;
    let limit = if complete { dim } else { d.min(dim) };
    let mut entries = Vec::with_capacity(limit + 1);
    for k in 0..=limit {
        let mut sum = BettiRange::ZERO;
        for i in 0..=k {
            sum = sum.add(a.get(i).mul(b.get(k - i))?)?;
        }
        entries.push(sum);
    }
    Ok(BettiVector { entries, tail_known: complete, dim })
}

/// Betti vector of the connected sum of two closed `n`-manifolds.
pub fn connected_sum_betti(
    a: &BettiVector,
    b: &BettiVector,
    n: usize,
) -> Result<BettiVector, BettiError> {
    for v in [a, b] {
        if !v.is_complete() {
            return Err(BettiError::Incomplete);
        }
        if v.dim != n {
            return Err(BettiError::DimensionMismatch(v.dim, n));
        }
    }
    let mut values = vec![0u64; n + 1];
    values[0] = 1;
    values[n] = 1;
    for (i, slot) in values.iter_mut().enumerate().take(n).skip(1) {
        *slot = a.exact(i)? + b.exact(i)?;
    }
    Ok(BettiVector::from_values(&values, n))
}

/// Compares the total Betti number of an equal-rank space against
/// `∏(n_i + 1) / ∏(m_j + 1)`.
pub fn euler_characteristic_check(s: &IrreducibleSpace) -> Result<bool, BettiError> {
    let not_equal = || BettiError::NotEqualRank(s.kind().to_string());
    if !s.equal_rank() {
        return Err(not_equal());
    }
    let (g, h) = s.quotient().ok_or_else(not_equal)?;
    let prod = |dims: &[u32]| -> Result<u128, BettiError> {
        dims.iter().try_fold(1u128, |acc, &d| {
            acc.checked_mul(u128::from(d) + 1).ok_or(BettiError::Series(SeriesError::Overflow))
        })
    };
    // Cancel shared sphere dimensions first; the raw products overflow for
    // large classical groups.
    let mut top = group_spheres(&g)?.dims().to_vec();
    let mut bottom = Vec::new();
    for d in collect_dims(&h)? {
        match top.iter().position(|&x| x == d) {
            Some(i) => {
                top.swap_remove(i);
            }
            None => bottom.push(d),
        }
    }
    let num = prod(&top)?;
    let den = prod(&bottom)?;
    if num % den != 0 {
        return Ok(false);
    }
    let p = betti_vector(s, s.dim() as usize)?.to_poly()?;
    Ok(is_palindromic(&p)? && u128::from(p.total()) == num / den)
}

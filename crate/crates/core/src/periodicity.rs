//! Betti-level 4-periodicity up to degree `c`.
//!
//! A space passes at degree `c` when either `b_4 = 0` and `b_j = 0` for
//! `0 < j < c`, or `b_4 = 1`, `b_i = b_{i+4}` for `0 < i < c - 4` and
//! `b_{c-4} <= b_c`. These are necessary conditions for cohomology that is
//! 4-periodic up to degree `c`, so a `Periodic` verdict means only that the
//! Betti numbers do not rule it out.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::betti::{betti_vector, convolve_all, BettiError, BettiRange, BettiVector};
use crate::catalog::{enumerate_spaces, IrreducibleSpace, ProductSpace, SpaceKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodicityError {
    #[error("degree c = {0} is below the minimum of {1}")]
    DegreeTooSmall(usize, usize),
    #[error("report does not record a failure")]
    NotFailing,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Betti(#[from] BettiError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Periodic,
    Fails,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Periodic => "Periodic",
            Verdict::Fails => "Fails",
            Verdict::Undetermined => "Undetermined",
        })
    }
}

/// `b_4 = 0` or `b_4 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Connected,
    Periodic,
}

/// A violated inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// `b_4 >= 2`.
    B4TooLarge,
    /// `b_4 = 0` but `b_degree > 0`.
    Nonzero { degree: usize },
    /// `b_low` and `b_high` differ; `less` when `b_low < b_high`.
    Mismatch { low: usize, high: usize, less: bool },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Obstruction::B4TooLarge => write!(f, "1<b_4"),
            Obstruction::Nonzero { degree } => write!(f, "b_{degree}>0"),
            Obstruction::Mismatch { low, high, less: true } => write!(f, "b_{low}<b_{high}"),
            Obstruction::Mismatch { low, high, less: false } => write!(f, "b_{low}>b_{high}"),
        }
    }
}

impl Obstruction {
    /// Whether `b` certainly violates this inequality.
    pub fn violated_by(&self, b: &BettiVector) -> bool {
        match *self {
            Obstruction::B4TooLarge => b.get(4).lo >= 2,
            Obstruction::Nonzero { degree } => b.get(degree).lo > 0,
            Obstruction::Mismatch { low, high, less } => {
                let (x, y) = if less { (low, high) } else { (high, low) };
                b.get(x).hi.is_some_and(|h| h < b.get(y).lo)
            }
        }
    }

    /// Parses the rendering produced by `Display`, also accepting `0<b_j`
    /// and braces around subscripts.
    pub fn parse(s: &str) -> Option<Obstruction> {
        let s: String = s.chars().filter(|c| !matches!(c, ' ' | '{' | '}')).collect();
        if s == "1<b_4" {
            return Some(Obstruction::B4TooLarge);
        }
        let deg = |t: &str| t.strip_prefix("b_")?.parse::<usize>().ok();
        if let Some(rest) = s.strip_prefix("0<") {
            return Some(Obstruction::Nonzero { degree: deg(rest)? });
        }
        if let Some(lhs) = s.strip_suffix(">0") {
            return Some(Obstruction::Nonzero { degree: deg(lhs)? });
        }
        let (op, less) = if s.contains('<') { ('<', true) } else { ('>', false) };
        let (a, b) = s.split_once(op)?;
        Some(Obstruction::Mismatch { low: deg(a)?, high: deg(b)?, less })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicityReport {
    pub c: usize,
    pub verdict: Verdict,
    pub obstruction: Option<Obstruction>,
    pub branch: Option<Branch>,
}

/// Outcome of one branch of the check.
enum Outcome {
    Holds,
    Violated(Obstruction),
    Open,
}

fn connected_branch(b: &BettiVector, c: usize) -> Outcome {
    let mut all_zero = true;
    for j in 1..c {
        let r = if j == 4 { BettiRange::ZERO } else { b.get(j) };
        if r.lo > 0 {
            return Outcome::Violated(Obstruction::Nonzero { degree: j });
        }
        all_zero &= r.hi == Some(0);
    }
    if all_zero {
        Outcome::Holds
    } else {
        Outcome::Open
    }
}

fn periodic_branch(b: &BettiVector, c: usize) -> Outcome {
    let at = |d: usize| if d == 4 { BettiRange::exact(1) } else { b.get(d) };
    let mut certain = true;
    // Running intersection along each residue chain b_r = b_{r+4} = ...
    let mut chain: [Option<BettiRange>; 4] = [None; 4];
    for i in 1..c.saturating_sub(4) {
        let running = chain[i % 4].unwrap_or_else(|| at(i));
        let next = at(i + 4);
        match running.intersect(&next) {
            Some(r) => chain[i % 4] = Some(r),
            None => {
                let less = running.hi.is_some_and(|h| h < next.lo);
                return Outcome::Violated(Obstruction::Mismatch { low: i, high: i + 4, less });
            }
        }
        certain &= running.is_exact() && next.is_exact();
    }
    let (x, y) = (at(c - 4), at(c));
    if y.hi.is_some_and(|h| h < x.lo) {
        return Outcome::Violated(Obstruction::Mismatch { low: c - 4, high: c, less: false });
    }
    certain &= x.hi.is_some_and(|h| h <= y.lo);
    if certain {
        Outcome::Holds
    } else {
        Outcome::Open
    }
}

/// Betti-level 4-periodicity check up to degree `c` (requires `c >= 8`).
///
/// The `b_4 <= 1` condition is checked first, then the lowest violated degree
/// is reported. With interval data the verdict is `Fails` only when every
/// value of `b_4` still allowed by the data leads to a certain violation, and
/// `Periodic` only when the conditions certainly hold.
pub fn check_4periodic(b: &BettiVector, c: usize) -> Result<PeriodicityReport, PeriodicityError> {
    if c < 8 {
        return Err(PeriodicityError::DegreeTooSmall(c, 8));
    }
    let b4 = b.get(4);
    let report = |verdict, obstruction, branch| PeriodicityReport { c, verdict, obstruction, branch };
    if b4.lo >= 2 {
        return Ok(report(Verdict::Fails, Some(Obstruction::B4TooLarge), None));
    }
    if let Some(v) = b4.value() {
        let (outcome, branch) = match v {
            0 => (connected_branch(b, c), Branch::Connected),
            _ => (periodic_branch(b, c), Branch::Periodic),
        };
        return Ok(match outcome {
            Outcome::Holds => report(Verdict::Periodic, None, Some(branch)),
            Outcome::Violated(o) => report(Verdict::Fails, Some(o), Some(branch)),
            Outcome::Open => report(Verdict::Undetermined, None, Some(branch)),
        });
    }
    // b_4 is not pinned down; every admissible value has to fail.
    let mut first = None;
    let mut all_fail = true;
    if b4.contains(0) {
        match connected_branch(b, c) {
            Outcome::Violated(o) => first = first.or(Some((o, Branch::Connected))),
            _ => all_fail = false,
        }
    }
    if b4.contains(1) {
        match periodic_branch(b, c) {
            Outcome::Violated(o) => first = first.or(Some((o, Branch::Periodic))),
            _ => all_fail = false,
        }
    }
    Ok(match (all_fail, first) {
        (true, Some((o, branch))) => report(Verdict::Fails, Some(o), Some(branch)),
        _ => report(Verdict::Undetermined, None, None),
    })
}

/// The obstruction in table notation, e.g. `b_4<b_8`.
pub fn obstruction_string(r: &PeriodicityReport) -> Result<String, PeriodicityError> {
    match (r.verdict, r.obstruction) {
        (Verdict::Fails, Some(o)) => Ok(o.to_string()),
        _ => Err(PeriodicityError::NotFailing),
    }
}

/// Checks every catalog space with `16 <= dim <= max_dim` at degree `c`.
/// Output is in canonical space order.
pub fn classify_irreducibles(
    c: usize,
    max_dim: u32,
    max_param: u32,
) -> Result<Vec<(IrreducibleSpace, PeriodicityReport)>, PeriodicityError> {
    if c < 16 {
        return Err(PeriodicityError::DegreeTooSmall(c, 16));
    }
    enumerate_spaces(max_dim, max_param)
        .into_par_iter()
        .filter(|s| s.dim() >= 16)
        .map(|s| {
            let b = betti_vector(&s, c)?;
            let r = check_4periodic(&b, c)?;
            Ok((s, r))
        })
        .collect()
}

/// `true` iff `b_i = 0` for every `3 < i < 16`.
pub fn low_degree_gap(b: &BettiVector) -> Result<bool, PeriodicityError> {
    for i in 4..16 {
        if b.exact(i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorBranch {
    /// The product is `(c-1)`-connected.
    Connected,
    /// `b_4` of the first factor is 1.
    Periodic,
}

/// Conclusions about the two factors of a product that passes the check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorAnalysis {
    pub branch: FactorBranch,
    pub first_b4_is_one: bool,
    pub first_periodic: bool,
    pub second_gap: bool,
    pub low_degree_exclusive: bool,
}

impl FactorAnalysis {
    pub fn all_hold(&self) -> bool {
        match self.branch {
            FactorBranch::Connected => true,
            FactorBranch::Periodic => {
                self.first_b4_is_one && self.first_periodic && self.second_gap && self.low_degree_exclusive
            }
        }
    }

    /// Names of the conclusions that fail.
    pub fn failures(&self) -> Vec<&'static str> {
        if self.branch == FactorBranch::Connected {
            return Vec::new();
        }
        let mut out = Vec::new();
        if !self.first_b4_is_one {
            out.push("b_4 of the first factor is 1");
        }
        if !self.first_periodic {
            out.push("first factor passes the check");
        }
        if !self.second_gap {
            out.push("second factor has b_i = 0 for 3<i<c");
        }
        if !self.low_degree_exclusive {
            out.push("b_2, b_3 not shared between factors");
        }
        out
    }
}

/// Splits a periodic product `M' × M''` with `b_4' >= b_4''` into the two
/// cases of the product lemma and evaluates each conclusion.
pub fn product_factor_analysis(
    b1: &BettiVector,
    b2: &BettiVector,
    c: usize,
) -> Result<FactorAnalysis, PeriodicityError> {
    let pre = |m: &str| PeriodicityError::Precondition(m.to_string());
    if c < 9 {
        return Err(PeriodicityError::DegreeTooSmall(c, 9));
    }
    if b1.exact(4)? < b2.exact(4)? {
        return Err(pre("b_4 of the first factor must be at least b_4 of the second"));
    }
    let product = convolve_all(&[b1.clone(), b2.clone()], c)?;
    if product.exact(1)? != 0 {
        return Err(pre("the product must have b_1 = 0"));
    }
    let r = check_4periodic(&product, c)?;
    if r.verdict != Verdict::Periodic {
        return Err(pre(&format!(
            "the product must pass the check at c = {c} ({})",
            r.obstruction.map_or_else(|| r.verdict.to_string(), |o| o.to_string())
        )));
    }
    let mut connected = true;
    for j in 1..c {
        connected &= product.exact(j)? == 0;
    }
    if connected {
        return Ok(FactorAnalysis {
            branch: FactorBranch::Connected,
            first_b4_is_one: b1.exact(4)? == 1,
            first_periodic: true,
            second_gap: true,
            low_degree_exclusive: true,
        });
    }
    let first_periodic = check_4periodic(b1, c)?.verdict == Verdict::Periodic;
    let mut second_gap = true;
    for i in 4..c {
        second_gap &= b2.exact(i)? == 0;
    }
    let low_degree_exclusive = b1.exact(2)? + b1.exact(3)? == 0 || b2.exact(2)? + b2.exact(3)? == 0;
    Ok(FactorAnalysis {
        branch: FactorBranch::Periodic,
        first_b4_is_one: b1.exact(4)? == 1,
        first_periodic,
        second_gap,
        low_degree_exclusive,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    SpheresOnly,
    SpheresTimesCPorGr2,
    SpheresTimesHPorGr3TimesQ,
    NotListed,
}

/// Whether a product has one of the shapes `S`, `S × R` with
/// `R ∈ {CP^q, SO(2+q)/SO(2)×SO(q)}`, or `S × R × Q` with
/// `R ∈ {HP^q, SO(3+q)/SO(3)×SO(q)}` and `Q ∈ {pt, S^2, S^3}`, where `S` is a
/// product of spheres of dimension at least `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeVerdict {
    pub allowed: bool,
    pub shape: Shape,
    pub spheres: Vec<SpaceKind>,
    pub r: Option<SpaceKind>,
    pub q: Option<SpaceKind>,
}

/// Dimension of the rational sphere `kind` is, for the small-parameter
/// coincidences (`SU(2)`, `Sp(1)/U(1)`, ...).
fn sphere_dim(kind: SpaceKind) -> Option<u32> {
    match kind {
        SpaceKind::Sphere(n) => Some(n),
        SpaceKind::RealGr(1, q) => Some(q),
        SpaceKind::SpModU(1) | SpaceKind::SOModU(2) | SpaceKind::SUModSO(2) => Some(2),
        SpaceKind::SUModSp(2) => Some(5),
        SpaceKind::LieGroup(g) => {
            let spheres = crate::catalog::group_spheres(&g).ok()?;
            match spheres.dims() {
                [d] => Some(*d),
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Sphere,
    Complex,
    Quaternionic,
    Extra,
}

fn roles(kind: SpaceKind, c: u32) -> Vec<Role> {
    let mut out = Vec::new();
    if let Some(d) = sphere_dim(kind) {
        if d >= c {
            out.push(Role::Sphere);
        }
        if d == 2 || d == 3 {
            out.push(Role::Extra);
        }
    }
    match kind {
        SpaceKind::CP(q) | SpaceKind::ComplexGr(1, q) => {
            out.push(Role::Complex);
            if q == 1 {
                out.push(Role::Extra);
            }
        }
        SpaceKind::RealGr(2, _) => out.push(Role::Complex),
        SpaceKind::HP(_) | SpaceKind::QuatGr(1, _) | SpaceKind::RealGr(3, _) => {
            out.push(Role::Quaternionic)
        }
        _ => {}
    }
    out
}

/// Classifies a product by the shapes allowed for 4-periodic products of
/// symmetric spaces. `CaP2` is not among them.
pub fn shape_verdict(p: &ProductSpace, c: u32) -> ShapeVerdict {
    let kinds: Vec<SpaceKind> = p.factors.iter().map(IrreducibleSpace::kind).collect();
    let role_sets: Vec<Vec<Role>> = kinds.iter().map(|&k| roles(k, c)).collect();
    let not_listed = ShapeVerdict {
        allowed: false,
        shape: Shape::NotListed,
        spheres: Vec::new(),
        r: None,
        q: None,
    };
    let assign = |r_idx: Option<usize>, r_role: Role, q_idx: Option<usize>| -> Option<ShapeVerdict> {
        if let Some(i) = r_idx {
            if !role_sets[i].contains(&r_role) {
                return None;
            }
        }
        if let Some(j) = q_idx {
            if Some(j) == r_idx || !role_sets[j].contains(&Role::Extra) {
                return None;
            }
        }
        let mut spheres = Vec::new();
        for (k, set) in role_sets.iter().enumerate() {
            if Some(k) == r_idx || Some(k) == q_idx {
                continue;
            }
            if !set.contains(&Role::Sphere) {
                return None;
            }
            spheres.push(kinds[k]);
        }
        let shape = match (r_idx, r_role) {
            (None, _) => Shape::SpheresOnly,
            (Some(_), Role::Complex) => Shape::SpheresTimesCPorGr2,
            _ => Shape::SpheresTimesHPorGr3TimesQ,
        };
        Some(ShapeVerdict {
            allowed: true,
            shape,
            spheres,
            r: r_idx.map(|i| kinds[i]),
            q: q_idx.map(|j| kinds[j]),
        })
    };
    if let Some(v) = assign(None, Role::Sphere, None) {
        return v;
    }
    let n = kinds.len();
    for i in 0..n {
        if let Some(v) = assign(Some(i), Role::Complex, None) {
            return v;
        }
    }
    for i in 0..n {
        if let Some(v) = assign(Some(i), Role::Quaternionic, None) {
            return v;
        }
        for j in 0..n {
            if let Some(v) = assign(Some(i), Role::Quaternionic, Some(j)) {
                return v;
            }
        }
    }
    not_listed
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternLabel {
    SphereLike,
    CPLike,
    HPLike,
    S2xHPLike,
    S3xHPLike,
    None,
}

impl fmt::Display for PatternLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternLabel::SphereLike => "SphereLike",
            PatternLabel::CPLike => "CPLike",
            PatternLabel::HPLike => "HPLike",
            PatternLabel::S2xHPLike => "S2xHPLike",
            PatternLabel::S3xHPLike => "S3xHPLike",
            PatternLabel::None => "None",
        })
    }
}

fn step_pattern(step: usize, top: usize) -> Vec<u64> {
    (0..=top).map(|d| u64::from(d % step == 0)).collect()
}

fn shifted_sum(base: &[u64], shift: usize) -> Vec<u64> {
    let mut out = vec![0; base.len() + shift];
    for (i, &v) in base.iter().enumerate() {
        out[i] += v;
        out[i + shift] += v;
    }
    out
}

/// Matches a complete Betti vector of an `n`-manifold against the Betti
/// numbers of `S^n`, `CP^{n/2}`, `HP^{n/4}`, `S^2 × HP^{(n-2)/4}` and
/// `S^3 × HP^{(n-3)/4}`, in that order.
pub fn pattern_classify(b: &BettiVector, n: usize) -> PatternLabel {
    if !b.is_complete() || n == 0 {
        return PatternLabel::None;
    }
    let values: Vec<u64> = (0..=n).map(|i| b.get(i).lo).collect();
    if (n + 1..=b.dim().max(n)).any(|i| b.get(i).lo != 0) {
        return PatternLabel::None;
    }
    let mut sphere = vec![0; n + 1];
    sphere[0] = 1;
    sphere[n] += 1;
    if values == sphere {
        return PatternLabel::SphereLike;
    }
    if n.is_multiple_of(2) && values == step_pattern(2, n) {
        return PatternLabel::CPLike;
    }
    if n.is_multiple_of(4) && values == step_pattern(4, n) {
        return PatternLabel::HPLike;
    }
    if n >= 2 && (n - 2).is_multiple_of(4) && values == shifted_sum(&step_pattern(4, n - 2), 2) {
        return PatternLabel::S2xHPLike;
    }
    if n >= 3 && (n - 3).is_multiple_of(4) && values == shifted_sum(&step_pattern(4, n - 3), 3) {
        return PatternLabel::S3xHPLike;
    }
    PatternLabel::None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::product_betti;

    fn space(k: SpaceKind) -> IrreducibleSpace {
        IrreducibleSpace::new(k).unwrap()
    }

    fn vector(k: SpaceKind, d: usize) -> BettiVector {
        betti_vector(&space(k), d).unwrap()
    }

    fn check(k: SpaceKind, c: usize) -> PeriodicityReport {
        check_4periodic(&vector(k, c), c).unwrap()
    }

    fn product(kinds: &[SpaceKind]) -> ProductSpace {
        ProductSpace::new(kinds.iter().map(|&k| space(k)).collect())
    }

    #[test]
    fn rank_one_spaces_pass() {
        assert_eq!(check(SpaceKind::HP(2), 8).verdict, Verdict::Periodic);
        assert_eq!(check(SpaceKind::HP(5), 16).verdict, Verdict::Periodic);
        assert_eq!(check(SpaceKind::CP(10), 16).verdict, Verdict::Periodic);
        assert_eq!(check(SpaceKind::CP(3), 16).verdict, Verdict::Fails);
        assert_eq!(check(SpaceKind::Sphere(20), 16).verdict, Verdict::Periodic);
    }

    #[test]
    fn table_obstructions() {
        let r = check(SpaceKind::ComplexGr(2, 2), 16);
        assert_eq!(obstruction_string(&r).unwrap(), "1<b_4");
        let r = check(SpaceKind::QuatGr(2, 2), 16);
        assert_eq!(obstruction_string(&r).unwrap(), "b_4<b_8");
        let r = check(SpaceKind::G2SO4, 16);
        assert_eq!(obstruction_string(&r).unwrap(), "b_8>b_12");
        let r = check(SpaceKind::SUModSO(6), 16);
        assert_eq!(obstruction_string(&r).unwrap(), "b_5>0");
    }

    #[test]
    fn e8_times_hp3_boundary() {
        let k = [SpaceKind::LieGroup("E8".parse().unwrap()), SpaceKind::HP(3)];
        let factors: Vec<_> = k.iter().map(|&x| space(x)).collect();
        let b = product_betti(&factors, 16).unwrap();
        assert_eq!(check_4periodic(&b, 15).unwrap().verdict, Verdict::Periodic);
        let r = check_4periodic(&b, 16).unwrap();
        assert_eq!(r.obstruction, Some(Obstruction::Mismatch { low: 11, high: 15, less: true }));
    }

    #[test]
    fn witness_only_data() {
        let r = check(SpaceKind::EI, 16);
        assert_eq!((r.verdict, obstruction_string(&r).unwrap()), (Verdict::Fails, "b_9>0".into()));
        let r = check(SpaceKind::RealGr(5, 5), 16);
        assert_eq!(obstruction_string(&r).unwrap(), "1<b_4");
        assert_eq!(check(SpaceKind::RealGr(3, 7), 16).verdict, Verdict::Undetermined);
        assert_eq!(check(SpaceKind::RealGr(3, 17), 16).verdict, Verdict::Periodic);
        // Below the cited range only the fundamental class in degree 9 is known.
        let r = check(SpaceKind::SUModSO(4), 16);
        assert_eq!(obstruction_string(&r).unwrap(), "b_9>0");
        assert_eq!(check(SpaceKind::SUModSO(4), 8).verdict, Verdict::Undetermined);
    }

    #[test]
    fn small_c_rejected_and_not_failing_rendering() {
        let b = vector(SpaceKind::HP(2), 8);
        assert!(matches!(check_4periodic(&b, 7), Err(PeriodicityError::DegreeTooSmall(7, 8))));
        let r = check_4periodic(&b, 8).unwrap();
        assert_eq!(obstruction_string(&r), Err(PeriodicityError::NotFailing));
    }

    #[test]
    fn obstruction_parsing() {
        for s in ["1<b_4", "b_5>0", "b_4<b_8", "b_8>b_12"] {
            assert_eq!(Obstruction::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Obstruction::parse("0<b_9"), Some(Obstruction::Nonzero { degree: 9 }));
        assert_eq!(Obstruction::parse("b_8>b_{12}").unwrap().to_string(), "b_8>b_12");
    }

    #[test]
    fn gaps() {
        assert!(low_degree_gap(&vector(SpaceKind::Sphere(3), 16)).unwrap());
        assert!(!low_degree_gap(&vector(SpaceKind::CaP2, 16)).unwrap());
        assert!(!low_degree_gap(&vector(SpaceKind::HP(4), 16)).unwrap());
    }

    #[test]
    fn factor_analysis() {
        let hp5 = vector(SpaceKind::HP(5), 16);
        let s2 = vector(SpaceKind::Sphere(2), 16);
        let a = product_factor_analysis(&hp5, &s2, 16).unwrap();
        assert_eq!(a.branch, FactorBranch::Periodic);
        assert!(a.all_hold(), "{:?}", a.failures());

        let s20 = vector(SpaceKind::Sphere(20), 16);
        assert_eq!(product_factor_analysis(&s20, &s20, 16).unwrap().branch, FactorBranch::Connected);

        let cp = vector(SpaceKind::CP(10), 16);
        let s3 = vector(SpaceKind::Sphere(3), 16);
        assert!(matches!(product_factor_analysis(&cp, &s3, 16), Err(PeriodicityError::Precondition(_))));
    }

    #[test]
    fn shapes() {
        let v = shape_verdict(&product(&[SpaceKind::Sphere(17), SpaceKind::Sphere(20)]), 16);
        assert_eq!((v.allowed, v.shape), (true, Shape::SpheresOnly));
        let v = shape_verdict(&product(&[SpaceKind::Sphere(2), SpaceKind::HP(5)]), 16);
        assert_eq!((v.allowed, v.shape), (true, Shape::SpheresTimesHPorGr3TimesQ));
        assert_eq!(v.q, Some(SpaceKind::Sphere(2)));
        let v = shape_verdict(&product(&[SpaceKind::Sphere(2), SpaceKind::Sphere(20)]), 16);
        assert!(!v.allowed);
        let v = shape_verdict(&product(&[SpaceKind::CaP2]), 16);
        assert!(!v.allowed);
        let v = shape_verdict(&product(&[SpaceKind::RealGr(2, 9), SpaceKind::Sphere(16)]), 16);
        assert_eq!(v.shape, Shape::SpheresTimesCPorGr2);
        let su2 = SpaceKind::LieGroup("SU(2)".parse().unwrap());
        let v = shape_verdict(&product(&[su2, SpaceKind::RealGr(3, 8)]), 16);
        assert_eq!(v.shape, Shape::SpheresTimesHPorGr3TimesQ);
    }

    #[test]
    fn patterns() {
        let cp = BettiVector::from_values(&[1, 0, 1, 0, 1, 0, 1], 6);
        assert_eq!(pattern_classify(&cp, 6), PatternLabel::CPLike);
        let hp = BettiVector::from_values(&[1, 0, 0, 0, 1, 0, 0, 0, 1], 8);
        assert_eq!(pattern_classify(&hp, 8), PatternLabel::HPLike);
        let s2s2 = BettiVector::from_values(&[1, 0, 2, 0, 1], 4);
        assert_eq!(pattern_classify(&s2s2, 4), PatternLabel::None);
        // S^2 × HP^2 has the Betti numbers of CP^5, and CP wins.
        let s2hp = BettiVector::from_values(&[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1], 10);
        assert_eq!(pattern_classify(&s2hp, 10), PatternLabel::CPLike);
        let s3hp = BettiVector::from_values(&[1, 0, 0, 1, 1, 0, 0, 1], 7);
        assert_eq!(pattern_classify(&s3hp, 7), PatternLabel::S3xHPLike);
        let sphere = BettiVector::from_values(&[1, 0, 0, 0, 0, 1], 5);
        assert_eq!(pattern_classify(&sphere, 5), PatternLabel::SphereLike);
    }
}

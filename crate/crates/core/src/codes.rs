//! Binary linear codes as images of `Z_2^r -> Z_2^m`.
//!
//! Codewords are indexed by coefficient masks `x: u32` (bit `j` selects row
//! `j`). Linear constraints on codewords are stored as coefficient masks too:
//! a functional `f` on `Z_2^m` pulls back to the mask whose bit `j` is
//! `f(row_j)`, and `x` lies in the kernel iff `x & mask` has even popcount.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Longest supported codeword.
pub const MAX_LENGTH: usize = 512;
/// Largest code dimension for exhaustive enumeration.
pub const MAX_DIMENSION: usize = 24;

const WORDS: usize = MAX_LENGTH / 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodesError {
    #[error("generator matrix has no rows")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    RowLength { row: usize, len: usize, expected: usize },
    #[error("length {0} exceeds the maximum of {MAX_LENGTH}")]
    TooLong(usize),
    #[error("{0} rows exceed the enumeration limit of {MAX_DIMENSION}")]
    TooManyRows(usize),
    #[error("rows are linearly dependent")]
    RankDeficient,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("need r >= 2 for an even-parity subspace, got r = {0}")]
    NoEvenSubspace(usize),
    #[error("need r >= 4, got r = {0}")]
    SubspaceTooSmall(usize),
    #[error("sigma has empty support")]
    NoSupport,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Fixed-capacity bit vector of length at most [`MAX_LENGTH`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: [u64; WORDS],
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Result<Self, CodesError> {
        if len > MAX_LENGTH {
            return Err(CodesError::TooLong(len));
        }
        Ok(BitRow { words: [0; WORDS], len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let m = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn lowest_set_bit(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn xor(&self, other: &BitRow) -> BitRow {
        let mut out = *self;
        out.xor_assign(other);
        out
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= b;
        }
    }

    pub fn or(&self, other: &BitRow) -> BitRow {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        out
    }

    pub fn and(&self, other: &BitRow) -> BitRow {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        out
    }

    /// Bitwise complement within the row length.
    pub fn complement(&self) -> BitRow {
        let mut out = *self;
        for (i, w) in out.words.iter_mut().enumerate() {
            let lo = i * 64;
            let mask = if self.len >= lo + 64 {
                u64::MAX
            } else if self.len > lo {
                (1u64 << (self.len - lo)) - 1
            } else {
                0
            };
            *w = !*w & mask;
        }
        out
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

impl FromStr for BitRow {
    type Err = CodesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut row = BitRow::zeros(s.len())?;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row.set(i, true),
                other => {
                    return Err(CodesError::Parse { line: 1, msg: format!("unexpected character {other:?}") })
                }
            }
        }
        Ok(row)
    }
}

/// Full-rank `r × m` generator matrix over GF(2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEmbedding {
    rows: Vec<BitRow>,
    m: usize,
}

fn rank(rows: &[BitRow]) -> usize {
    let mut basis: Vec<BitRow> = Vec::new();
    for row in rows {
        let mut v = *row;
        for b in &basis {
            let pivot = b.lowest_set_bit().expect("basis rows are nonzero");
            if v.get(pivot) {
                v.xor_assign(b);
            }
        }
        if let Some(p) = v.lowest_set_bit() {
            for b in basis.iter_mut() {
                if b.get(p) {
                    b.xor_assign(&v);
                }
            }
            basis.push(v);
        }
    }
    basis.len()
}

impl LinearEmbedding {
    pub fn new(rows: Vec<BitRow>) -> Result<Self, CodesError> {
        let m = rows.first().ok_or(CodesError::Empty)?.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != m {
                return Err(CodesError::RowLength { row, len: r.len(), expected: m });
            }
        }
        if rank(&rows) != rows.len() {
            return Err(CodesError::RankDeficient);
        }
        Ok(LinearEmbedding { rows, m })
    }

    /// Parses one row of `0`/`1` characters per line; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, CodesError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            rows.push(line.parse::<BitRow>().map_err(|e| match e {
                CodesError::Parse { msg, .. } => CodesError::Parse { line: i + 1, msg },
                other => other,
            })?);
        }
        Self::new(rows)
    }

    /// One row per line, newline terminated.
    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }

    /// Uniformly random full-rank embedding (rejection sampling).
    pub fn random<R: Rng + ?Sized>(r: usize, m: usize, rng: &mut R) -> Result<Self, CodesError> {
        if r > m {
            return Err(CodesError::RankDeficient);
        }
        loop {
            let rows = (0..r)
                .map(|_| {
                    let mut row = BitRow::zeros(m)?;
                    for w in 0..m.div_ceil(64) {
                        row.words[w] = rng.gen();
                    }
                    Ok(row.and(&BitRow::zeros(m)?.complement()))
                })
                .collect::<Result<Vec<_>, CodesError>>()?;
            if let Ok(e) = Self::new(rows) {
                return Ok(e);
            }
        }
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    /// `ι(x) = Σ_{j ∈ x} row_j`.
    pub fn image(&self, x: u32) -> BitRow {
        let mut out = BitRow { words: [0; WORDS], len: self.m };
        for (j, row) in self.rows.iter().enumerate() {
            if x >> j & 1 == 1 {
                out.xor_assign(row);
            }
        }
        out
    }

    /// Pull-back of the functional `v ↦ Σ_{i ∈ support} v_i` to coefficient
    /// space.
    fn functional_mask(&self, support: &BitRow) -> u32 {
        let mut mask = 0;
        for (j, row) in self.rows.iter().enumerate() {
            if row.and(support).weight() % 2 == 1 {
                mask |= 1 << j;
            }
        }
        mask
    }

    fn check_enumerable(&self) -> Result<(), CodesError> {
        if self.r() > MAX_DIMENSION {
            return Err(CodesError::TooManyRows(self.r()));
        }
        Ok(())
    }
}

/// Lightest nonzero codeword `x` with `x & mask` even for every mask; ties
/// go to the smallest coefficient mask. Returns `(weight, x)`.
fn lightest_in_kernel(e: &LinearEmbedding, masks: &[u32]) -> Option<(u32, u32)> {
    const CHUNK_BITS: u32 = 12;
    let r = e.r() as u32;
    let total: u64 = 1 << r;
    let chunk = 1u64 << CHUNK_BITS.min(r);
    let in_kernel = |x: u32| masks.iter().all(|m| (x & m).count_ones().is_multiple_of(2));
    (0..total / chunk)
        .into_par_iter()
        .filter_map(|c| {
            // Gray-code walk over the chunk's indices.
            let start = c * chunk;
            let mut g = (start ^ (start >> 1)) as u32;
            let mut word = e.image(g);
            let mut best: Option<(u32, u32)> = None;
            for k in start..start + chunk {
                if k != start {
                    let bit = k.trailing_zeros();
                    g ^= 1 << bit;
                    word.xor_assign(&e.rows[bit as usize]);
                }
                if g != 0 && in_kernel(g) {
                    let cand = (word.weight(), g);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
            best
        })
        .min()
}

/// Minimum Hamming weight over nonzero codewords.
pub fn min_weight(e: &LinearEmbedding) -> Result<u32, CodesError> {
    e.check_enumerable()?;
    Ok(lightest_in_kernel(e, &[]).expect("r >= 1 gives a nonzero codeword").0)
}

/// Weight of every nonzero codeword, indexed by `x - 1`.
pub fn weight_distribution(e: &LinearEmbedding) -> Result<Vec<u32>, CodesError> {
    e.check_enumerable()?;
    Ok((1..1u32 << e.r()).map(|x| e.image(x).weight()).collect())
}

/// `Σ_{i<r} ⌈w / 2^i⌉`, the least length of a binary `[m, r]` code with
/// minimum weight `w`.
pub fn griesmer_min_length(r: u32, w: u64) -> u64 {
    (0..r).map(|i| if i >= 64 { u64::from(w > 0) } else { w.div_ceil(1u64 << i) }).sum()
}

/// Codes meeting the bound with equality for one `(m, r, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityWitness {
    pub m: usize,
    pub r: usize,
    pub w: u32,
    pub count: u64,
    /// Every nonzero codeword of the representative has weight `w`.
    pub constant_weight: bool,
    pub representative: LinearEmbedding,
}

impl EqualityWitness {
    /// `true` for the simplex code `[2^r - 1, r, 2^{r-1}]`.
    pub fn is_simplex(&self) -> bool {
        self.r >= 2 && self.m == (1 << self.r) - 1 && self.constant_weight && self.w == 1 << (self.r - 1)
    }
}

impl fmt::Display for EqualityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.is_simplex() { "simplex " } else { "" };
        write!(f, "{name}[{},{},{}] ({} codes)", self.m, self.r, self.w, self.count)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GriesmerReport {
    pub r_max: usize,
    pub m_max: usize,
    pub codes_checked: u64,
    pub violations: Vec<LinearEmbedding>,
    pub equality: Vec<EqualityWitness>,
}

impl GriesmerReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the bound on every full-rank `[m, r]` code with `r <= r_max`,
/// `r <= m <= m_max`, up to column permutation. Each such code has a
/// generator `[I_r | A]`, and the columns of `A` are enumerated as multisets.
pub fn verify_griesmer_exhaustive(r_max: usize, m_max: usize) -> Result<GriesmerReport, CodesError> {
    if r_max > 4 || m_max > 12 {
        return Err(CodesError::Precondition(format!(
            "exhaustive search supports r <= 4 and m <= 12, got r = {r_max}, m = {m_max}"
        )));
    }
    let mut report = GriesmerReport { r_max, m_max, codes_checked: 0, violations: Vec::new(), equality: Vec::new() };
    for r in 1..=r_max {
        for m in r..=m_max {
            let extra = m - r;
            let mut cols = vec![0u32; extra];
            let values = 1u32 << r;
            loop {
                let e = systematic(r, m, &cols)?;
                let w = weight_distribution(&e)?;
                let d = *w.iter().min().expect("r >= 1");
                report.codes_checked += 1;
                let bound = griesmer_min_length(r as u32, u64::from(d));
                if (m as u64) < bound {
                    report.violations.push(e);
                } else if m as u64 == bound {
                    let constant = w.iter().all(|&x| x == d);
                    match report.equality.iter_mut().find(|q| (q.m, q.r, q.w) == (m, r, d)) {
                        Some(q) => q.count += 1,
                        None => report.equality.push(EqualityWitness {
                            m,
                            r,
                            w: d,
                            count: 1,
                            constant_weight: constant,
                            representative: e,
                        }),
                    }
                }
                if !next_multiset(&mut cols, values) {
                    break;
                }
            }
        }
    }
    Ok(report)
}

fn systematic(r: usize, m: usize, cols: &[u32]) -> Result<LinearEmbedding, CodesError> {
    let mut rows = vec![BitRow::zeros(m)?; r];
    for (j, row) in rows.iter_mut().enumerate() {
        row.set(j, true);
        for (k, &c) in cols.iter().enumerate() {
            row.set(r + k, c >> j & 1 == 1);
        }
    }
    LinearEmbedding::new(rows)
}

/// Advances a nondecreasing sequence over `0..values`; `false` when done.
fn next_multiset(cols: &mut [u32], values: u32) -> bool {
    for i in (0..cols.len()).rev() {
        if cols[i] + 1 < values {
            let v = cols[i] + 1;
            for c in cols[i..].iter_mut() {
                *c = v;
            }
            return true;
        }
    }
    false
}

fn ceil_half(x: u64) -> u64 {
    x.div_ceil(2)
}

/// `(⌈c/2⌉, ⌈(n - c + 1)/2⌉)`.
fn alg_lemma_params(n: u64, c: u64) -> (u64, u64) {
    (ceil_half(c), ceil_half(n - c + 1))
}

/// Least integer `r` with `r > ⌈c/2⌉ + log₂⌈(n-c+1)/2⌉`.
pub fn alg_lemma_min_r(n: u64, c: u64) -> u64 {
    let (a, b) = alg_lemma_params(n, c);
    a + u64::from(64 - b.leading_zeros())
}

/// Evaluates `⌊n/2⌋ < Σ_{i<r} ⌈⌈(n-c+1)/2⌉ / 2^{i+1}⌉`, after checking
/// `n >= c >= 2` and `r > ⌈c/2⌉ + log₂⌈(n-c+1)/2⌉`.
pub fn alg_lemma_holds(n: u64, c: u64, r: u64) -> Result<bool, CodesError> {
    if !(n >= c && c >= 2) {
        return Err(CodesError::Precondition(format!("need n >= c >= 2, got n = {n}, c = {c}")));
    }
    let (a, b) = alg_lemma_params(n, c);
    // r > a + log2(b)  <=>  2^(r-a) > b
    let ok = r > a && (r - a >= 64 || 1u64 << (r - a) > b);
    if !ok {
        return Err(CodesError::Precondition(format!("r = {r} does not exceed {a} + log2({b})")));
    }
    let rhs: u64 = (0..r).map(|i| if i + 1 >= 64 { 1 } else { b.div_ceil(1 << (i + 1)) }).sum();
    Ok(n / 2 < rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgLemmaSweep {
    pub n_max: u64,
    pub cases: u64,
    pub violations: Vec<(u64, u64, u64)>,
}

/// Evaluates the lemma for every `2 <= c <= n <= n_max` at the least
/// admissible `r`.
pub fn alg_lemma_sweep(n_max: u64) -> AlgLemmaSweep {
    let mut out = AlgLemmaSweep { n_max, cases: 0, violations: Vec::new() };
    for n in 2..=n_max {
        for c in 2..=n {
            let r = alg_lemma_min_r(n, c);
            out.cases += 1;
            if !alg_lemma_holds(n, c, r).expect("least admissible r satisfies the precondition") {
                out.violations.push((n, c, r));
            }
        }
    }
    out
}

/// Combinatorial shadow of an involution in the torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionCertificate {
    /// Coefficient mask in `Z_2^r`.
    pub element: u32,
    pub image: BitRow,
    pub weight: u32,
    /// Fixed-set codimension, `2 · weight`.
    pub codim: u32,
    /// `weight` is even, so `codim ≡ 0 mod 4`.
    pub even_weight: bool,
    /// `2 · codim <= n - c`.
    pub within_bound: bool,
    /// Set for `τ`: the image vanishes at a coordinate where `σ` does not.
    pub not_contained: Option<bool>,
    /// Set for `τ`: even weight outside the support of `σ`.
    pub even_outside_support: Option<bool>,
}

fn certificate(e: &LinearEmbedding, x: u32, n: u64, c: u64) -> InvolutionCertificate {
    let image = e.image(x);
    let weight = image.weight();
    let codim = 2 * weight;
    InvolutionCertificate {
        element: x,
        image,
        weight,
        codim,
        even_weight: weight.is_multiple_of(2),
        within_bound: 2 * u64::from(codim) + c <= n,
        not_contained: None,
        even_outside_support: None,
    }
}

fn check_length(e: &LinearEmbedding, n: u64, c: u64) -> Result<(), CodesError> {
    if e.m() as u64 != n / 2 {
        return Err(CodesError::Precondition(format!("m = {} but floor(n/2) = {}", e.m(), n / 2)));
    }
    if c > n {
        return Err(CodesError::Precondition(format!("c = {c} exceeds n = {n}")));
    }
    e.check_enumerable()
}

/// Lightest nonzero element of even image weight.
pub fn find_sigma(e: &LinearEmbedding, n: u64, c: u64) -> Result<InvolutionCertificate, CodesError> {
    if e.r() < 2 {
        return Err(CodesError::NoEvenSubspace(e.r()));
    }
    check_length(e, n, c)?;
    let full = BitRow::zeros(e.m())?.complement();
    let parity = e.functional_mask(&full);
    let (_, x) = lightest_in_kernel(e, &[parity]).expect("kernel of one functional has dimension >= 1");
    Ok(certificate(e, x, n, c))
}

/// Lightest nonzero element whose image vanishes at the lowest support
/// coordinate `i` of `σ`, has even weight, and has even weight outside the
/// support of `σ`.
pub fn find_tau(
    e: &LinearEmbedding,
    sigma: &InvolutionCertificate,
    n: u64,
    c: u64,
) -> Result<InvolutionCertificate, CodesError> {
    if e.r() < 4 {
        return Err(CodesError::SubspaceTooSmall(e.r()));
    }
    check_length(e, n, c)?;
    let i = sigma.image.lowest_set_bit().ok_or(CodesError::NoSupport)?;
    let mut coord = BitRow::zeros(e.m())?;
    coord.set(i, true);
    let full = BitRow::zeros(e.m())?.complement();
    let outside = sigma.image.complement();
    let masks = [e.functional_mask(&coord), e.functional_mask(&full), e.functional_mask(&outside)];
    let (_, x) = lightest_in_kernel(e, &masks).expect("kernel of three functionals has dimension >= 1");
    let mut cert = certificate(e, x, n, c);
    cert.not_contained = Some(!cert.image.get(i));
    cert.even_outside_support = Some(cert.image.and(&outside).weight().is_multiple_of(2));
    Ok(cert)
}

/// `2 · |⋃ supp ι(x)|`, the codimension of the common fixed set.
pub fn subgroup_codim(e: &LinearEmbedding, elems: &[u32]) -> u32 {
    let mut acc = BitRow { words: [0; WORDS], len: e.m() };
    for &x in elems {
        acc = acc.or(&e.image(x));
    }
    2 * acc.weight()
}

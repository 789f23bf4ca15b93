//! Exact integer polynomials in one variable `t`.
//!
//! [`IntPoly`] carries signed coefficients and is used for the products of
//! `(1 - t^k)` factors that appear in quotient formulas. [`PoincarePolynomial`]
//! is the nonnegative, optionally truncated kind that holds Betti numbers.

use std::fmt;

use thiserror::Error;

/// Largest degree any polynomial in this crate may reach.
pub const MAX_DEGREE: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("degree {0} exceeds the cap of {MAX_DEGREE}")]
    DegreeCap(usize),
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("negative coefficient at degree {0}")]
    NegativeCoefficient(usize),
    #[error("denominator must be nonzero with constant term 1 or -1")]
    BadDenominator,
    #[error("polynomial is only known through degree {truncation}, degree {degree} requested")]
    Truncated { degree: usize, truncation: usize },
    #[error("operation needs a complete polynomial, this one is truncated at degree {0}")]
    PolynomialTruncated(usize),
}

/// Polynomial with signed machine-integer coefficients, `coeffs[i]` being the
/// coefficient of `t^i`. Trailing zeros are always stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self, SeriesError> {
        strip(&mut coeffs);
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(SeriesError::DegreeCap(coeffs.len() - 1));
        }
        Ok(IntPoly { coeffs })
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Ok(IntPoly::default());
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = 1;
        coeffs[k] = -1;
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> Result<IntPoly, SeriesError> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::default());
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        if len > MAX_DEGREE + 1 {
            return Err(SeriesError::DegreeCap(len - 1));
        }
        let mut out = vec![0i64; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(SeriesError::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(SeriesError::Overflow)?;
            }
        }
        IntPoly::new(out)
    }
}

impl From<&PoincarePolynomial> for IntPoly {
    fn from(p: &PoincarePolynomial) -> Self {
        let mut coeffs: Vec<i64> = p.coeffs.iter().map(|&c| c as i64).collect();
        strip(&mut coeffs);
        IntPoly { coeffs }
    }
}

/// Generating polynomial of Betti numbers: `coeffs[i] = b_i`.
///
/// When `truncation` is `Some(d)` only the degrees `0..=d` are known and any
/// question about a higher degree is an error rather than a silent zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
    truncation: Option<usize>,
}

impl PoincarePolynomial {
    /// Complete polynomial from its coefficients.
    pub fn new(coeffs: Vec<u64>) -> Result<Self, SeriesError> {
        Self::build(coeffs, None)
    }

    /// Polynomial known only through degree `truncation`; higher input
    /// coefficients are dropped.
    pub fn truncated(coeffs: Vec<u64>, truncation: usize) -> Result<Self, SeriesError> {
        Self::build(coeffs, Some(truncation))
    }

    fn build(mut coeffs: Vec<u64>, truncation: Option<usize>) -> Result<Self, SeriesError> {
        if let Some(d) = truncation {
            coeffs.truncate(d.saturating_add(1));
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(SeriesError::DegreeCap(coeffs.len() - 1));
        }
        Ok(PoincarePolynomial { coeffs, truncation })
    }

    pub fn one() -> Self {
        PoincarePolynomial { coeffs: vec![1], truncation: None }
    }

    /// `1 + t^k`, the Poincaré polynomial of `S^k` for `k >= 1`.
    pub fn sphere(k: usize) -> Result<Self, SeriesError> {
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = 1;
        coeffs[k] += 1;
        Self::new(coeffs)
    }

    /// Stored coefficients; entries past the end are zero (or unknown beyond
    /// the truncation degree).
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn is_complete(&self) -> bool {
        self.truncation.is_none()
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> Result<u64, SeriesError> {
        if let Some(truncation) = self.truncation {
            if degree > truncation {
                return Err(SeriesError::Truncated { degree, truncation });
            }
        }
        Ok(self.coeffs.get(degree).copied().unwrap_or(0))
    }

    /// Sum of all coefficients (the Euler characteristic when odd Betti
    /// numbers vanish).
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Human-readable rendering of the terms in `from..=to`, e.g. `t^4 + 2t^8`.
    /// Appends ` + …` when nonzero terms exist beyond `to`.
    pub fn render_terms(&self, from: usize, to: usize) -> String {
        let mut parts = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate().take(to + 1).skip(from) {
            if c == 0 {
                continue;
            }
            parts.push(render_term(c, d));
        }
        let more = self.coeffs.iter().skip(to + 1).any(|&c| c != 0)
            || self.truncation.is_some_and(|t| t > to);
        let mut out = parts.join(" + ");
        if more {
            if out.is_empty() {
                out.push('…');
            } else {
                out.push_str(" + …");
            }
        }
        out
    }
}

fn render_term(c: u64, d: usize) -> String {
    match (c, d) {
        (c, 0) => c.to_string(),
        (1, 1) => "t".into(),
        (c, 1) => format!("{c}t"),
        (1, d) => format!("t^{d}"),
        (c, d) => format!("{c}t^{d}"),
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let terms: Vec<String> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(d, &c)| render_term(c, d))
                .collect();
            write!(f, "{}", terms.join(" + "))?;
        }
        if let Some(d) = self.truncation {
            write!(f, " + O(t^{})", d + 1)?;
        }
        Ok(())
    }
}

fn strip(coeffs: &mut Vec<i64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

/// Coefficient-wise convolution. The result is truncated at the smaller of the
/// two truncation degrees.
pub fn poly_mul(
    a: &PoincarePolynomial,
    b: &PoincarePolynomial,
) -> Result<PoincarePolynomial, SeriesError> {
    let truncation = match (a.truncation, b.truncation) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return PoincarePolynomial::build(Vec::new(), truncation);
    }
    let full_len = a.coeffs.len() + b.coeffs.len() - 1;
    let len = match truncation {
        Some(d) => full_len.min(d + 1),
        None => full_len,
    };
    if len > MAX_DEGREE + 1 {
        return Err(SeriesError::DegreeCap(len - 1));
    }
    let mut out = vec![0u64; len];
    for (i, &x) in a.coeffs.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate().take(len - i) {
            let term = x.checked_mul(y).ok_or(SeriesError::Overflow)?;
            out[i + j] = out[i + j].checked_add(term).ok_or(SeriesError::Overflow)?;
        }
    }
    PoincarePolynomial::build(out, truncation)
}

/// Exact quotient `num / den` by ascending synthetic division.
///
/// The quotient must leave no remainder and have nonnegative coefficients.
pub fn poly_div_exact(num: &IntPoly, den: &IntPoly) -> Result<PoincarePolynomial, SeriesError> {
    let lead = match den.coeffs.first() {
        Some(&c) if c == 1 || c == -1 => c,
        _ => return Err(SeriesError::BadDenominator),
    };
    if num.is_zero() {
        return PoincarePolynomial::new(Vec::new());
    }
    let (n, d) = (num.coeffs.len(), den.coeffs.len());
    if n < d {
        return Err(SeriesError::NonExactDivision);
    }
    let mut rem = num.coeffs.clone();
    let mut quotient = vec![0i64; n - d + 1];
    for i in 0..quotient.len() {
        let q = rem[i] * lead;
        quotient[i] = q;
        if q == 0 {
            continue;
        }
        for (j, &dc) in den.coeffs.iter().enumerate() {
            let term = q.checked_mul(dc).ok_or(SeriesError::Overflow)?;
            rem[i + j] = rem[i + j].checked_sub(term).ok_or(SeriesError::Overflow)?;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(SeriesError::NonExactDivision);
    }
    let mut out = Vec::with_capacity(quotient.len());
    for (i, q) in quotient.into_iter().enumerate() {
        if q < 0 {
            return Err(SeriesError::NegativeCoefficient(i));
        }
        out.push(q as u64);
    }
    PoincarePolynomial::new(out)
}

/// Drops every coefficient above degree `d` and records `d` as the truncation.
pub fn truncate(p: &PoincarePolynomial, d: usize) -> PoincarePolynomial {
    let truncation = Some(p.truncation.map_or(d, |t| t.min(d)));
    let mut coeffs = p.coeffs.clone();
    coeffs.truncate(d + 1);
    PoincarePolynomial::build(coeffs, truncation).expect("truncation cannot grow the degree")
}

/// `coeffs[i] == coeffs[deg - i]` for every `i`.
pub fn is_palindromic(p: &PoincarePolynomial) -> Result<bool, SeriesError> {
    if let Some(d) = p.truncation {
        return Err(SeriesError::PolynomialTruncated(d));
    }
    let c = &p.coeffs;
    Ok(c.iter().eq(c.iter().rev()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(c: &[u64]) -> PoincarePolynomial {
        PoincarePolynomial::new(c.to_vec()).unwrap()
    }

    fn sparse(terms: &[(usize, u64)]) -> PoincarePolynomial {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut c = vec![0; deg + 1];
        for &(d, v) in terms {
            c[d] += v;
        }
        pp(&c)
    }

    fn one_minus(k: usize) -> IntPoly {
        IntPoly::one_minus_t_pow(k).unwrap()
    }

    #[test]
    fn mul_is_kunneth_for_spheres() {
        let s2 = PoincarePolynomial::sphere(2).unwrap();
        let s3 = PoincarePolynomial::sphere(3).unwrap();
        assert_eq!(poly_mul(&s2, &s3).unwrap(), sparse(&[(0, 1), (2, 1), (3, 1), (5, 1)]));
        assert_eq!(poly_mul(&s2, &PoincarePolynomial::one()).unwrap(), s2);
    }

    #[test]
    fn mul_matches_hand_convolution() {
        let a = sparse(&[(0, 1), (4, 1), (8, 1)]);
        let b = sparse(&[(0, 1), (4, 1), (8, 1), (12, 1)]);
        // Degrees add, so the product has degree 8 + 12 = 20 and total 3 * 4.
        let expected = sparse(&[(0, 1), (4, 2), (8, 3), (12, 3), (16, 2), (20, 1)]);
        let product = poly_mul(&a, &b).unwrap();
        assert_eq!(product, expected);
        assert_eq!(product.total(), a.total() * b.total());
    }

    #[test]
    fn mul_keeps_smaller_truncation() {
        let a = PoincarePolynomial::truncated(vec![1, 1, 1, 1], 3).unwrap();
        let b = pp(&[1, 0, 1]);
        let p = poly_mul(&a, &b).unwrap();
        assert_eq!(p.truncation(), Some(3));
        assert_eq!(p.coeffs(), &[1, 1, 2, 2]);
        let c = PoincarePolynomial::truncated(vec![1], 1).unwrap();
        assert_eq!(poly_mul(&a, &c).unwrap().truncation(), Some(1));
    }

    #[test]
    fn mul_rejects_degree_cap() {
        let a = PoincarePolynomial::sphere(600).unwrap();
        assert_eq!(poly_mul(&a, &a), Err(SeriesError::DegreeCap(1200)));
        assert!(PoincarePolynomial::sphere(MAX_DEGREE + 1).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let q = poly_div_exact(&one_minus(24), &one_minus(8)).unwrap();
        assert_eq!(q, sparse(&[(0, 1), (8, 1), (16, 1)]));
        let q = poly_div_exact(&one_minus(12), &one_minus(4)).unwrap();
        assert_eq!(q, sparse(&[(0, 1), (4, 1), (8, 1)]));
        let q = poly_div_exact(&one_minus(4), &one_minus(4)).unwrap();
        assert_eq!(q, PoincarePolynomial::one());
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            poly_div_exact(&one_minus(10), &one_minus(4)),
            Err(SeriesError::NonExactDivision)
        );
        assert_eq!(
            poly_div_exact(&one_minus(4), &one_minus(12)),
            Err(SeriesError::NonExactDivision)
        );
        // (1 - t^2) / 1 has a negative coefficient.
        assert_eq!(
            poly_div_exact(&one_minus(2), &IntPoly::one()),
            Err(SeriesError::NegativeCoefficient(2))
        );
        let two = IntPoly::new(vec![2, 1]).unwrap();
        assert_eq!(poly_div_exact(&one_minus(2), &two), Err(SeriesError::BadDenominator));
        assert_eq!(
            poly_div_exact(&one_minus(2), &IntPoly::default()),
            Err(SeriesError::BadDenominator)
        );
    }

    #[test]
    fn truncate_examples() {
        let p = truncate(&sparse(&[(0, 1), (8, 1), (16, 1)]), 10);
        assert_eq!(p.coeffs(), &[1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(p.truncation(), Some(10));
        assert_eq!(truncate(&PoincarePolynomial::one(), 0).coeffs(), &[1]);
        let p = truncate(&sparse(&[(0, 1), (4, 2), (8, 3)]), 4);
        assert_eq!(p.coeffs(), &[1, 0, 0, 0, 2]);
        assert_eq!(p.coeff(4), Ok(2));
        assert!(matches!(p.coeff(5), Err(SeriesError::Truncated { degree: 5, truncation: 4 })));
    }

    #[test]
    fn palindromes() {
        assert_eq!(is_palindromic(&sparse(&[(0, 1), (4, 1), (8, 1)])), Ok(true));
        assert_eq!(is_palindromic(&sparse(&[(0, 1), (4, 2)])), Ok(false));
        let gr = sparse(&[(0, 1), (4, 1), (8, 2), (12, 2), (16, 2), (20, 1), (24, 1)]);
        assert_eq!(is_palindromic(&gr), Ok(true));
        let t = truncate(&gr, 8);
        assert_eq!(is_palindromic(&t), Err(SeriesError::PolynomialTruncated(8)));
    }

    #[test]
    fn rendering() {
        let p = sparse(&[(0, 1), (4, 1), (8, 2), (12, 1)]);
        assert_eq!(p.render_terms(1, 8), "t^4 + 2t^8 + …");
        assert_eq!(p.render_terms(1, 12), "t^4 + 2t^8 + t^12");
        assert_eq!(p.to_string(), "1 + t^4 + 2t^8 + t^12");
        assert_eq!(truncate(&p, 4).to_string(), "1 + t^4 + O(t^5)");
    }
}

//! Space expressions: factors joined by `x`, optionally two products joined
//! by `#` for a connected sum of equal-dimensional manifolds.

use std::fmt;
use std::str::FromStr;

use symperiod_core::betti::{connected_sum_betti, product_betti, BettiVector};
use symperiod_core::catalog::{IrreducibleSpace, ProductSpace, SpaceKind};

use crate::CliError;

#[derive(Debug, Clone)]
pub enum SpaceExpression {
    Product(ProductSpace),
    ConnectedSum(ProductSpace, ProductSpace),
}

fn parse_product(s: &str) -> Result<ProductSpace, CliError> {
    let mut factors = Vec::new();
    for token in split_factors(s) {
        let token = token.trim();
        if token.is_empty() {
            return Err(CliError::Parse(format!("empty factor in {s:?}")));
        }
        let kind: SpaceKind = token.parse().map_err(|e| CliError::Parse(format!("{token}: {e}")))?;
        let space = IrreducibleSpace::new(kind).map_err(|e| CliError::Parse(format!("{token}: {e}")))?;
        factors.push(space);
    }
    Ok(ProductSpace::new(factors))
}

/// Splits on the product sign `x` (or `×`) only where it stands between
/// factors, so names such as `EIX` and `group:E8` stay intact.
fn split_factors(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut start = 0;
    let mut depth = 0usize;
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    for (k, &(i, ch)) in chars.iter().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            'x' | '×' if depth == 0 => {
                let before = chars[..k].iter().rev().find(|(_, c)| !c.is_whitespace());
                let spaced_before = k > 0 && chars[k - 1].1.is_whitespace();
                let spaced_after = chars.get(k + 1).is_none_or(|(_, c)| c.is_whitespace());
                if before.is_some() && ((spaced_before && spaced_after) || ch == '×') {
                    parts.push(&s[start..i]);
                    start = i + ch.len_utf8();
                }
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for SpaceExpression {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pieces: Vec<&str> = s.split('#').collect();
        match pieces.as_slice() {
            [one] => Ok(SpaceExpression::Product(parse_product(one)?)),
            [a, b] => {
                let (a, b) = (parse_product(a)?, parse_product(b)?);
                if a.dim() != b.dim() {
                    return Err(CliError::Parse(format!(
                        "connected sum needs equal dimensions, got {} and {}",
                        a.dim(),
                        b.dim()
                    )));
                }
                Ok(SpaceExpression::ConnectedSum(a, b))
            }
            _ => Err(CliError::Parse("connected sum takes exactly two summands".into())),
        }
    }
}

impl SpaceExpression {
    pub fn dim(&self) -> u32 {
        match self {
            SpaceExpression::Product(p) | SpaceExpression::ConnectedSum(p, _) => p.dim(),
        }
    }

    /// Betti numbers through degree `d`.
    pub fn betti(&self, d: usize) -> Result<BettiVector, CliError> {
        let data = |e: symperiod_core::betti::BettiError| CliError::Data(e.to_string());
        match self {
            SpaceExpression::Product(p) => product_betti(&p.factors, d).map_err(data),
            SpaceExpression::ConnectedSum(a, b) => {
                let n = a.dim() as usize;
                let va = product_betti(&a.factors, n).map_err(data)?;
                let vb = product_betti(&b.factors, n).map_err(data)?;
                let sum = connected_sum_betti(&va, &vb, n).map_err(data)?;
                Ok(sum.truncated(d))
            }
        }
    }
}

impl fmt::Display for SpaceExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpression::Product(p) => write!(f, "{p}"),
            SpaceExpression::ConnectedSum(a, b) => write!(f, "{a} # {b}"),
        }
    }
}

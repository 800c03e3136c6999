use std::fmt;
use std::str::FromStr;

use crate::expr::Expr;

use super::CalcError;

/// Where each subinterval is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Left,
    Right,
    Midpoint,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Left => "left",
            Rule::Right => "right",
            Rule::Midpoint => "midpoint",
        }
    }

    /// Sample point of subinterval `i` out of `n` on `[a, b]`; scaling the
    /// whole width keeps the points free of accumulated step error.
    fn sample(self, a: f64, b: f64, n: usize, i: usize) -> f64 {
        let (num, den) = match self {
            Rule::Left => (2 * i, 2 * n),
            Rule::Right => (2 * i + 2, 2 * n),
            Rule::Midpoint => (2 * i + 1, 2 * n),
        };
        a + (b - a) * num as f64 / den as f64
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Rule::Left),
            "right" => Ok(Rule::Right),
            "midpoint" | "mid" => Ok(Rule::Midpoint),
            other => Err(format!(
                "unknown rule '{other}' (expected left, right or midpoint)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannRow {
    pub x: f64,
    pub delta_x: f64,
    pub fx: f64,
    pub product: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RiemannResult {
    pub rows: Vec<RiemannRow>,
    pub total: f64,
    pub rule: Rule,
    pub n: usize,
}

/// Riemann sum of `f` over `[a, b]` with `n` equal subintervals.
///
/// Every sample point must be in the domain of `f`; the first that is not
/// aborts the sum.
pub fn riemann_sum(
    f: &Expr,
    a: f64,
    b: f64,
    n: usize,
    rule: Rule,
) -> Result<RiemannResult, CalcError> {
    if n == 0 {
        return Err(CalcError::NoSubintervals);
    }
    if a >= b || !a.is_finite() || !b.is_finite() {
        return Err(CalcError::EmptyRange { start: a, end: b });
    }
    let dx = (b - a) / n as f64;
    let rows = (0..n)
        .map(|i| {
            // pin the closing endpoint so the last right sample is exactly b
            let x = if rule == Rule::Right && i + 1 == n {
                b
            } else {
                rule.sample(a, b, n, i)
            };
            let fx = f.eval(x)?;
            Ok(RiemannRow {
                x,
                delta_x: dx,
                fx,
                product: fx * dx,
            })
        })
        .collect::<Result<Vec<_>, CalcError>>()?;
    let total = rows.iter().map(|r| r.product).sum();
    Ok(RiemannResult {
        rows,
        total,
        rule,
        n,
    })
}

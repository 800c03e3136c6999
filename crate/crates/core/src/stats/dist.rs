//! Student's t and Fisher's F distributions.

use std::f64::consts::PI;

use super::special::{inc_beta_pair, ln_beta, ln_gamma_pos};
use super::StatsError;

const INVERSE_TOL: f64 = 1e-12;
const INVERSE_MAX_ITER: usize = 200;

fn check_df(df: f64, what: &str) -> Result<(), StatsError> {
    if df > 0.0 && df.is_finite() {
        Ok(())
    } else {
        Err(StatsError::InvalidDegreesOfFreedom(format!(
            "{what} = {df}"
        )))
    }
}

fn check_probability(p: f64) -> Result<(), StatsError> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(StatsError::InvalidProbability(p))
    }
}

/// `P(T <= t)` for Student's t with `df` degrees of freedom.
pub fn t_cdf(t: f64, df: f64) -> Result<f64, StatsError> {
    check_df(df, "df")?;
    if t.is_nan() {
        return Err(StatsError::InvalidParameter("t is NaN".into()));
    }
    if t.is_infinite() {
        return Ok(if t > 0.0 { 1.0 } else { 0.0 });
    }
    let t2 = t * t;
    let (x, y) = (df / (df + t2), t2 / (df + t2));
    let (tail, _) = inc_beta_pair(df / 2.0, 0.5, x, y)?;
    let half = 0.5 * tail;
    Ok(if t <= 0.0 { half } else { 1.0 - half })
}

fn t_pdf(t: f64, df: f64) -> f64 {
    let ln = ln_gamma_pos((df + 1.0) / 2.0)
        - ln_gamma_pos(df / 2.0)
        - 0.5 * (df * PI).ln()
        - (df + 1.0) / 2.0 * (t * t / df).ln_1p();
    ln.exp()
}

/// Quantile of Student's t: the `t` with `t_cdf(t, df) = p`.
pub fn t_inverse(p: f64, df: f64) -> Result<f64, StatsError> {
    check_df(df, "df")?;
    check_probability(p)?;
    if p == 0.5 {
        return Ok(0.0);
    }
    invert(p, f64::NEG_INFINITY, |t| t_cdf(t, df), |t| t_pdf(t, df))
}

/// `P(X <= f)` for Fisher's F with `(d1, d2)` degrees of freedom.
pub fn f_cdf(f: f64, d1: f64, d2: f64) -> Result<f64, StatsError> {
    f_tails(f, d1, d2).map(|(lower, _)| lower)
}

/// `P(X > f)`, computed directly rather than as `1 - f_cdf`.
pub fn f_sf(f: f64, d1: f64, d2: f64) -> Result<f64, StatsError> {
    f_tails(f, d1, d2).map(|(_, upper)| upper)
}

fn f_tails(f: f64, d1: f64, d2: f64) -> Result<(f64, f64), StatsError> {
    check_df(d1, "d1")?;
    check_df(d2, "d2")?;
    if f.is_nan() || f < 0.0 {
        return Err(StatsError::InvalidParameter(format!(
            "F statistic must be non-negative, got {f}"
        )));
    }
    if f.is_infinite() {
        return Ok((1.0, 0.0));
    }
    let denom = d1 * f + d2;
    inc_beta_pair(d1 / 2.0, d2 / 2.0, d1 * f / denom, d2 / denom)
}

fn f_pdf(f: f64, d1: f64, d2: f64) -> f64 {
    if f <= 0.0 {
        return 0.0;
    }
    let ln = 0.5 * (d1 * d1.ln() + d2 * d2.ln()) + (d1 / 2.0 - 1.0) * f.ln()
        - (d1 + d2) / 2.0 * (d1 * f + d2).ln()
        - ln_beta(d1 / 2.0, d2 / 2.0);
    ln.exp()
}

/// Quantile of Fisher's F: the `f` with `f_cdf(f, d1, d2) = p`.
pub fn f_inverse(p: f64, d1: f64, d2: f64) -> Result<f64, StatsError> {
    check_df(d1, "d1")?;
    check_df(d2, "d2")?;
    check_probability(p)?;
    invert(p, 0.0, |f| f_cdf(f, d1, d2), |f| f_pdf(f, d1, d2))
}

/// Solves `cdf(x) = p` for a continuous, strictly increasing CDF whose
/// support starts at `lower` (may be -inf). Brackets the root by doubling
/// outward from [-1, 1] (clipped to the support), then runs Newton steps
/// with the density, falling back to bisection whenever a step leaves the
/// bracket.
fn invert(
    p: f64,
    lower: f64,
    cdf: impl Fn(f64) -> Result<f64, StatsError>,
    pdf: impl Fn(f64) -> f64,
) -> Result<f64, StatsError> {
    let mut lo = lower.max(-1.0);
    let mut hi = 1.0;
    while cdf(hi)? < p {
        lo = hi;
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(StatsError::NoConvergence("quantile bracket (upper)".into()));
        }
    }
    if lo > lower {
        while cdf(lo)? > p {
            hi = lo;
            lo *= 2.0;
            if !lo.is_finite() {
                return Err(StatsError::NoConvergence("quantile bracket (lower)".into()));
            }
        }
    }

    let mut x = 0.5 * (lo + hi);
    for _ in 0..INVERSE_MAX_ITER {
        let err = cdf(x)? - p;
        if err == 0.0 {
            return Ok(x);
        }
        if err < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let density = pdf(x);
        let newton = x - err / density;
        let next = if density > 0.0 && newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= INVERSE_TOL * (1.0 + x.abs())
            || hi - lo <= INVERSE_TOL * (1.0 + x.abs())
        {
            return Ok(next);
        }
        x = next;
    }
    Err(StatsError::NoConvergence("quantile search".into()))
}

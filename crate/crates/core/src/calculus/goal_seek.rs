use crate::expr::Expr;

use super::CalcError;

/// Offsets tried around `x0` when the function is undefined exactly there.
const START_NUDGE: f64 = 1e-4;
/// Step halvings tried before a Newton/secant step is taken unconditionally.
const MAX_HALVINGS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoalSeekOptions {
    /// Convergence threshold on `|f(x) - target|`.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for GoalSeekOptions {
    fn default() -> Self {
        GoalSeekOptions {
            tolerance: 1e-9,
            max_iterations: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoalSeekResult {
    pub x: f64,
    /// `f(x) - target` at the returned `x`.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Every accepted iterate, starting with the (possibly nudged) start point.
    pub history: Vec<f64>,
}

/// Searches for `x` with `f(x) = target`, starting from `x0`.
///
/// Each iteration takes a Newton step using the symbolic derivative, or a
/// secant step when the derivative vanishes or is undefined. Steps are
/// halved until `|f(x) - target|` decreases, which keeps the search in the
/// basin of the root nearest the start. Running out of iterations is
/// reported through `converged = false`, not as an error.
pub fn goal_seek(
    f: &Expr,
    target: f64,
    x0: f64,
    opts: GoalSeekOptions,
) -> Result<GoalSeekResult, CalcError> {
    if !(opts.tolerance > 0.0 && opts.tolerance.is_finite()) {
        return Err(CalcError::InvalidTolerance(opts.tolerance));
    }
    let g = |x: f64| f.eval(x).map(|v| v - target);
    let slope_fn = f.derivative();

    let (mut x, mut gx) = match g(x0) {
        Ok(v) => (x0, v),
        Err(source) => [x0 + START_NUDGE, x0 - START_NUDGE]
            .into_iter()
            .find_map(|x| g(x).ok().map(|v| (x, v)))
            .ok_or(CalcError::CannotStart { x0, source })?,
    };
    let mut history = vec![x];
    let mut prev: Option<(f64, f64)> = None;
    let mut iterations = 0;

    let done = |x, gx: f64, iterations, converged, history| GoalSeekResult {
        x,
        residual: gx,
        iterations,
        converged,
        history,
    };

    loop {
        if gx.abs() <= opts.tolerance {
            return Ok(done(x, gx, iterations, true, history));
        }
        if iterations >= opts.max_iterations {
            return Ok(done(x, gx, iterations, false, history));
        }

        let Some(slope) = newton_slope(&slope_fn, x)
            .or_else(|| secant_slope(prev, x, gx))
            .or_else(|| probe_slope(&g, x, gx))
        else {
            // flat everywhere we can see: no step is possible
            return Ok(done(x, gx, iterations, false, history));
        };

        let full = -gx / slope;
        let mut step = full;
        let mut accepted = None;
        let mut fallback = None;
        for _ in 0..MAX_HALVINGS {
            let xn = x + step;
            if xn == x || !xn.is_finite() {
                break;
            }
            if let Ok(gn) = g(xn) {
                if gn.abs() < gx.abs() {
                    accepted = Some((xn, gn));
                    break;
                }
                fallback.get_or_insert((xn, gn));
            }
            step *= 0.5;
        }
        // No decrease anywhere along the step: move anyway so that a
        // root-free function runs out the iteration budget instead of stalling.
        let Some((xn, gn)) = accepted.or(fallback) else {
            return Ok(done(x, gx, iterations, false, history));
        };

        prev = Some((x, gx));
        x = xn;
        gx = gn;
        history.push(x);
        iterations += 1;
    }
}

fn usable(slope: f64) -> Option<f64> {
    (slope.is_finite() && slope != 0.0).then_some(slope)
}

fn newton_slope(df: &Expr, x: f64) -> Option<f64> {
    df.eval(x).ok().and_then(usable)
}

fn secant_slope(prev: Option<(f64, f64)>, x: f64, gx: f64) -> Option<f64> {
    let (xp, gp) = prev?;
    if xp == x {
        return None;
    }
    usable((gx - gp) / (x - xp))
}

fn probe_slope(
    g: &impl Fn(f64) -> Result<f64, crate::expr::DomainError>,
    x: f64,
    gx: f64,
) -> Option<f64> {
    // widen the probe until the change in g survives rounding
    (0..8)
        .map(|k| 1e-7 * 10f64.powi(k) * (1.0 + x.abs()))
        .find_map(|h| {
            [x + h, x - h]
                .into_iter()
                .find_map(|xh| g(xh).ok().and_then(|gh| usable((gh - gx) / (xh - x))))
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Minimum,
    Maximum,
    Inconclusive,
}

impl ExtremumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremumKind::Minimum => "minimum",
            ExtremumKind::Maximum => "maximum",
            ExtremumKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremumReport {
    pub x: f64,
    pub fx: f64,
    pub kind: ExtremumKind,
    pub second_derivative: f64,
    /// Whether the stationary-point search converged. When false, `kind` is
    /// always `Inconclusive` and `x` is the last iterate.
    pub converged: bool,
    pub iterations: usize,
}

/// Locates a stationary point of `f` near `x0` and classifies it by the sign
/// of the second derivative.
pub fn find_extremum(f: &Expr, x0: f64) -> Result<ExtremumReport, CalcError> {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let seek = goal_seek(&d1, 0.0, x0, GoalSeekOptions::default())?;
    let x = seek.x;
    let fx = f.eval(x)?;
    let second_derivative = d2.eval(x)?;
    let eps = 1e-8 * (1.0 + fx.abs());
    let kind = if !seek.converged {
        ExtremumKind::Inconclusive
    } else if second_derivative > eps {
        ExtremumKind::Minimum
    } else if second_derivative < -eps {
        ExtremumKind::Maximum
    } else {
        ExtremumKind::Inconclusive
    };
    Ok(ExtremumReport {
        x,
        fx,
        kind,
        second_derivative,
        converged: seek.converged,
        iterations: seek.iterations,
    })
}

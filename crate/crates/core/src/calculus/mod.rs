//! Root finding, extremum search, tabulation and Riemann sums over [`Expr`].

mod goal_seek;
mod riemann;

use thiserror::Error;

use crate::expr::{DomainError, Expr};

pub use goal_seek::{
    find_extremum, goal_seek, ExtremumKind, ExtremumReport, GoalSeekOptions, GoalSeekResult,
};
pub use riemann::{riemann_sum, RiemannResult, RiemannRow, Rule};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CalcError {
    #[error("step must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("empty range: start {start} is not below end {end}")]
    EmptyRange { start: f64, end: f64 },
    #[error("number of subintervals must be at least 1")]
    NoSubintervals,
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("cannot start: function undefined at and around x0 = {x0}: {source}")]
    CannotStart { x0: f64, source: DomainError },
    #[error(transparent)]
    Domain(#[from] DomainError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub x: f64,
    pub y: Result<f64, DomainError>,
}

/// Function values on an evenly spaced grid. Points where the function is
/// undefined stay in the table with their error.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionTable {
    pub rows: Vec<TableRow>,
    pub step: f64,
}

impl FunctionTable {
    /// Row with the smallest defined value.
    pub fn min_row(&self) -> Option<(f64, f64)> {
        self.rows
            .iter()
            .filter_map(|r| r.y.as_ref().ok().map(|y| (r.x, *y)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

const GRID_SLACK: f64 = 1e-9;

/// Evaluates `f` at `start, start + step, ...`, including `end` when the
/// range is a whole number of steps (within 1e-9).
pub fn tabulate(f: &Expr, start: f64, end: f64, step: f64) -> Result<FunctionTable, CalcError> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(CalcError::InvalidStep(step));
    }
    if start >= end || !start.is_finite() || !end.is_finite() {
        return Err(CalcError::EmptyRange { start, end });
    }
    let span = (end - start) / step;
    let whole = span.round();
    let (count, hits_end) = if (span - whole).abs() <= GRID_SLACK {
        (whole as usize, true)
    } else {
        (span.floor() as usize, false)
    };
    let rows = (0..=count)
        .map(|i| {
            let x = if hits_end && i == count {
                end
            } else {
                start + i as f64 * step
            };
            TableRow { x, y: f.eval(x) }
        })
        .collect();
    Ok(FunctionTable { rows, step })
}

/// Central difference `(f(x + h) - f(x - h)) / 2h`.
///
/// `h` is snapped to the nearest power of two and the quotient uses the
/// spacing actually represented, which removes most rounding in `x +- h`.
pub fn numeric_derivative(f: &Expr, x: f64, h: f64) -> Result<f64, DomainError> {
    let h = if h > 0.0 && h.is_finite() {
        2f64.powi(h.log2().round() as i32)
    } else {
        h
    };
    let (hi, lo) = (x + h, x - h);
    Ok((f.eval(hi)? - f.eval(lo)?) / (hi - lo))
}

pub const DEFAULT_DIFF_STEP: f64 = 1e-6;

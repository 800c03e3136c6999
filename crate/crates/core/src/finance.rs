//! Compound-interest schedules.
//!
//! Balances are carried at full precision; rounding to cents is a display
//! concern handled by [`format_money`].

use std::collections::BTreeMap;

use chrono::{Months, NaiveDate};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FinanceError {
    #[error("periods per year must be at least 1")]
    ZeroPeriodsPerYear,
    #[error("principal must be a non-negative amount, got {0}")]
    InvalidPrincipal(f64),
    #[error("rate must be finite, got {0}")]
    InvalidRate(f64),
    #[error("deposit for period {period} must be a non-negative amount, got {amount}")]
    InvalidDeposit { period: usize, amount: f64 },
    #[error("deposit scheduled for period {period}, but periods run 1..={num_periods}")]
    UnknownDepositPeriod { period: usize, num_periods: usize },
    #[error("{periods_per_year} periods per year is not a whole number of months; dates need 1, 2, 3, 4, 6 or 12")]
    NonMonthlyPeriod { periods_per_year: u32 },
    #[error("date {0} is out of range")]
    DateOverflow(NaiveDate),
}

/// Per-period rate for an annual rate compounded `periods_per_year` times.
pub fn period_rate(annual_rate: f64, periods_per_year: u32) -> Result<f64, FinanceError> {
    if periods_per_year == 0 {
        return Err(FinanceError::ZeroPeriodsPerYear);
    }
    Ok(annual_rate / periods_per_year as f64)
}

/// Closed-form balance `principal * (1 + rate)^periods`.
pub fn future_value(principal: f64, period_rate: f64, num_periods: u32) -> f64 {
    principal * (1.0 + period_rate).powf(num_periods as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleRow {
    pub period: usize,
    pub label: String,
    pub deposit: f64,
    pub interest: f64,
    pub balance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterestSchedule {
    pub rows: Vec<ScheduleRow>,
    pub period_rate: f64,
}

impl InterestSchedule {
    pub fn final_balance(&self) -> f64 {
        self.rows.last().map_or(0.0, |r| r.balance)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScheduleParams {
    pub principal: f64,
    pub annual_rate: f64,
    pub periods_per_year: u32,
    pub num_periods: usize,
    /// Date of the opening deposit. Without it rows are labelled `P0`, `P1`, ...
    pub start: Option<NaiveDate>,
    /// Additional deposits keyed by period (1-based; period 0 is the principal).
    pub extra_deposits: BTreeMap<usize, f64>,
}

/// Builds the period-by-period schedule: row 0 holds the principal, and each
/// later row earns `previous balance * period rate` plus any deposit.
pub fn compound_schedule(params: &ScheduleParams) -> Result<InterestSchedule, FinanceError> {
    let rate = period_rate(params.annual_rate, params.periods_per_year)?;
    if !(params.principal >= 0.0 && params.principal.is_finite()) {
        return Err(FinanceError::InvalidPrincipal(params.principal));
    }
    if !params.annual_rate.is_finite() {
        return Err(FinanceError::InvalidRate(params.annual_rate));
    }
    for (&period, &amount) in &params.extra_deposits {
        if period == 0 || period > params.num_periods {
            return Err(FinanceError::UnknownDepositPeriod {
                period,
                num_periods: params.num_periods,
            });
        }
        if !(amount >= 0.0 && amount.is_finite()) {
            return Err(FinanceError::InvalidDeposit { period, amount });
        }
    }
    let step_months = match params.start {
        Some(_) if 12 % params.periods_per_year != 0 => {
            return Err(FinanceError::NonMonthlyPeriod {
                periods_per_year: params.periods_per_year,
            })
        }
        _ => 12 / params.periods_per_year,
    };

    let label = |k: usize| -> Result<String, FinanceError> {
        match params.start {
            // offset from the start each time, so a 31st clamps per row without drifting
            Some(start) => u32::try_from(k)
                .ok()
                .and_then(|k| k.checked_mul(step_months))
                .and_then(|m| start.checked_add_months(Months::new(m)))
                .map(|d| d.format("%Y-%m-%d").to_string())
                .ok_or(FinanceError::DateOverflow(start)),
            None => Ok(format!("P{k}")),
        }
    };

    let mut rows = Vec::with_capacity(params.num_periods + 1);
    rows.push(ScheduleRow {
        period: 0,
        label: label(0)?,
        deposit: params.principal,
        interest: 0.0,
        balance: params.principal,
    });
    let mut balance = params.principal;
    for k in 1..=params.num_periods {
        let interest = balance * rate;
        let deposit = params.extra_deposits.get(&k).copied().unwrap_or(0.0);
        balance = balance + interest + deposit;
        rows.push(ScheduleRow {
            period: k,
            label: label(k)?,
            deposit,
            interest,
            balance,
        });
    }
    Ok(InterestSchedule {
        rows,
        period_rate: rate,
    })
}

/// Two-decimal display of a currency amount.
pub fn format_money(amount: f64) -> String {
    let s = format!("{amount:.2}");
    // -0.00 reads as a withdrawal that never happened
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

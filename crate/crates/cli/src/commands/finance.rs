use std::collections::BTreeMap;

use chrono::NaiveDate;
use clap::Args;
use deskcalc_core::finance::{compound_schedule, format_money, ScheduleParams};

use crate::error::CliError;
use crate::format::{csv_text, Table};
use crate::{Format, OutputArgs, Report};

#[derive(Args)]
pub struct InterestArgs {
    /// Opening deposit
    #[arg(long)]
    pub principal: f64,
    /// Annual rate as a fraction (0.04 for 4%)
    #[arg(long)]
    pub rate: f64,
    /// Compounding periods per year (4 for quarterly)
    #[arg(long)]
    pub periods_per_year: u32,
    /// Number of compounding periods after the opening deposit
    #[arg(long)]
    pub n: usize,
    /// Date of the opening deposit, YYYY-MM-DD
    #[arg(long)]
    pub start: Option<NaiveDate>,
    /// Extra deposit as PERIOD=AMOUNT (repeatable)
    #[arg(long = "deposit", value_parser = parse_deposit)]
    pub deposits: Vec<(usize, f64)>,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_deposit(s: &str) -> Result<(usize, f64), String> {
    let (period, amount) = s
        .split_once('=')
        .ok_or_else(|| format!("expected PERIOD=AMOUNT, got '{s}'"))?;
    let period = period
        .trim()
        .parse()
        .map_err(|_| format!("'{period}' is not a period number"))?;
    let amount = amount
        .trim()
        .parse()
        .map_err(|_| format!("'{amount}' is not an amount"))?;
    Ok((period, amount))
}

pub fn interest(a: &InterestArgs) -> Result<Report, CliError> {
    let format = a.out.format("interest", &[Format::Table, Format::Csv])?;
    let mut extra_deposits = BTreeMap::new();
    for &(period, amount) in &a.deposits {
        *extra_deposits.entry(period).or_insert(0.0) += amount;
    }
    let schedule = compound_schedule(&ScheduleParams {
        principal: a.principal,
        annual_rate: a.rate,
        periods_per_year: a.periods_per_year,
        num_periods: a.n,
        start: a.start,
        extra_deposits,
    })?;

    // blank cells as on a bank statement: no interest on the opening row,
    // no deposit on rows without one
    let cells = schedule.rows.iter().map(|r| {
        let deposit = if r.period == 0 || r.deposit != 0.0 {
            format_money(r.deposit)
        } else {
            String::new()
        };
        let interest = if r.period == 0 {
            String::new()
        } else {
            format_money(r.interest)
        };
        (r, deposit, interest, format_money(r.balance))
    });

    let text = match format {
        Format::Csv => {
            let mut records = vec![vec![
                "period".to_string(),
                "label".into(),
                "deposit".into(),
                "interest".into(),
                "balance".into(),
            ]];
            records.extend(
                cells.map(|(r, d, i, b)| vec![r.period.to_string(), r.label.clone(), d, i, b]),
            );
            csv_text(records)?
        }
        _ => {
            let first = if a.start.is_some() { "Date" } else { "Period" };
            let mut t = Table::new([first, "Deposits", "Interest", "Balance"]);
            for (r, d, i, b) in cells {
                t.row([r.label.clone(), d, i, b]);
            }
            t.render()
        }
    };
    Ok(text.into())
}

//! `deskcalc`: spreadsheet-style calculations from the command line.

mod commands;
mod error;
mod format;
mod input;
mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{calculus, finance, stats};
use error::CliError;

#[derive(Parser)]
#[command(
    name = "deskcalc",
    version,
    about = "Spreadsheet-style calculations: goal seek, \
Riemann sums, compound interest, t-tests, ANOVA and box plots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find x with f(x) = target, starting from x0
    #[command(allow_negative_numbers = true)]
    Goalseek(calculus::GoalSeekArgs),
    /// Find and classify a stationary point of f near x0
    #[command(allow_negative_numbers = true)]
    Minimize(calculus::MinimizeArgs),
    /// Riemann sum of f over [a, b]
    #[command(allow_negative_numbers = true)]
    Riemann(calculus::RiemannArgs),
    /// Table of f on an evenly spaced grid
    #[command(allow_negative_numbers = true)]
    Tabulate(calculus::GridArgs),
    /// SVG line chart of f on an evenly spaced grid
    #[command(allow_negative_numbers = true)]
    Plot(calculus::GridArgs),
    /// Compound-interest schedule
    #[command(allow_negative_numbers = true)]
    Interest(finance::InterestArgs),
    /// Two-sample t-test assuming unequal variances
    #[command(allow_negative_numbers = true)]
    Ttest(stats::TTestArgs),
    /// One-way analysis of variance
    #[command(allow_negative_numbers = true)]
    Anova(stats::AnovaArgs),
    /// Per-group quartiles (q1, min, median, max, q3)
    Summary(stats::SummaryArgs),
    /// SVG box plot, one box per group
    Boxplot(stats::SummaryArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Svg,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Output format [default: svg for plot and boxplot, csv for tabulate, table otherwise]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

impl OutputArgs {
    /// The requested format, checked against what the subcommand can emit.
    pub fn format(&self, command: &str, allowed: &[Format]) -> Result<Format, CliError> {
        match self.format {
            None => Ok(allowed[0]),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(CliError::Usage(format!(
                "{command} cannot emit --format {}",
                f.to_possible_value().expect("not skipped").get_name()
            ))),
        }
    }
}

/// What a command produced. `failure` is set when the output is a partial
/// result that should still be shown, such as a search that did not converge.
pub struct Report {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Report {
    fn from(text: String) -> Report {
        Report {
            text,
            failure: None,
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) if path.as_os_str() != "-" => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    let (report, out) = match command {
        Command::Goalseek(a) => (calculus::goalseek(&a)?, a.out),
        Command::Minimize(a) => (calculus::minimize(&a)?, a.out),
        Command::Riemann(a) => (calculus::riemann(&a)?, a.out),
        Command::Tabulate(a) => (calculus::tabulate(&a)?, a.out),
        Command::Plot(a) => (calculus::plot(&a)?, a.out),
        Command::Interest(a) => (finance::interest(&a)?, a.out),
        Command::Ttest(a) => (stats::ttest(&a)?, a.out),
        Command::Anova(a) => (stats::anova(&a)?, a.out),
        Command::Summary(a) => (stats::summary(&a)?, a.out),
        Command::Boxplot(a) => (stats::boxplot(&a)?, a.out),
    };
    emit(&report.text, out.output.as_ref())?;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(Report { failure: None, .. }) => ExitCode::SUCCESS,
        Ok(Report {
            failure: Some(e), ..
        })
        | Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

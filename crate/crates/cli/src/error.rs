use std::process::ExitCode;

use deskcalc_core::calculus::CalcError;
use deskcalc_core::expr::ParseError;
use deskcalc_core::finance::FinanceError;
use deskcalc_core::stats::StatsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable input, or an argument outside its allowed range.
    #[error("{0}")]
    Usage(String),
    /// The computation itself failed: a domain error or a degenerate sample.
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    NoConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(1),
            CliError::Domain(_) => ExitCode::from(2),
            CliError::NoConvergence(_) => ExitCode::from(3),
        }
    }

    /// Parse failure, shown with the offending text and a caret.
    pub fn parse(flag: &str, text: &str, err: &ParseError) -> CliError {
        CliError::Usage(format!(
            "cannot parse {flag}: {err}\n  {text}\n  {}^",
            " ".repeat(err.position)
        ))
    }
}

impl From<CalcError> for CliError {
    fn from(e: CalcError) -> Self {
        match e {
            CalcError::CannotStart { .. } | CalcError::Domain(_) => CliError::Domain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        match e {
            StatsError::ZeroVariance | StatsError::ZeroWithinVariance => {
                CliError::Domain(e.to_string())
            }
            StatsError::NoConvergence(_) => CliError::NoConvergence(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FinanceError> for CliError {
    fn from(e: FinanceError) -> Self {
        match e {
            FinanceError::DateOverflow(_) => CliError::Domain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(format!("CSV: {e}"))
    }
}

pub mod calculus;
pub mod finance;
pub mod stats;

use deskcalc_core::{parse, Expr};

use crate::error::CliError;

fn parse_fn(text: &str) -> Result<Expr, CliError> {
    parse(text).map_err(|e| CliError::parse("--fn", text, &e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

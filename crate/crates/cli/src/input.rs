//! Long-format `group,value` CSV input.

use std::fs::File;
use std::io::{self, Read};
use std::path::Path;

use deskcalc_core::stats::Sample;

use crate::error::CliError;

/// Opens `path` for reading; `-` means standard input.
fn open(path: &Path) -> Result<Box<dyn Read>, CliError> {
    if path == Path::new("-") {
        return Ok(Box::new(io::stdin().lock()));
    }
    File::open(path)
        .map(|f| Box::new(f) as Box<dyn Read>)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Reads samples from a CSV with `group` and `value` columns, in the order
/// groups first appear.
pub fn read_groups(path: &Path) -> Result<Vec<Sample>, CliError> {
    parse_groups(open(path)?)
}

pub fn parse_groups(reader: impl Read) -> Result<Vec<Sample>, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or_else(|| CliError::Usage(format!("CSV header has no '{name}' column")))
    };
    let (gi, vi) = (column("group")?, column("value")?);

    let mut samples: Vec<Sample> = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let group = record.get(gi).unwrap_or("");
        let raw = record.get(vi).unwrap_or("");
        if group.is_empty() {
            return Err(CliError::Usage(format!("line {line}: empty group")));
        }
        let value: f64 = raw
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite())
            .ok_or_else(|| CliError::Usage(format!("line {line}: '{raw}' is not a number")))?;
        match samples.iter_mut().find(|s| s.label == group) {
            Some(s) => s.values.push(value),
            None => samples.push(Sample::new(group, vec![value])),
        }
    }
    if samples.is_empty() {
        return Err(CliError::Usage("CSV has no data rows".into()));
    }
    Ok(samples)
}

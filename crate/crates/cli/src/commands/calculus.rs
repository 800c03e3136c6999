use clap::Args;
use deskcalc_core::calculus::{
    self, find_extremum, goal_seek, riemann_sum, ExtremumKind, GoalSeekOptions, Rule,
};

use super::{parse_fn, yes_no};
use crate::error::CliError;
use crate::format::{csv_text, full, num, Table};
use crate::{svg, Format, OutputArgs, Report};

#[derive(Args)]
pub struct GoalSeekArgs {
    /// Function of x, e.g. "42 - 16800/x^2"
    #[arg(long = "fn")]
    pub function: String,
    /// Value f(x) should reach
    #[arg(long, default_value_t = 0.0)]
    pub target: f64,
    /// Starting value
    #[arg(long)]
    pub x0: f64,
    /// Stop once |f(x) - target| is at most this
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn goalseek(a: &GoalSeekArgs) -> Result<Report, CliError> {
    let format = a.out.format("goalseek", &[Format::Table, Format::Csv])?;
    let f = parse_fn(&a.function)?;
    let opts = GoalSeekOptions {
        tolerance: a.tol,
        max_iterations: a.max_iter,
    };
    let r = goal_seek(&f, a.target, a.x0, opts)?;
    let text = match format {
        Format::Csv => csv_text([
            vec![
                "x".to_string(),
                "residual".into(),
                "iterations".into(),
                "converged".into(),
            ],
            vec![
                full(r.x),
                full(r.residual),
                r.iterations.to_string(),
                r.converged.to_string(),
            ],
        ])?,
        _ => {
            let mut t = Table::empty();
            t.row(["function", &f.to_string()])
                .row(["target", &num(a.target)])
                .row(["x", &num(r.x)])
                .row(["f(x)", &num(r.residual + a.target)])
                .row(["residual", &num(r.residual)])
                .row(["iterations", &r.iterations.to_string()])
                .row(["converged", yes_no(r.converged)]);
            t.render()
        }
    };
    let failure = (!r.converged).then(|| {
        CliError::NoConvergence(format!(
            "no solution found after {} iterations; last x = {}, f(x) - target = {}",
            r.iterations, r.x, r.residual
        ))
    });
    Ok(Report { text, failure })
}

#[derive(Args)]
pub struct MinimizeArgs {
    /// Function of x, e.g. "42*x + 16800/x"
    #[arg(long = "fn")]
    pub function: String,
    /// Starting value for the search on f'(x) = 0
    #[arg(long)]
    pub x0: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn minimize(a: &MinimizeArgs) -> Result<Report, CliError> {
    let format = a.out.format("minimize", &[Format::Table, Format::Csv])?;
    let f = parse_fn(&a.function)?;
    let r = find_extremum(&f, a.x0)?;
    let text = match format {
        Format::Csv => csv_text([
            vec![
                "x",
                "fx",
                "second_derivative",
                "kind",
                "iterations",
                "converged",
            ]
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>(),
            vec![
                full(r.x),
                full(r.fx),
                full(r.second_derivative),
                r.kind.as_str().into(),
                r.iterations.to_string(),
                r.converged.to_string(),
            ],
        ])?,
        _ => {
            let mut t = Table::empty();
            t.row(["function", &f.to_string()])
                .row(["derivative", &f.derivative().to_string()])
                .row(["x", &num(r.x)])
                .row(["f(x)", &num(r.fx)])
                .row(["second derivative", &num(r.second_derivative)])
                .row(["classification", r.kind.as_str()])
                .row(["iterations", &r.iterations.to_string()])
                .row(["converged", yes_no(r.converged)]);
            t.render()
        }
    };
    let failure = (!r.converged).then(|| {
        debug_assert_eq!(r.kind, ExtremumKind::Inconclusive);
        CliError::NoConvergence(format!(
            "no stationary point found after {} iterations",
            r.iterations
        ))
    });
    Ok(Report { text, failure })
}

#[derive(Args)]
pub struct RiemannArgs {
    /// Function of x, e.g. "x+2"
    #[arg(long = "fn")]
    pub function: String,
    /// Lower limit
    #[arg(long)]
    pub a: f64,
    /// Upper limit
    #[arg(long)]
    pub b: f64,
    /// Number of equal subintervals
    #[arg(long)]
    pub n: usize,
    /// Sample point in each subinterval: left, right or midpoint
    #[arg(long, default_value = "right", value_parser = str::parse::<Rule>)]
    pub rule: Rule,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn riemann(a: &RiemannArgs) -> Result<Report, CliError> {
    let format = a.out.format("riemann", &[Format::Table, Format::Csv])?;
    let f = parse_fn(&a.function)?;
    let r = riemann_sum(&f, a.a, a.b, a.n, a.rule)?;
    let text = match format {
        Format::Csv => {
            let mut records = vec![vec![
                "x_i".to_string(),
                "delta_x".into(),
                "f_x_i".into(),
                "product".into(),
            ]];
            records.extend(r.rows.iter().map(|row| {
                vec![
                    full(row.x),
                    full(row.delta_x),
                    full(row.fx),
                    full(row.product),
                ]
            }));
            records.push(vec![
                String::new(),
                String::new(),
                "Total".into(),
                full(r.total),
            ]);
            csv_text(records)?
        }
        _ => {
            let mut t = Table::new(["x_i", "delta_x", "f(x_i)", "f(x_i)*delta_x"]);
            for row in &r.rows {
                t.row([num(row.x), num(row.delta_x), num(row.fx), num(row.product)]);
            }
            t.row([String::new(), String::new(), "Total".into(), num(r.total)]);
            t.render()
        }
    };
    Ok(text.into())
}

#[derive(Args)]
pub struct GridArgs {
    /// Function of x, e.g. "42*x + 16800/x"
    #[arg(long = "fn")]
    pub function: String,
    /// First x value
    #[arg(long)]
    pub from: f64,
    /// Last x value (included when the range is a whole number of steps)
    #[arg(long)]
    pub to: f64,
    #[arg(long)]
    pub step: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn tabulate(a: &GridArgs) -> Result<Report, CliError> {
    let format = a.out.format("tabulate", &[Format::Csv, Format::Table])?;
    let f = parse_fn(&a.function)?;
    let table = calculus::tabulate(&f, a.from, a.to, a.step)?;
    let text = match format {
        Format::Table => {
            let mut t = Table::new(["x", "f(x)"]);
            for row in &table.rows {
                let y = match &row.y {
                    Ok(y) => num(*y),
                    Err(e) => format!("undefined ({})", e.kind),
                };
                t.row([num(row.x), y]);
            }
            t.render()
        }
        _ => {
            let mut records = vec![vec!["x".to_string(), "y".into()]];
            records.extend(table.rows.iter().map(|row| {
                vec![
                    full(row.x),
                    row.y.as_ref().map_or(String::new(), |y| full(*y)),
                ]
            }));
            csv_text(records)?
        }
    };
    Ok(text.into())
}

pub fn plot(a: &GridArgs) -> Result<Report, CliError> {
    a.out.format("plot", &[Format::Svg])?;
    let f = parse_fn(&a.function)?;
    let table = calculus::tabulate(&f, a.from, a.to, a.step)?;
    let points: Vec<(f64, Option<f64>)> = table
        .rows
        .iter()
        .map(|r| (r.x, r.y.as_ref().ok().copied()))
        .collect();
    let title = format!("f(x) = {f}");
    svg::line_chart(&points, &title, "x", "f(x)")
        .map(Report::from)
        .ok_or_else(|| {
            CliError::Domain(format!(
                "{f} is undefined at every grid point from {} to {}",
                a.from, a.to
            ))
        })
}

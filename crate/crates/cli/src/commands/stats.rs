use std::path::{Path, PathBuf};

use clap::Args;
use deskcalc_core::stats::{
    five_number_summary, one_way_anova, one_way_anova_samples, welch_t_test, AnovaGroup,
    AnovaResult, Sample, SummaryStats, WelchTTestResult,
};

use crate::error::CliError;
use crate::format::{csv_text, full, num, Table};
use crate::input::read_groups;
use crate::{svg, Format, OutputArgs, Report};

#[derive(Args)]
pub struct TTestArgs {
    /// CSV with `group,value` columns and exactly two groups ('-' for stdin)
    #[arg(long, conflicts_with_all = ["mean1", "var1", "n1", "mean2", "var2", "n2"])]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub mean1: Option<f64>,
    #[arg(long)]
    pub var1: Option<f64>,
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long)]
    pub mean2: Option<f64>,
    #[arg(long)]
    pub var2: Option<f64>,
    #[arg(long)]
    pub n2: Option<usize>,
    /// Significance level
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn two_groups(a: &TTestArgs) -> Result<[(String, SummaryStats); 2], CliError> {
    if let Some(path) = &a.input {
        let samples = read_groups(path)?;
        let [g1, g2] = <[Sample; 2]>::try_from(samples).map_err(|s| {
            CliError::Usage(format!("ttest needs exactly two groups, found {}", s.len()))
        })?;
        let s1 = g1.summary()?;
        let s2 = g2.summary()?;
        return Ok([(g1.label, s1), (g2.label, s2)]);
    }
    match (a.mean1, a.var1, a.n1, a.mean2, a.var2, a.n2) {
        (Some(m1), Some(v1), Some(n1), Some(m2), Some(v2), Some(n2)) => Ok([
            ("Variable 1".into(), SummaryStats::new(m1, v1, n1)?),
            ("Variable 2".into(), SummaryStats::new(m2, v2, n2)?),
        ]),
        _ => Err(CliError::Usage(
            "ttest needs --input, or all of --mean1 --var1 --n1 --mean2 --var2 --n2".into(),
        )),
    }
}

pub fn ttest(a: &TTestArgs) -> Result<Report, CliError> {
    let format = a.out.format("ttest", &[Format::Table, Format::Csv])?;
    let [(l1, g1), (l2, g2)] = two_groups(a)?;
    let r = welch_t_test(&g1, &g2, a.alpha)?;
    let text = match format {
        Format::Csv => ttest_csv(&r, &l1, &l2)?,
        _ => ttest_table(&r, &l1, &l2),
    };
    Ok(text.into())
}

fn ttest_table(r: &WelchTTestResult, l1: &str, l2: &str) -> String {
    let mut t = Table::new(["", l1, l2]);
    let pair = |f: fn(&SummaryStats) -> String| [f(&r.group1), f(&r.group2)];
    let [m1, m2] = pair(|g| num(g.mean));
    let [v1, v2] = pair(|g| num(g.variance));
    let [n1, n2] = pair(|g| g.count.to_string());
    t.row(["Mean".to_string(), m1, m2])
        .row(["Variance".to_string(), v1, v2])
        .row(["Observations".to_string(), n1, n2]);
    for (label, value) in [
        ("Hypothesized Mean Difference", "0".to_string()),
        ("df", r.df_displayed.to_string()),
        ("t Stat", num(r.t_stat)),
        ("P(T<=t) one-tail", num(r.p_one_tail)),
        ("t Critical one-tail", num(r.t_crit_one_tail)),
        ("P(T<=t) two-tail", num(r.p_two_tail)),
        ("t Critical two-tail", num(r.t_crit_two_tail)),
    ] {
        t.row([label.to_string(), value]);
    }
    format!(
        "t-Test: Two-Sample Assuming Unequal Variances\n\n{}",
        t.render()
    )
}

fn ttest_csv(r: &WelchTTestResult, l1: &str, l2: &str) -> Result<String, CliError> {
    let both = |name: &str, a: String, b: String| vec![name.to_string(), a, b];
    let one = |name: &str, v: String| vec![name.to_string(), v];
    let records = vec![
        both("statistic", l1.into(), l2.into()),
        both("mean", full(r.group1.mean), full(r.group2.mean)),
        both("variance", full(r.group1.variance), full(r.group2.variance)),
        both(
            "observations",
            r.group1.count.to_string(),
            r.group2.count.to_string(),
        ),
        one("hypothesized_mean_difference", "0".into()),
        one("df", r.df_displayed.to_string()),
        one("df_exact", full(r.df_exact)),
        one("t_stat", full(r.t_stat)),
        one("p_one_tail", full(r.p_one_tail)),
        one("t_crit_one_tail", full(r.t_crit_one_tail)),
        one("p_two_tail", full(r.p_two_tail)),
        one("t_crit_two_tail", full(r.t_crit_two_tail)),
        one("alpha", full(r.alpha)),
    ];
    Ok(csv_text(records)?)
}

#[derive(Args)]
pub struct AnovaArgs {
    /// CSV with `group,value` columns ('-' for stdin)
    #[arg(long, conflicts_with = "summary")]
    pub input: Option<PathBuf>,
    /// Group summary as "label,mean,variance,count" (repeat per group)
    #[arg(long, value_parser = parse_summary)]
    pub summary: Vec<AnovaGroup>,
    /// Significance level
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_summary(s: &str) -> Result<AnovaGroup, String> {
    // split from the right so the label may itself contain commas
    let parts: Vec<&str> = s.rsplitn(4, ',').collect();
    let [count, variance, mean, label] = parts[..] else {
        return Err(format!("expected label,mean,variance,count, got '{s}'"));
    };
    let number = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("'{t}' is not a number"))
    };
    let count: usize = count
        .trim()
        .parse()
        .map_err(|_| format!("'{count}' is not a count"))?;
    let stats =
        SummaryStats::new(number(mean)?, number(variance)?, count).map_err(|e| e.to_string())?;
    Ok(AnovaGroup::new(label.trim(), stats))
}

pub fn anova(a: &AnovaArgs) -> Result<Report, CliError> {
    let format = a.out.format("anova", &[Format::Table, Format::Csv])?;
    let r = match &a.input {
        Some(path) => one_way_anova_samples(&read_groups(path)?, a.alpha)?,
        None if a.summary.is_empty() => {
            return Err(CliError::Usage(
                "anova needs --input or at least two --summary groups".into(),
            ))
        }
        None => one_way_anova(&a.summary, a.alpha)?,
    };
    let text = match format {
        Format::Csv => anova_csv(&r)?,
        _ => anova_table(&r),
    };
    Ok(text.into())
}

fn anova_table(r: &AnovaResult) -> String {
    let mut groups = Table::new(["Groups", "Count", "Sum", "Average", "Variance"]);
    for g in &r.groups {
        let s = &g.stats;
        groups.row([
            g.label.clone(),
            s.count.to_string(),
            num(s.sum()),
            num(s.mean),
            num(s.variance),
        ]);
    }
    let mut sources = Table::new([
        "Source of Variation",
        "SS",
        "df",
        "MS",
        "F",
        "P-value",
        "F crit",
    ]);
    sources
        .row([
            "Between Groups".to_string(),
            num(r.ss_between),
            r.df_between.to_string(),
            num(r.ms_between),
            num(r.f_stat),
            num(r.p_value),
            num(r.f_crit),
        ])
        .row([
            "Within Groups".to_string(),
            num(r.ss_within),
            r.df_within.to_string(),
            num(r.ms_within),
        ])
        .row(["Total".to_string(), num(r.ss_total), r.df_total.to_string()]);
    format!(
        "Anova: Single Factor\n\nSUMMARY\n{}\nANOVA\n{}",
        groups.render(),
        sources.render()
    )
}

fn anova_csv(r: &AnovaResult) -> Result<String, CliError> {
    let records = vec![
        ["source", "ss", "df", "ms", "f", "p_value", "f_crit"]
            .map(String::from)
            .to_vec(),
        vec![
            "Between Groups".into(),
            full(r.ss_between),
            r.df_between.to_string(),
            full(r.ms_between),
            full(r.f_stat),
            full(r.p_value),
            full(r.f_crit),
        ],
        vec![
            "Within Groups".into(),
            full(r.ss_within),
            r.df_within.to_string(),
            full(r.ms_within),
            String::new(),
            String::new(),
            String::new(),
        ],
        vec![
            "Total".into(),
            full(r.ss_total),
            r.df_total.to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
        ],
    ];
    Ok(csv_text(records)?)
}

#[derive(Args)]
pub struct SummaryArgs {
    /// CSV with `group,value` columns ('-' for stdin)
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub out: OutputArgs,
}

const QUARTILE_ROWS: [&str; 5] = ["q1", "min", "median", "max", "q3"];

fn summaries(
    path: &Path,
) -> Result<Vec<(String, deskcalc_core::stats::FiveNumberSummary)>, CliError> {
    read_groups(path)?
        .into_iter()
        .map(|s| Ok((s.label.clone(), five_number_summary(&s.values)?)))
        .collect()
}

pub fn summary(a: &SummaryArgs) -> Result<Report, CliError> {
    let format = a.out.format("summary", &[Format::Table, Format::Csv])?;
    let groups = summaries(&a.input)?;
    let text = match format {
        Format::Csv => {
            let mut records = vec![std::iter::once("group")
                .chain(QUARTILE_ROWS)
                .map(String::from)
                .collect::<Vec<_>>()];
            records.extend(groups.iter().map(|(label, s)| {
                std::iter::once(label.clone())
                    .chain(s.table_order().map(full))
                    .collect()
            }));
            csv_text(records)?
        }
        _ => {
            // statistics down the side, one column per group
            let mut t = Table::new(
                std::iter::once(String::new()).chain(groups.iter().map(|(l, _)| l.clone())),
            );
            for (i, name) in QUARTILE_ROWS.iter().enumerate() {
                t.row(
                    std::iter::once(name.to_string())
                        .chain(groups.iter().map(|(_, s)| num(s.table_order()[i]))),
                );
            }
            t.render()
        }
    };
    Ok(text.into())
}

pub fn boxplot(a: &SummaryArgs) -> Result<Report, CliError> {
    a.out.format("boxplot", &[Format::Svg])?;
    let groups = summaries(&a.input)?;
    Ok(svg::box_plot(&groups, "Box plot", "value").into())
}

//! Hypothesis tests: Welch's unequal-variance t-test and one-way ANOVA.

use super::descriptive::{Sample, SummaryStats};
use super::dist::{f_inverse, f_sf, t_cdf, t_inverse};
use super::StatsError;

#[derive(Debug, Clone, PartialEq)]
pub struct WelchTTestResult {
    pub group1: SummaryStats,
    pub group2: SummaryStats,
    pub mean_difference: f64,
    pub standard_error: f64,
    /// Welch-Satterthwaite degrees of freedom.
    pub df_exact: f64,
    /// `df_exact` truncated; p-values and critical values use this.
    pub df_displayed: u64,
    pub t_stat: f64,
    pub p_one_tail: f64,
    pub p_two_tail: f64,
    pub t_crit_one_tail: f64,
    pub t_crit_two_tail: f64,
    pub alpha: f64,
}

fn check_alpha(alpha: f64) -> Result<(), StatsError> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(StatsError::InvalidProbability(alpha))
    }
}

/// Two-sample t-test assuming unequal variances, with a hypothesized mean
/// difference of zero.
///
/// Degrees of freedom are truncated to an integer before computing the
/// p-values and critical values, matching the spreadsheet Analysis ToolPak;
/// the unrounded value is kept in `df_exact`.
pub fn welch_t_test(
    g1: &SummaryStats,
    g2: &SummaryStats,
    alpha: f64,
) -> Result<WelchTTestResult, StatsError> {
    check_alpha(alpha)?;
    for g in [g1, g2] {
        if g.count < 2 {
            return Err(StatsError::TooFewObservations {
                count: g.count,
                needed: 2,
            });
        }
    }
    if g1.variance == 0.0 && g2.variance == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    let (n1, n2) = (g1.count as f64, g2.count as f64);
    let (w1, w2) = (g1.variance / n1, g2.variance / n2);
    let standard_error = (w1 + w2).sqrt();
    let mean_difference = g1.mean - g2.mean;
    let t_stat = mean_difference / standard_error;
    let df_exact = (w1 + w2).powi(2) / (w1 * w1 / (n1 - 1.0) + w2 * w2 / (n2 - 1.0));
    let df_displayed = df_exact.trunc() as u64;
    let df = df_displayed as f64;

    let p_one_tail = t_cdf(-t_stat.abs(), df)?;
    Ok(WelchTTestResult {
        group1: *g1,
        group2: *g2,
        mean_difference,
        standard_error,
        df_exact,
        df_displayed,
        t_stat,
        p_one_tail,
        p_two_tail: 2.0 * p_one_tail,
        t_crit_one_tail: t_inverse(1.0 - alpha, df)?,
        t_crit_two_tail: t_inverse(1.0 - alpha / 2.0, df)?,
        alpha,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnovaGroup {
    pub label: String,
    pub stats: SummaryStats,
}

impl AnovaGroup {
    pub fn new(label: impl Into<String>, stats: SummaryStats) -> AnovaGroup {
        AnovaGroup {
            label: label.into(),
            stats,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnovaResult {
    pub groups: Vec<AnovaGroup>,
    pub ss_between: f64,
    pub ss_within: f64,
    pub ss_total: f64,
    pub df_between: usize,
    pub df_within: usize,
    pub df_total: usize,
    pub ms_between: f64,
    pub ms_within: f64,
    pub f_stat: f64,
    pub p_value: f64,
    pub f_crit: f64,
    pub alpha: f64,
}

/// One-way ANOVA from per-group summaries.
///
/// `ss_total` is reported as `ss_between + ss_within`; use
/// [`one_way_anova_samples`] to have it computed from the raw observations.
pub fn one_way_anova(groups: &[AnovaGroup], alpha: f64) -> Result<AnovaResult, StatsError> {
    anova_with_total(groups, alpha, None)
}

/// One-way ANOVA from raw observations.
pub fn one_way_anova_samples(samples: &[Sample], alpha: f64) -> Result<AnovaResult, StatsError> {
    let groups = samples
        .iter()
        .map(|s| Ok(AnovaGroup::new(s.label.clone(), s.summary()?)))
        .collect::<Result<Vec<_>, StatsError>>()?;
    let n: usize = samples.iter().map(Sample::len).sum();
    let grand = samples.iter().flat_map(|s| s.values.iter()).sum::<f64>() / n as f64;
    let ss_total = samples
        .iter()
        .flat_map(|s| s.values.iter())
        .map(|v| (v - grand) * (v - grand))
        .sum();
    anova_with_total(&groups, alpha, Some(ss_total))
}

fn anova_with_total(
    groups: &[AnovaGroup],
    alpha: f64,
    ss_total: Option<f64>,
) -> Result<AnovaResult, StatsError> {
    check_alpha(alpha)?;
    if groups.len() < 2 {
        return Err(StatsError::TooFewGroups(groups.len()));
    }
    if let Some(g) = groups.iter().find(|g| g.stats.count < 2) {
        return Err(StatsError::TooFewObservations {
            count: g.stats.count,
            needed: 2,
        });
    }
    let k = groups.len();
    let n: usize = groups.iter().map(|g| g.stats.count).sum();
    let grand = groups.iter().map(|g| g.stats.sum()).sum::<f64>() / n as f64;
    let ss_between: f64 = groups
        .iter()
        .map(|g| g.stats.count as f64 * (g.stats.mean - grand).powi(2))
        .sum();
    let ss_within: f64 = groups
        .iter()
        .map(|g| (g.stats.count - 1) as f64 * g.stats.variance)
        .sum();
    let (df_between, df_within) = (k - 1, n - k);
    let ms_between = ss_between / df_between as f64;
    let ms_within = ss_within / df_within as f64;
    if ms_within == 0.0 {
        return Err(StatsError::ZeroWithinVariance);
    }
    let f_stat = ms_between / ms_within;
    Ok(AnovaResult {
        groups: groups.to_vec(),
        ss_between,
        ss_within,
        ss_total: ss_total.unwrap_or(ss_between + ss_within),
        df_between,
        df_within,
        df_total: n - 1,
        ms_between,
        ms_within,
        f_stat,
        p_value: f_sf(f_stat, df_between as f64, df_within as f64)?,
        f_crit: f_inverse(1.0 - alpha, df_between as f64, df_within as f64)?,
        alpha,
    })
}

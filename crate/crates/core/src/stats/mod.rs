//! Descriptive statistics, Welch's t-test, one-way ANOVA, and the special
//! functions behind their p-values.

mod descriptive;
mod dist;
mod hypothesis;
mod special;

use thiserror::Error;

pub use descriptive::{
    five_number_summary, mean, quartile_inclusive, sample_variance, FiveNumberSummary, Sample,
    SummaryStats,
};
pub use dist::{f_cdf, f_inverse, f_sf, t_cdf, t_inverse};
pub use hypothesis::{
    one_way_anova, one_way_anova_samples, welch_t_test, AnovaGroup, AnovaResult, WelchTTestResult,
};
pub use special::{ln_gamma, reg_inc_beta};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("sample is empty")]
    EmptySample,
    #[error("need at least {needed} observations, got {count}")]
    TooFewObservations { count: usize, needed: usize },
    #[error("observations must be finite numbers")]
    NonFinite,
    #[error("both groups have zero variance; the t statistic is undefined")]
    ZeroVariance,
    #[error("within-group variance is zero; the F statistic is undefined")]
    ZeroWithinVariance,
    #[error("need at least 2 groups, got {0}")]
    TooFewGroups(usize),
    #[error("probability must lie strictly between 0 and 1, got {0}")]
    InvalidProbability(f64),
    #[error("quantile must lie in [0, 1], got {0}")]
    InvalidQuantile(f64),
    #[error("degrees of freedom must be positive and finite ({0})")]
    InvalidDegreesOfFreedom(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("no convergence in {0}")]
    NoConvergence(String),
}

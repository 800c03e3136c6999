use super::StatsError;

/// A labelled set of observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub label: String,
    pub values: Vec<f64>,
}

impl Sample {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Sample {
        Sample {
            label: label.into(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn summary(&self) -> Result<SummaryStats, StatsError> {
        SummaryStats::from_values(&self.values)
    }
}

/// Mean, sample variance (n - 1 denominator) and count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub mean: f64,
    pub variance: f64,
    pub count: usize,
}

impl SummaryStats {
    /// Summary from already-aggregated figures, e.g. a published table.
    pub fn new(mean: f64, variance: f64, count: usize) -> Result<SummaryStats, StatsError> {
        if !mean.is_finite() || !variance.is_finite() {
            return Err(StatsError::NonFinite);
        }
        if variance < 0.0 {
            return Err(StatsError::InvalidParameter(format!(
                "variance must be non-negative, got {variance}"
            )));
        }
        if count < 2 {
            return Err(StatsError::TooFewObservations { count, needed: 2 });
        }
        Ok(SummaryStats {
            mean,
            variance,
            count,
        })
    }

    pub fn from_values(values: &[f64]) -> Result<SummaryStats, StatsError> {
        Ok(SummaryStats {
            mean: mean(values)?,
            variance: sample_variance(values)?,
            count: values.len(),
        })
    }

    pub fn sum(&self) -> f64 {
        self.mean * self.count as f64
    }
}

fn check_finite(values: &[f64]) -> Result<(), StatsError> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(StatsError::NonFinite)
    }
}

pub fn mean(values: &[f64]) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptySample);
    }
    check_finite(values)?;
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Two-pass sample variance with the `n - 1` denominator.
pub fn sample_variance(values: &[f64]) -> Result<f64, StatsError> {
    if values.len() < 2 {
        return Err(StatsError::TooFewObservations {
            count: values.len(),
            needed: 2,
        });
    }
    let m = mean(values)?;
    let ss: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    Ok(ss / (values.len() - 1) as f64)
}

/// Inclusive quantile: position `1 + (n - 1) q` on the sorted values with
/// linear interpolation between neighbours (the spreadsheet `QUARTILE` rule).
pub fn quartile_inclusive(values: &[f64], q: f64) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptySample);
    }
    check_finite(values)?;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    quantile_sorted(&sorted, q)
}

fn quantile_sorted(sorted: &[f64], q: f64) -> Result<f64, StatsError> {
    if !(0.0..=1.0).contains(&q) {
        return Err(StatsError::InvalidQuantile(q));
    }
    let pos = (sorted.len() - 1) as f64 * q;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let (a, b) = (sorted[lo], sorted[hi]);
    let v = a + (pos - lo as f64) * (b - a);
    Ok(v.clamp(a, b))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiveNumberSummary {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl FiveNumberSummary {
    /// Values in the row order of the per-major statistics table:
    /// q1, min, median, max, q3.
    pub fn table_order(&self) -> [f64; 5] {
        [self.q1, self.min, self.median, self.max, self.q3]
    }

    pub fn as_array(&self) -> [f64; 5] {
        [self.min, self.q1, self.median, self.q3, self.max]
    }
}

pub fn five_number_summary(values: &[f64]) -> Result<FiveNumberSummary, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptySample);
    }
    check_finite(values)?;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let q = |p| quantile_sorted(&sorted, p);
    Ok(FiveNumberSummary {
        min: q(0.0)?,
        q1: q(0.25)?,
        median: q(0.5)?,
        q3: q(0.75)?,
        max: q(1.0)?,
    })
}

//! Serializable summaries of Monte Carlo statistics.

use crate::samplers::Summary;
use serde::Serialize;

/// Outcome of one test attached to a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestOutcome {
    pub name: String,
    pub statistic: f64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
}

/// Histogram, moments and test outcomes of one statistic over `samples`
/// independent configurations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatReport {
    pub model: String,
    pub statistic: String,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Pairs `(value, count)` in increasing order of value.
    pub histogram: Vec<(f64, u64)>,
    pub summary: Moments,
    pub tests: Vec<TestOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

impl StatReport {
    pub fn new(model: &str, statistic: &str, n: usize, seed: u64, values: &[f64]) -> Self {
        let summary = Summary::of(values);
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mut histogram: Vec<(f64, u64)> = Vec::new();
        for v in sorted {
            match histogram.last_mut() {
                Some((last, count)) if *last == v => *count += 1,
                _ => histogram.push((v, 1)),
            }
        }
        Self {
            model: model.to_string(),
            statistic: statistic.to_string(),
            n,
            samples: values.len(),
            seed,
            histogram,
            summary: Moments { mean: summary.mean, variance: summary.variance },
            tests: Vec::new(),
            values: None,
        }
    }

    /// Keeps the raw sample vector in the report.
    pub fn with_values(mut self, values: Vec<f64>) -> Self {
        self.values = Some(values);
        self
    }

    pub fn push_test(&mut self, name: &str, statistic: f64, threshold: f64, pass: bool) {
        self.tests.push(TestOutcome { name: name.to_string(), statistic, threshold, pass });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports contain only finite numbers and strings")
    }

    /// `value,count` with a header line.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("value,count\n");
        for &(v, c) in &self.histogram {
            out.push_str(&format_number(v));
            out.push(',');
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

/// Integers in plain form, other values with 17 significant digits.
pub fn format_number(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        return format!("{}", v as i64);
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (16 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

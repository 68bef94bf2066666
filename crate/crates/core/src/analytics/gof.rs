//! Goodness-of-fit statistics.

use super::AnalyticsError;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use std::collections::BTreeMap;

/// Smallest sample accepted by the tests.
pub const MIN_SAMPLES: usize = 100;

/// Pearson χ² test of observed counts against cell probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquare {
    pub statistic: f64,
    pub df: usize,
    pub critical: f64,
    pub p_value: f64,
    pub pass: bool,
}

/// Kolmogorov–Smirnov test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KsTest {
    pub statistic: f64,
    pub p_value: f64,
    pub pass: bool,
}

fn check_alpha(alpha: f64) -> Result<(), AnalyticsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(AnalyticsError::DegenerateInput(format!("significance level {alpha}")));
    }
    Ok(())
}

/// χ² test with `cells - 1` degrees of freedom at level `alpha`.
pub fn chi_square(observed: &[u64], probs: &[f64], alpha: f64) -> Result<ChiSquare, AnalyticsError> {
    check_alpha(alpha)?;
    if observed.len() != probs.len() || observed.len() < 2 {
        return Err(AnalyticsError::DegenerateInput(format!(
            "{} observed cells for {} probabilities",
            observed.len(),
            probs.len()
        )));
    }
    let total: u64 = observed.iter().sum();
    if (total as usize) < MIN_SAMPLES {
        return Err(AnalyticsError::DegenerateInput(format!("{total} samples")));
    }
    let mass: f64 = probs.iter().sum();
    if probs.iter().any(|&p| !(p > 0.0)) || (mass - 1.0).abs() > 1e-9 {
        return Err(AnalyticsError::DegenerateInput("cell probabilities must be positive and sum to 1".into()));
    }
    let statistic: f64 = observed
        .iter()
        .zip(probs)
        .map(|(&o, &p)| {
            let e = p * total as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let df = observed.len() - 1;
    let law = ChiSquared::new(df as f64).expect("positive degrees of freedom");
    let critical = law.inverse_cdf(1.0 - alpha);
    let p_value = law.sf(statistic);
    Ok(ChiSquare { statistic, df, critical, p_value, pass: statistic <= critical })
}

/// `P(K > λ)` for the Kolmogorov distribution.
pub fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=200 {
        let term = (-2.0 * (k * k) as f64 * lambda * lambda).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Asymptotic p-value with the finite-sample correction
/// `λ = (√n + 0.12 + 0.11/√n) D`.
fn ks_p_value(d: f64, effective_n: f64) -> f64 {
    let root = effective_n.sqrt();
    kolmogorov_survival((root + 0.12 + 0.11 / root) * d)
}

fn sorted(values: &[f64]) -> Result<Vec<f64>, AnalyticsError> {
    if values.len() < MIN_SAMPLES {
        return Err(AnalyticsError::DegenerateInput(format!("{} samples", values.len())));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(AnalyticsError::DegenerateInput("non-finite sample value".into()));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// One-sample KS test of `sample` against the distribution function `cdf`.
pub fn ks_vs_cdf<F: Fn(f64) -> f64>(sample: &[f64], cdf: F, alpha: f64) -> Result<KsTest, AnalyticsError> {
    check_alpha(alpha)?;
    let x = sorted(sample)?;
    let n = x.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < x.len() {
        // Ties: the empirical function jumps once at a repeated value.
        let mut j = i;
        while j + 1 < x.len() && x[j + 1] == x[i] {
            j += 1;
        }
        let f = cdf(x[i]);
        d = d.max((f - i as f64 / n).abs()).max(((j + 1) as f64 / n - f).abs());
        i = j + 1;
    }
    let p_value = ks_p_value(d, n);
    Ok(KsTest { statistic: d, p_value, pass: p_value >= alpha })
}

/// Two-sample KS test.
pub fn ks_two_sample(x: &[f64], y: &[f64], alpha: f64) -> Result<KsTest, AnalyticsError> {
    check_alpha(alpha)?;
    let a = sorted(x)?;
    let b = sorted(y)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let v = a[i].min(b[j]);
        while i < a.len() && a[i] <= v {
            i += 1;
        }
        while j < b.len() && b[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    let p_value = ks_p_value(d, na * nb / (na + nb));
    Ok(KsTest { statistic: d, p_value, pass: p_value >= alpha })
}

/// Total variation distance between an empirical histogram and a pmf.
///
/// Cells run from `start` up to the smallest `K` with `Σ_{k >= K} pmf(k) <
/// tail_cut`; all mass at or beyond `K`, empirical and theoretical, is lumped
/// in one cell, and empirical mass below `start` counts in full.
pub fn total_variation<F: Fn(i64) -> f64>(
    hist: &BTreeMap<i64, usize>,
    pmf: F,
    start: i64,
    tail_cut: f64,
) -> Result<f64, AnalyticsError> {
    let total: usize = hist.values().sum();
    if total < MIN_SAMPLES {
        return Err(AnalyticsError::DegenerateInput(format!("{total} samples")));
    }
    if !(tail_cut > 0.0) {
        return Err(AnalyticsError::DegenerateInput(format!("tail cut {tail_cut}")));
    }
    let freq = |k: i64| *hist.get(&k).unwrap_or(&0) as f64 / total as f64;
    let below: f64 = hist.range(..start).map(|(_, &c)| c as f64).sum::<f64>() / total as f64;
    let mut distance = below;
    let mut covered_emp = below;
    let mut covered_pmf = 0.0;
    let mut k = start;
    while 1.0 - covered_pmf >= tail_cut {
        let (e, p) = (freq(k), pmf(k));
        distance += (e - p).abs();
        covered_emp += e;
        covered_pmf += p;
        k += 1;
        if k - start > 1_000_000 {
            return Err(AnalyticsError::DegenerateInput("pmf tail does not decay".into()));
        }
    }
    distance += ((1.0 - covered_emp) - (1.0 - covered_pmf)).abs();
    Ok(0.5 * distance)
}

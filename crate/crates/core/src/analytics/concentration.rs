//! Concentration of the largest face and vertex degrees of uniform
//! dissections, measured along a grid of sizes.

use super::extract::{max_face_degree, max_vertex_diagonals};
use super::AnalyticsError;
use crate::configurations::{Model, ModelSampler};
use crate::samplers::try_monte_carlo;
use serde::Serialize;
use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcentrationKind {
    /// Largest face degree against the window `log_β n ± c log_β log_β n`.
    Face,
    /// Largest number of diagonals at a vertex against the threshold
    /// `log_b n + (1+c) log_b log_b n`.
    Vertex,
}

impl FromStr for ConcentrationKind {
    type Err = AnalyticsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "face" => Ok(Self::Face),
            "vertex" => Ok(Self::Vertex),
            other => Err(AnalyticsError::Domain(format!("unknown concentration kind {other:?}"))),
        }
    }
}

impl fmt::Display for ConcentrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Face => "face",
            Self::Vertex => "vertex",
        })
    }
}

/// `β = 2 + √2`, the base for face degrees.
pub fn face_base() -> f64 {
    2.0 + SQRT_2
}

/// `b = 1 + √2`, the base for vertex degrees.
pub fn vertex_base() -> f64 {
    1.0 + SQRT_2
}

/// Measurements at one size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConcentrationRow {
    pub n: usize,
    pub samples: usize,
    /// Window `[lower, upper]` for faces; for vertices `lower` is the
    /// exceedance threshold and there is no upper bound.
    pub lower: f64,
    pub upper: Option<f64>,
    /// Fraction inside the window (faces) or at or above the threshold (vertices).
    pub probability: f64,
    pub mean: f64,
    /// Vertices only: centre `log_b n + log_b log_b n` of the conjectured window.
    pub conjecture_center: Option<f64>,
    /// Vertices only: fraction within `c log_b log_b n` of that centre.
    pub conjecture_fraction: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConcentrationReport {
    pub kind: ConcentrationKind,
    pub c: f64,
    pub seed: u64,
    pub rows: Vec<ConcentrationRow>,
}

/// Samples `samples` uniform dissections of `P_{n+1}` for each `n` in the
/// grid; size `n` uses the seed `seed + n`.
pub fn concentration_experiment(
    kind: ConcentrationKind,
    grid: &[usize],
    c: f64,
    samples: usize,
    seed: u64,
) -> Result<ConcentrationReport, AnalyticsError> {
    if !(c > 0.0) || samples == 0 {
        return Err(AnalyticsError::Domain(format!("c = {c}, samples = {samples}")));
    }
    let mut rows = Vec::with_capacity(grid.len());
    for &n in grid {
        let base = match kind {
            ConcentrationKind::Face => face_base(),
            ConcentrationKind::Vertex => vertex_base(),
        };
        let log = (n as f64).ln() / base.ln();
        if log <= 1.0 {
            return Err(AnalyticsError::Domain(format!("n = {n} is too small for an iterated logarithm")));
        }
        let loglog = log.ln() / base.ln();
        let sampler = ModelSampler::new(Model::Dissection, n)?;
        let values: Vec<f64> = try_monte_carlo(seed.wrapping_add(n as u64), samples, |rng, _| {
            let d = sampler.sample(rng)?.diagram;
            let v = match kind {
                ConcentrationKind::Face => max_face_degree(&d)?,
                ConcentrationKind::Vertex => max_vertex_diagonals(&d),
            };
            Ok::<f64, AnalyticsError>(v as f64)
        })?;
        let fraction = |pred: &dyn Fn(f64) -> bool| values.iter().filter(|&&v| pred(v)).count() as f64 / samples as f64;
        let mean = values.iter().sum::<f64>() / samples as f64;
        let row = match kind {
            ConcentrationKind::Face => {
                let (lower, upper) = (log - c * loglog, log + c * loglog);
                ConcentrationRow {
                    n,
                    samples,
                    lower,
                    upper: Some(upper),
                    probability: fraction(&|v| lower <= v && v <= upper),
                    mean,
                    conjecture_center: None,
                    conjecture_fraction: None,
                }
            }
            ConcentrationKind::Vertex => {
                let threshold = log + (1.0 + c) * loglog;
                let center = log + loglog;
                ConcentrationRow {
                    n,
                    samples,
                    lower: threshold,
                    upper: None,
                    probability: fraction(&|v| v >= threshold),
                    mean,
                    conjecture_center: Some(center),
                    conjecture_fraction: Some(fraction(&|v| (v - center).abs() <= c * loglog)),
                }
            }
        };
        rows.push(row);
    }
    Ok(ConcentrationReport { kind, c, seed, rows })
}

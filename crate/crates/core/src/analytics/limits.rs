//! Limit laws of statistics of large uniform dissections.

use super::AnalyticsError;
use crate::numeric::adaptive_simpson;
use crate::offspring::{critical_c, mu, OffspringDistribution};
use crate::trees::PlaneTree;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

/// Limit law of the degree of the face adjacent to the root side:
/// `(k-1) c^(k-2)` for `k >= 3`, where `c = 1 - 1/√2`.
pub fn limit_pmf_root_face(k: i64) -> f64 {
    if k < 3 {
        return 0.0;
    }
    (k - 1) as f64 * critical_c().powi(k as i32 - 2)
}

/// Limit law of the number of diagonals at the root vertex:
/// `(k+1) μ_0^2 (1-μ_0)^k` for `k >= 0`.
pub fn limit_pmf_root_vertex(k: i64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let mu0 = 2.0 - SQRT_2;
    (k + 1) as f64 * mu0 * mu0 * (1.0 - mu0).powi(k as i32)
}

/// Limit law of the root degree of the dual tree: the size-biased law `k μ_k`.
pub fn limit_pmf_root_degree(k: i64) -> f64 {
    if k < 1 {
        return 0.0;
    }
    k as f64 * mu().pmf(k as usize)
}

/// Probability that the first `level` generations of the Kesten tree of `law`
/// coincide with `t0`: `L_level(t0) · Π_{|u| < level} law(k_u)`.
pub fn kesten_truncation_pmf(law: &OffspringDistribution, t0: &PlaneTree, level: usize) -> Result<f64, AnalyticsError> {
    let height = t0.height();
    if height > level {
        return Err(AnalyticsError::HeightMismatch { height, level });
    }
    let depths = t0.depths();
    let mut p = t0.generation_size(level) as f64;
    for (u, &d) in depths.iter().enumerate() {
        if d < level {
            p *= law.pmf(t0.degree(u) as usize);
        }
    }
    Ok(p)
}

/// Density of the normalized length of the longest chord of the Brownian
/// triangulation, measured as an arc fraction:
/// `(3x-1) / (π x^2 (1-x)^2 √(1-2x))` on `[1/3, 1/2)`.
pub fn longest_chord_limit(x: f64) -> f64 {
    if !(1.0 / 3.0..0.5).contains(&x) {
        return if x == 0.5 { f64::INFINITY } else { 0.0 };
    }
    (3.0 * x - 1.0) / (PI * x * x * (1.0 - x) * (1.0 - x) * (1.0 - 2.0 * x).sqrt())
}

/// Distribution function of [`longest_chord_limit`], integrated after the
/// change of variable `x = (1 - u^2)/2`, which removes the endpoint
/// singularity.
pub fn longest_chord_cdf(x: f64, tol: f64) -> Result<f64, AnalyticsError> {
    if !x.is_finite() || !(tol > 0.0) {
        return Err(AnalyticsError::Domain(format!("x = {x}, tol = {tol}")));
    }
    if x <= 1.0 / 3.0 {
        return Ok(0.0);
    }
    if x >= 0.5 {
        return Ok(1.0);
    }
    // With dx = -u du the factor u cancels the singular square root.
    let h = |u: f64| {
        let x = 0.5 * (1.0 - u * u);
        (3.0 * x - 1.0) / (PI * x * x * (1.0 - x) * (1.0 - x))
    };
    let u_lo = (1.0 - 2.0 * x).sqrt();
    let u_hi = (1.0_f64 / 3.0).sqrt();
    Ok(adaptive_simpson(&h, u_lo, u_hi, tol))
}

/// Named limit laws a statistic can be compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitLaw {
    RootVertex,
    RootFace,
    RootDegree,
    LongestChordCdf,
}

impl LimitLaw {
    pub fn name(&self) -> &'static str {
        match self {
            Self::RootVertex => "root-vertex",
            Self::RootFace => "root-face",
            Self::RootDegree => "root-degree",
            Self::LongestChordCdf => "longest-chord-cdf",
        }
    }

    /// The probability mass function of a discrete law, `None` for a
    /// continuous one.
    pub fn pmf(&self) -> Option<fn(i64) -> f64> {
        match self {
            Self::RootVertex => Some(limit_pmf_root_vertex),
            Self::RootFace => Some(limit_pmf_root_face),
            Self::RootDegree => Some(limit_pmf_root_degree),
            Self::LongestChordCdf => None,
        }
    }

    /// Smallest point of the support of a discrete law.
    pub fn support_start(&self) -> i64 {
        match self {
            Self::RootVertex => 0,
            Self::RootFace => 3,
            Self::RootDegree => 2,
            Self::LongestChordCdf => 0,
        }
    }
}

impl fmt::Display for LimitLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LimitLaw {
    type Err = AnalyticsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "root-vertex" => Self::RootVertex,
            "root-face" => Self::RootFace,
            "root-degree" => Self::RootDegree,
            "longest-chord-cdf" | "longest-chord" => Self::LongestChordCdf,
            other => return Err(AnalyticsError::Domain(format!("unknown limit law {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::compensated_sum;

    #[test]
    fn discrete_limits_are_normalized() {
        assert!((limit_pmf_root_face(3) - 0.585_786_437_6).abs() < 1e-9);
        assert_eq!(limit_pmf_root_face(2), 0.0);
        assert!((compensated_sum((0..200).map(limit_pmf_root_face)) - 1.0).abs() < 1e-12);
        assert!((limit_pmf_root_vertex(0) - 0.343_145_750_5).abs() < 1e-9);
        assert!((limit_pmf_root_vertex(1) - 0.284_271_247_5).abs() < 1e-9);
        assert!((compensated_sum((0..200).map(limit_pmf_root_vertex)) - 1.0).abs() < 1e-12);
        assert!((compensated_sum((0..200).map(limit_pmf_root_degree)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kesten_pmf_examples() {
        let law = mu();
        let cherry = PlaneTree::from_degrees(vec![2, 0, 0]).unwrap();
        let p = kesten_truncation_pmf(&law, &cherry, 1).unwrap();
        assert!((p - (2.0 - SQRT_2)).abs() < 1e-12);
        assert_eq!(kesten_truncation_pmf(&law, &PlaneTree::singleton(), 1).unwrap(), 0.0);
        assert!(matches!(
            kesten_truncation_pmf(&law, &cherry, 0),
            Err(AnalyticsError::HeightMismatch { height: 1, level: 0 })
        ));
        // Level 1: the truncations are the stars, and the masses sum to 1.
        let total = compensated_sum((1..200).map(|k| {
            let star = PlaneTree::from_degrees(std::iter::once(k).chain(std::iter::repeat_n(0, k as usize)).collect())
                .unwrap();
            kesten_truncation_pmf(&law, &star, 1).unwrap()
        }));
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn longest_chord_cdf_shape() {
        assert_eq!(longest_chord_cdf(0.3, 1e-10).unwrap(), 0.0);
        assert_eq!(longest_chord_cdf(1.0 / 3.0, 1e-10).unwrap(), 0.0);
        assert!((longest_chord_cdf(0.5 - 1e-15, 1e-10).unwrap() - 1.0).abs() < 1e-6);
        assert_eq!(longest_chord_cdf(0.5, 1e-10).unwrap(), 1.0);
        assert!(longest_chord_cdf(f64::NAN, 1e-10).is_err());
        let mut last = 0.0;
        for i in 1..100 {
            let x = 1.0 / 3.0 + i as f64 * (0.5 - 1.0 / 3.0) / 100.0;
            let v = longest_chord_cdf(x, 1e-10).unwrap();
            assert!(v >= last);
            last = v;
        }
        // Compare a plain integral of the density away from the singularity.
        let direct = adaptive_simpson(&longest_chord_limit, 1.0 / 3.0, 0.45, 1e-11);
        assert!((longest_chord_cdf(0.45, 1e-11).unwrap() - direct).abs() < 1e-8);
        assert_eq!(longest_chord_limit(0.2), 0.0);
    }
}

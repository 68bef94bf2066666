//! Exact enumeration, limit laws, statistics of sampled configurations and
//! goodness-of-fit tests.

pub mod concentration;
pub mod enumeration;
pub mod extract;
pub mod gof;
pub mod limits;
pub mod report;

use thiserror::Error;

pub use concentration::{concentration_experiment, ConcentrationKind, ConcentrationReport, ConcentrationRow};
pub use enumeration::{
    asymptotic_count_a, brute_force_dissections, brute_force_dissections_a, brute_force_ncts, constrained_count_series,
    dissection_count_series, flajolet_noy_constant, gw_identity_counts, nct_generate, AsymptoticCount,
};
pub use extract::{
    height_over_sqrt_size, max_face_degree, max_vertex_diagonals, rescaled_contour, root_face_degree,
    root_vertex_diagonals, Statistic,
};
pub use gof::{chi_square, kolmogorov_survival, ks_two_sample, ks_vs_cdf, total_variation, ChiSquare, KsTest};
pub use limits::{
    kesten_truncation_pmf, limit_pmf_root_face, limit_pmf_root_vertex, longest_chord_cdf, longest_chord_limit, LimitLaw,
};
pub use report::{StatReport, TestOutcome};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalyticsError {
    #[error("input too large for exhaustive enumeration: {0}")]
    TooLarge(String),
    #[error("tree height {height} exceeds the truncation level {level}")]
    HeightMismatch { height: usize, level: usize },
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error(transparent)]
    Config(#[from] crate::configurations::ConfigError),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}

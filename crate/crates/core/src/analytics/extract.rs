//! Statistics of configurations and of their tree encodings.

use super::AnalyticsError;
use crate::configurations::{dual_tree, ChordDiagram, Configuration};
use crate::geometry::{intersections, longest_chord};
use crate::trees::PlaneTree;
use std::fmt;
use std::str::FromStr;

/// Number of diagonals with an endpoint at vertex 0 (sides are not counted).
pub fn root_vertex_diagonals(d: &ChordDiagram) -> usize {
    d.diagonal_degrees()[0]
}

/// Largest number of diagonals with an endpoint at a common vertex.
pub fn max_vertex_diagonals(d: &ChordDiagram) -> usize {
    d.diagonal_degrees().into_iter().max().unwrap_or(0)
}

/// Degree of the face of a dissection that contains the side `{0, m-1}`.
pub fn root_face_degree(d: &ChordDiagram) -> Result<usize, AnalyticsError> {
    Ok(dual_tree(d)?.root_degree() as usize + 1)
}

/// Largest face degree of a dissection.
pub fn max_face_degree(d: &ChordDiagram) -> Result<usize, AnalyticsError> {
    Ok(dual_tree(d)?.max_degree() as usize + 1)
}

/// `height(t) / √ζ(t)`.
pub fn height_over_sqrt_size(t: &PlaneTree) -> f64 {
    t.height() as f64 / (t.size() as f64).sqrt()
}

/// `C(2ζu) / scale` for `u` in `[0, 1]`, with linear interpolation of the
/// contour function between integer times.
pub fn rescaled_contour(t: &PlaneTree, u: f64, scale: f64) -> Result<f64, AnalyticsError> {
    if !(0.0..=1.0).contains(&u) || !(scale > 0.0) {
        return Err(AnalyticsError::Domain(format!("u = {u}, scale = {scale}")));
    }
    let contour = t.contour();
    Ok(contour.at(u * contour.span()) / scale)
}

/// Statistics that can be extracted from a sampled configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Statistic {
    /// Diagonals at vertex 0.
    RootVertex,
    /// Largest number of diagonals at a vertex.
    MaxVertex,
    /// Degree of the face adjacent to the root side.
    RootFace,
    /// Largest face degree.
    MaxFace,
    /// Arc fraction of the longest chord.
    LongestChord,
    /// Chords separating the points at angles `2πα` and `2πβ`, divided by `√n`.
    Intersections { alpha: f64, beta: f64 },
    /// Height of the encoding tree divided by the square root of its size.
    Height,
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Self::RootVertex => "root-vertex",
            Self::MaxVertex => "max-vertex",
            Self::RootFace => "root-face",
            Self::MaxFace => "max-face",
            Self::LongestChord => "longest-chord",
            Self::Intersections { .. } => "intersections",
            Self::Height => "height",
        }
    }

    /// Whether the statistic takes integer values.
    pub fn is_discrete(&self) -> bool {
        matches!(self, Self::RootVertex | Self::MaxVertex | Self::RootFace | Self::MaxFace)
    }

    /// Evaluates the statistic; `n` is the model size parameter.
    pub fn evaluate(&self, c: &Configuration, n: usize) -> Result<f64, AnalyticsError> {
        let d = &c.diagram;
        Ok(match *self {
            Self::RootVertex => root_vertex_diagonals(d) as f64,
            Self::MaxVertex => max_vertex_diagonals(d) as f64,
            Self::RootFace => root_face_degree(d)? as f64,
            Self::MaxFace => max_face_degree(d)? as f64,
            Self::LongestChord => longest_chord(d),
            Self::Intersections { alpha, beta } => intersections(d, alpha, beta)? as f64 / (n as f64).sqrt(),
            Self::Height => height_over_sqrt_size(&c.tree),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a statistic name; intersections default to `α = 0.1, β = 0.6`.
impl FromStr for Statistic {
    type Err = AnalyticsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "root-vertex" => Self::RootVertex,
            "max-vertex" => Self::MaxVertex,
            "root-face" => Self::RootFace,
            "max-face" => Self::MaxFace,
            "longest-chord" => Self::LongestChord,
            "intersections" => Self::Intersections { alpha: 0.1, beta: 0.6 },
            "height" => Self::Height,
            other => return Err(AnalyticsError::Domain(format!("unknown statistic {other:?}"))),
        })
    }
}

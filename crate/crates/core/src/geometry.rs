//! Chords of the unit disk: crossing tests, sizes, intersection counts,
//! Hausdorff distances, and the Brownian excursion with the lamination it
//! codes.
//!
//! A point of the circle is given by its angular fraction `s ∈ [0, 1)`, the
//! point `exp(-2iπs)`. Polygon position `a` of `P_m` has fraction `a / m`.

use crate::configurations::{ChordDiagram, DiagramKind};
use crate::path::DiscretePath;
use rand::Rng;
use rand_distr::StandardNormal;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("not an excursion: {0}")]
    NotAnExcursion(String),
    #[error("chords cross")]
    Crossing,
}

fn ordered<T: PartialOrd>(c: (T, T)) -> (T, T) {
    if c.0 <= c.1 {
        c
    } else {
        (c.1, c.0)
    }
}

/// True iff the endpoints strictly interleave. Shared endpoints do not count.
pub fn crossing<T: PartialOrd + Copy>(c1: (T, T), c2: (T, T)) -> bool {
    let (a, b) = ordered(c1);
    let (c, d) = ordered(c2);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Checks that no two chords cross, in `O(k log k)` for `k` chords.
///
/// Chords seen as intervals `[a, b]` must form a laminar family: sorted by
/// left end (longest first), each interval must fit inside the innermost
/// open interval that has not ended yet.
pub fn is_non_crossing<T: PartialOrd + Copy>(chords: &[(T, T)]) -> bool {
    let mut sorted: Vec<(T, T)> = chords.iter().map(|&c| ordered(c)).collect();
    sorted.sort_by(|x, y| {
        x.0.partial_cmp(&y.0).expect("comparable endpoints").then(y.1.partial_cmp(&x.1).expect("comparable endpoints"))
    });
    let mut open: Vec<(T, T)> = Vec::new();
    for (c, d) in sorted {
        while open.last().is_some_and(|&(_, b)| b <= c) {
            open.pop();
        }
        if let Some(&(_, b)) = open.last() {
            if d > b {
                return false;
            }
        }
        open.push((c, d));
    }
    true
}

/// Size of a chord as the smaller fraction of the circle it cuts off.
pub fn arc_fraction(s: f64, t: f64) -> f64 {
    let gap = (t - s).abs().rem_euclid(1.0);
    gap.min(1.0 - gap)
}

/// Euclidean length of a chord of the unit circle with the given arc fraction.
pub fn euclidean_length(arc: f64) -> f64 {
    2.0 * (std::f64::consts::PI * arc).sin()
}

/// A finite set of non-crossing chords of the closed unit disk, optionally
/// together with the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct Lamination {
    chords: Vec<(f64, f64)>,
    include_circle: bool,
}

impl Lamination {
    pub fn new(chords: Vec<(f64, f64)>, include_circle: bool) -> Result<Self, GeometryError> {
        let chords: Vec<(f64, f64)> = chords.into_iter().map(ordered).collect();
        if let Some(&(s, t)) = chords.iter().find(|&&(s, t)| !(0.0 <= s && s < t && t < 1.0)) {
            return Err(GeometryError::Domain(format!("chord ({s}, {t}) is not in [0, 1)")));
        }
        if !is_non_crossing(&chords) {
            return Err(GeometryError::Crossing);
        }
        Ok(Self { chords, include_circle })
    }

    /// The chords of a diagram with positions scaled to `[0, 1)`; the circle
    /// is included.
    pub fn from_diagram(d: &ChordDiagram) -> Self {
        let m = d.polygon() as f64;
        let chords = d.chords().iter().map(|&(a, b)| (a as f64 / m, b as f64 / m)).collect();
        Self { chords, include_circle: true }
    }

    pub fn chords(&self) -> &[(f64, f64)] {
        &self.chords
    }

    pub fn include_circle(&self) -> bool {
        self.include_circle
    }

    /// Largest arc fraction of a chord, 0 without chords.
    pub fn longest_chord(&self) -> f64 {
        self.chords.iter().map(|&(s, t)| arc_fraction(s, t)).fold(0.0, f64::max)
    }
}

/// Largest arc fraction among the chords of a diagram; for dissections the
/// chords are the diagonals. Returns 0 without chords.
pub fn longest_chord(d: &ChordDiagram) -> f64 {
    let m = d.polygon() as f64;
    d.chords().iter().map(|&(a, b)| arc_fraction(a as f64 / m, b as f64 / m)).fold(0.0, f64::max)
}

/// A longest chord of a diagram, by integer arc length.
pub fn longest_chord_endpoints(d: &ChordDiagram) -> Option<(usize, usize)> {
    let m = d.polygon();
    d.chords().iter().copied().max_by_key(|&(a, b)| (b - a).min(m - (b - a)))
}

const VERTEX_NUDGE: f64 = 1e-9;

/// Number of elements of a dissection (diagonals and sides) crossed by the
/// segment between the points of fractions `alpha` and `beta`.
///
/// An element is crossed when exactly one of its endpoints lies strictly
/// between `alpha` and `beta`. The count is 0 when the segment is itself an
/// element of the dissection. An endpoint of the segment that falls on a
/// polygon vertex is moved by `1e-9` in the clockwise direction.
pub fn intersections(d: &ChordDiagram, alpha: f64, beta: f64) -> Result<usize, GeometryError> {
    if d.kind() != DiagramKind::Dissection {
        return Err(GeometryError::Domain("intersections are defined for dissections".into()));
    }
    if !(0.0 <= alpha && alpha < beta && beta < 1.0) {
        return Err(GeometryError::Domain(format!("need 0 <= alpha < beta < 1, got ({alpha}, {beta})")));
    }
    let m = d.polygon();
    let mf = m as f64;
    let vertex_of = |x: f64| {
        let scaled = x * mf;
        let r = scaled.round();
        ((scaled - r).abs() < 1e-12).then_some(r as usize % m)
    };
    if let (Some(a), Some(b)) = (vertex_of(alpha), vertex_of(beta)) {
        let probe = (a.min(b), a.max(b));
        if d.chords().contains(&probe) || d.is_side(probe) {
            return Ok(0);
        }
    }
    let nudge = |x: f64| if vertex_of(x).is_some() { x + VERTEX_NUDGE } else { x };
    let (lo, hi) = (nudge(alpha) * mf, nudge(beta) * mf);
    let inside = |a: usize| lo < a as f64 && (a as f64) < hi;
    let crossed = |&(a, b): &(usize, usize)| inside(a) != inside(b);
    let sides = (0..m).map(|i| (i, (i + 1) % m)).filter(crossed).count();
    let diagonals = d.chords().iter().filter(|c| crossed(c)).count();
    Ok(sides + diagonals)
}

fn sample_segment(p: (f64, f64), q: (f64, f64), delta: f64, out: &mut Vec<(f64, f64)>) {
    let len = ((q.0 - p.0).powi(2) + (q.1 - p.1).powi(2)).sqrt();
    let steps = (len / delta).ceil().max(1.0) as usize;
    for i in 0..=steps {
        let t = i as f64 / steps as f64;
        out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
    }
}

fn point_of(s: f64) -> (f64, f64) {
    let angle = -2.0 * std::f64::consts::PI * s;
    (angle.cos(), angle.sin())
}

fn sample_lamination(l: &Lamination, delta: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &(s, t) in &l.chords {
        sample_segment(point_of(s), point_of(t), delta, &mut out);
    }
    if l.include_circle {
        let steps = (2.0 * std::f64::consts::PI / delta).ceil() as usize;
        out.extend((0..steps).map(|i| point_of(i as f64 / steps as f64)));
    }
    out
}

struct Grid {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<(f64, f64)>>,
}

impl Grid {
    fn new(points: &[(f64, f64)], cell: f64) -> Self {
        let mut buckets: HashMap<(i64, i64), Vec<(f64, f64)>> = HashMap::new();
        for &p in points {
            buckets.entry(Self::key(p, cell)).or_default().push(p);
        }
        Self { cell, buckets }
    }

    fn key(p: (f64, f64), cell: f64) -> (i64, i64) {
        ((p.0 / cell).floor() as i64, (p.1 / cell).floor() as i64)
    }

    /// Distance from `p` to the nearest stored point, searching rings of cells
    /// until no unvisited cell can hold a closer point.
    fn nearest(&self, p: (f64, f64)) -> f64 {
        let (cx, cy) = Self::key(p, self.cell);
        let mut best = f64::INFINITY;
        let max_ring = (4.0 / self.cell).ceil() as i64 + 2;
        for r in 0..=max_ring {
            if best <= (r - 1).max(0) as f64 * self.cell {
                break;
            }
            for dx in -r..=r {
                for dy in -r..=r {
                    if dx.abs() != r && dy.abs() != r {
                        continue;
                    }
                    if let Some(bucket) = self.buckets.get(&(cx + dx, cy + dy)) {
                        for q in bucket {
                            let d = ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt();
                            best = best.min(d);
                        }
                    }
                }
            }
        }
        best
    }
}

/// Hausdorff distance between two laminations seen as closed subsets of the
/// disk, up to an additive error of at most `delta`. Both sets are replaced
/// by points at spacing at most `delta`, which moves the distance by at most
/// `delta / 2`.
pub fn hausdorff(a: &Lamination, b: &Lamination, delta: f64) -> Result<f64, GeometryError> {
    if !(delta > 0.0) {
        return Err(GeometryError::Domain(format!("delta must be positive, got {delta}")));
    }
    let pa = sample_lamination(a, delta);
    let pb = sample_lamination(b, delta);
    match (pa.is_empty(), pb.is_empty()) {
        (true, true) => return Ok(0.0),
        (true, false) | (false, true) => return Ok(f64::INFINITY),
        _ => {}
    }
    let directed = |from: &[(f64, f64)], to: &[(f64, f64)]| {
        let grid = Grid::new(to, delta.max(1e-3));
        from.iter().map(|&p| grid.nearest(p)).fold(0.0, f64::max)
    };
    Ok(directed(&pa, &pb).max(directed(&pb, &pa)))
}

/// Discretized normalized Brownian excursion on `grid + 1` equally spaced
/// times of `[0, 1]`: a Gaussian bridge rotated at its minimum.
pub fn brownian_excursion<R: Rng + ?Sized>(grid: usize, rng: &mut R) -> Result<DiscretePath, GeometryError> {
    if grid < 2 {
        return Err(GeometryError::Domain(format!("grid must be at least 2, got {grid}")));
    }
    let scale = (grid as f64).recip().sqrt();
    let mut walk = Vec::with_capacity(grid + 1);
    walk.push(0.0);
    let mut acc = 0.0;
    for _ in 0..grid {
        let z: f64 = rng.sample(StandardNormal);
        acc += z * scale;
        walk.push(acc);
    }
    let end = walk[grid];
    let bridge: Vec<f64> = walk.iter().enumerate().map(|(i, w)| w - end * i as f64 / grid as f64).collect();
    let (argmin, _) =
        bridge[..grid]
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |(bi, bv), (i, &v)| if v < bv { (i, v) } else { (bi, bv) });
    let base = bridge[argmin];
    let mut values: Vec<f64> = (0..=grid).map(|i| bridge[(argmin + i) % grid] - base).collect();
    values[0] = 0.0;
    values[grid] = 0.0;
    Ok(DiscretePath::new(values, 1.0))
}

/// The lamination coded by an excursion on a grid. Each grid time `i` where
/// the path goes up is joined to the first later time at which the path comes
/// back to the level `e(i)` (linearly interpolated). Chords that degenerate to
/// a point of the circle are dropped.
pub fn lamination_from_excursion(e: &DiscretePath) -> Result<Lamination, GeometryError> {
    let v = e.values();
    let grid = e.grid();
    const EPS: f64 = 1e-12;
    if v[0].abs() > EPS || v[grid].abs() > EPS {
        return Err(GeometryError::NotAnExcursion("endpoints are not at zero".into()));
    }
    if let Some(x) = v.iter().find(|&&x| x < -EPS || !x.is_finite()) {
        return Err(GeometryError::NotAnExcursion(format!("value {x} is negative or not finite")));
    }
    // next_le[i] = first j > i with v[j] <= v[i]
    let mut next_le = vec![usize::MAX; grid + 1];
    let mut stack: Vec<usize> = Vec::new();
    for j in 0..=grid {
        while let Some(&i) = stack.last() {
            if v[j] <= v[i] {
                next_le[i] = j;
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(j);
    }
    let g = grid as f64;
    let mut chords = Vec::new();
    for i in 0..grid {
        if v[i + 1] <= v[i] || next_le[i] == usize::MAX {
            continue;
        }
        let j = next_le[i];
        let (hi, lo) = (v[j - 1], v[j]);
        let frac = if hi > lo { (hi - v[i]) / (hi - lo) } else { 1.0 };
        let s = i as f64 / g;
        let t = ((j - 1) as f64 + frac) / g;
        if t >= 1.0 - 1e-12 {
            if s > 1e-12 {
                chords.push((0.0, s));
            }
        } else if t - s > 1e-12 {
            chords.push((s, t));
        }
    }
    chords.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    chords.dedup();
    Lamination::new(chords, true)
}

//! JSON-lines and SVG renderings of diagrams.

use noncross::configurations::{ChordDiagram, DiagramKind, Model};
use noncross::NonCrossingPartition;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Write;

/// One sampled diagram as written by `sample --format json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub model: String,
    pub polygon: usize,
    pub chords: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub blocks: Option<Vec<Vec<usize>>>,
    pub seed: u64,
    pub stream: u64,
}

impl DiagramRecord {
    pub fn new(
        model: &Model,
        diagram: &ChordDiagram,
        partition: Option<&NonCrossingPartition>,
        seed: u64,
        stream: u64,
    ) -> Self {
        Self {
            model: model.name().to_string(),
            polygon: diagram.polygon(),
            chords: diagram.chords().iter().map(|&(a, b)| [a, b]).collect(),
            blocks: partition.map(|p| p.blocks().to_vec()),
            seed,
            stream,
        }
    }

    /// Rebuilds the diagram, checking the invariant of its kind.
    pub fn diagram(&self) -> Result<ChordDiagram, String> {
        let kind = kind_of(&self.model).ok_or_else(|| format!("unknown model {:?}", self.model))?;
        ChordDiagram::new(self.polygon, self.chords.iter().map(|c| (c[0], c[1])).collect(), kind)
            .map_err(|e| e.to_string())
    }
}

/// Diagram kind produced by a model name.
pub fn kind_of(model: &str) -> Option<DiagramKind> {
    Some(match model {
        "dissection" | "triangulation" | "dissection-A" => DiagramKind::Dissection,
        "nct" => DiagramKind::Nct,
        "pair-partition" => DiagramKind::PairPartition,
        "partition" => DiagramKind::PartitionHulls,
        "nc-graph" => DiagramKind::NcGraph,
        _ => return None,
    })
}

const SIZE: f64 = 1000.0;
const CENTER: f64 = 500.0;
const RADIUS: f64 = 480.0;

fn point(angle_fraction: f64) -> (f64, f64) {
    let theta = -2.0 * PI * angle_fraction;
    (CENTER + RADIUS * theta.cos(), CENTER + RADIUS * theta.sin())
}

fn header(out: &mut String) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r##"<circle cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="#cccccc" stroke-width="1"/>"##
    )
    .unwrap();
}

/// The polygon with its vertices on the circle and the chords as straight
/// segments, in sorted chord order.
pub fn diagram_svg(d: &ChordDiagram) -> String {
    let m = d.polygon();
    let mut out = String::new();
    header(&mut out);
    let vertices: Vec<String> = (0..m)
        .map(|a| {
            let (x, y) = point(a as f64 / m as f64);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    writeln!(out, r##"<polygon points="{}" fill="none" stroke="#888888" stroke-width="1"/>"##, vertices.join(" "))
        .unwrap();
    for &(a, b) in d.chords() {
        chord_line(&mut out, a as f64 / m as f64, b as f64 / m as f64);
    }
    out.push_str("</svg>\n");
    out
}

fn chord_line(out: &mut String, s: f64, t: f64) {
    let (x1, y1) = point(s);
    let (x2, y2) = point(t);
    writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="2"/>"#)
        .unwrap();
}

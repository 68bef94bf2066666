//! Non-crossing configurations of the polygon `P_m` and their tree encodings.
//!
//! Polygon vertices are numbered `0..m` clockwise; position `a` sits at the
//! angle `-2πa/m`. Chords are stored as pairs `(a, b)` with `a < b`.
//!
//! * Dissections of `P_{n+1}` correspond to plane trees with `n` leaves and no
//!   vertex of out-degree one. Leaf `i` (lexicographic order, from 1) is the
//!   side `{i-1, i}`, the root is the face containing the side `{0, m-1}`.
//! * Non-crossing spanning trees of `P_m` correspond to a plane tree with `m`
//!   vertices (the shape) together with one split per non-root vertex.
//! * Pair partitions of `P_{2n}` correspond to plane trees with `n` edges
//!   through the balanced-parenthesis word of their contour.

use crate::geometry::is_non_crossing;
use crate::offspring::{feasible_leaf_counts, nct_nu, nct_root, nu_a, DegreeSet};
use crate::samplers::{
    sample_uniform_tree_edges, InternalDegrees, LeafConditioned, NoUnaryLeafTrees, SampleBudget, SampleError,
    SizeConditioned,
};
use crate::trees::PlaneTree;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("not a dissection: {0}")]
    NotADissection(String),
    #[error("vertex {0} has exactly one child")]
    UnaryVertex(usize),
    #[error("not a non-crossing spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("split {split} at vertex {vertex} exceeds its degree {degree}")]
    InvalidSplit { vertex: usize, split: u32, degree: u32 },
    #[error("invalid chord diagram: {0}")]
    Invalid(String),
    #[error(transparent)]
    Sample(#[from] SampleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramKind {
    Dissection,
    Nct,
    PairPartition,
    PartitionHulls,
    NcGraph,
}

/// A set of pairwise non-crossing chords of `P_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    m: usize,
    chords: Vec<(usize, usize)>,
    kind: DiagramKind,
}

impl ChordDiagram {
    /// Normalizes, sorts and validates the chords against the kind invariant.
    pub fn new(m: usize, chords: Vec<(usize, usize)>, kind: DiagramKind) -> Result<Self, ConfigError> {
        if m < 2 {
            return Err(ConfigError::Invalid(format!("polygon size {m} is too small")));
        }
        let mut chords: Vec<(usize, usize)> = chords.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        chords.sort_unstable();
        if let Some(&(a, b)) = chords.iter().find(|&&(a, b)| a == b || b >= m) {
            return Err(ConfigError::Invalid(format!("chord ({a}, {b}) is not a pair of distinct vertices of P_{m}")));
        }
        if chords.windows(2).any(|w| w[0] == w[1]) {
            return Err(ConfigError::Invalid("duplicate chord".into()));
        }
        if !is_non_crossing(&chords) {
            return Err(ConfigError::Invalid("chords cross".into()));
        }
        let diagram = Self { m, chords, kind };
        diagram.check_kind()?;
        Ok(diagram)
    }

    fn check_kind(&self) -> Result<(), ConfigError> {
        let m = self.m;
        match self.kind {
            DiagramKind::Dissection => {
                if m < 3 {
                    return Err(ConfigError::NotADissection(format!("P_{m} is not a polygon")));
                }
                if let Some(&(a, b)) = self.chords.iter().find(|&&(a, b)| b - a == 1 || b - a == m - 1) {
                    return Err(ConfigError::NotADissection(format!("({a}, {b}) is a side")));
                }
            }
            DiagramKind::Nct => {
                if self.chords.len() != m - 1 {
                    return Err(ConfigError::NotSpanningTree(format!("{} edges on {m} vertices", self.chords.len())));
                }
                let mut uf = UnionFind::new(m);
                for &(a, b) in &self.chords {
                    if !uf.union(a, b) {
                        return Err(ConfigError::NotSpanningTree("cycle".into()));
                    }
                }
            }
            DiagramKind::PairPartition => {
                let mut degree = vec![0u8; m];
                for &(a, b) in &self.chords {
                    degree[a] += 1;
                    degree[b] += 1;
                }
                if m % 2 != 0 || degree.iter().any(|&d| d != 1) {
                    return Err(ConfigError::Invalid("not a perfect matching".into()));
                }
            }
            DiagramKind::PartitionHulls | DiagramKind::NcGraph => {}
        }
        Ok(())
    }

    pub fn polygon(&self) -> usize {
        self.m
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn is_side(&self, chord: (usize, usize)) -> bool {
        let (a, b) = chord;
        b - a == 1 || b - a == self.m - 1
    }

    /// Chords that are not sides of the polygon.
    pub fn diagonals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.chords.iter().copied().filter(move |&c| !self.is_side(c))
    }

    /// Number of diagonals with an endpoint at each vertex.
    pub fn diagonal_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for (a, b) in self.diagonals() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// The dual tree of a dissection, built face by face from the root side.
///
/// Inside the region cut off by a chord `(a, b)`, the face adjacent to that
/// chord is traced from `a`: from a face vertex `v` the next one is the
/// farthest `d <= b` joined to `v` by a diagonal other than `(a, b)`, or
/// `v + 1` if there is none. The face edges, in that order, are the children.
pub fn dual_tree(d: &ChordDiagram) -> Result<PlaneTree, ConfigError> {
    if d.kind != DiagramKind::Dissection {
        return Err(ConfigError::NotADissection(format!("diagram kind is {:?}", d.kind)));
    }
    let m = d.m;
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, b) in &d.chords {
        neighbours[a].push(b);
    }
    // Chords are sorted, so each list is increasing.
    let mut degrees = Vec::with_capacity(2 * m);
    let mut stack = vec![(0usize, m - 1)];
    let mut face = Vec::new();
    while let Some((a, b)) = stack.pop() {
        if b == a + 1 {
            degrees.push(0);
            continue;
        }
        face.clear();
        let mut v = a;
        while v != b {
            let list = &neighbours[v];
            let idx = list.partition_point(|&x| x <= b);
            let mut next = v + 1;
            for &x in list[..idx].iter().rev() {
                if !(v == a && x == b) {
                    next = next.max(x);
                    break;
                }
            }
            face.push((v, next));
            v = next;
        }
        degrees.push(face.len() as u32);
        stack.extend(face.iter().rev().copied());
    }
    PlaneTree::from_degrees(degrees).map_err(|e| ConfigError::NotADissection(e.to_string()))
}

/// The dissection encoded by a tree without unary vertices: every internal
/// non-root vertex whose leaves are `first..=last` gives the chord
/// `{first - 1, last}`.
pub fn dissection_from_tree(t: &PlaneTree) -> Result<ChordDiagram, ConfigError> {
    if let Some(u) = t.degrees().iter().position(|&k| k == 1) {
        return Err(ConfigError::UnaryVertex(u));
    }
    let leaves = t.leaf_count();
    if leaves < 2 {
        return Err(ConfigError::NotADissection("a dissection needs at least two leaves".into()));
    }
    let spans = t.leaf_spans();
    let chords = (1..t.size()).filter(|&u| t.degree(u) > 0).map(|u| (spans[u].0 - 1, spans[u].1)).collect();
    ChordDiagram::new(leaves + 1, chords, DiagramKind::Dissection)
}

/// Face degrees of a dissection, one per internal vertex of its dual tree.
pub fn face_degrees(d: &ChordDiagram) -> Result<Vec<u32>, ConfigError> {
    let t = dual_tree(d)?;
    Ok(t.degrees().iter().filter(|&&k| k > 0).map(|&k| k + 1).collect())
}

/// Number of children folded toward the parent, per vertex; the root entry is 0.
pub type SplitVector = Vec<u32>;

/// Shape and splits of a non-crossing spanning tree rooted at position 0.
/// Children are ordered by increasing position and the split of `u` counts
/// the children placed before `u`.
pub fn nct_shape(c: &ChordDiagram) -> Result<(PlaneTree, SplitVector), ConfigError> {
    if c.kind != DiagramKind::Nct {
        return Err(ConfigError::NotSpanningTree(format!("diagram kind is {:?}", c.kind)));
    }
    let m = c.m;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, b) in &c.chords {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut degrees = Vec::with_capacity(m);
    let mut splits = Vec::with_capacity(m);
    // (position, parent position)
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((p, parent)) = stack.pop() {
        let kids: Vec<usize> = adj[p].iter().copied().filter(|&x| x != parent).collect();
        degrees.push(kids.len() as u32);
        splits.push(if parent == usize::MAX { 0 } else { kids.iter().filter(|&&x| x < p).count() as u32 });
        stack.extend(kids.iter().rev().map(|&x| (x, p)));
    }
    if degrees.len() != m {
        return Err(ConfigError::NotSpanningTree("not connected".into()));
    }
    let tree = PlaneTree::from_degrees(degrees).map_err(|e| ConfigError::NotSpanningTree(e.to_string()))?;
    Ok((tree, splits))
}

/// The non-crossing tree with the given shape and splits. Each subtree fills
/// a contiguous run of positions; inside the run of `u`, the first `s_u`
/// child subtrees come before `u` and the others after it.
pub fn nct_embed(t: &PlaneTree, s: &[u32]) -> Result<ChordDiagram, ConfigError> {
    let m = t.size();
    if s.len() != m {
        return Err(ConfigError::Invalid(format!("{} splits for {m} vertices", s.len())));
    }
    if s[0] != 0 {
        return Err(ConfigError::InvalidSplit { vertex: 0, split: s[0], degree: t.degree(0) });
    }
    for u in 1..m {
        if s[u] > t.degree(u) {
            return Err(ConfigError::InvalidSplit { vertex: u, split: s[u], degree: t.degree(u) });
        }
    }
    let sizes = t.subtree_sizes();
    let mut lo = vec![0usize; m];
    let mut pos = vec![0usize; m];
    let mut edges = Vec::with_capacity(m.saturating_sub(1));
    for u in 0..m {
        let kids: Vec<usize> = t.children(u, &sizes).collect();
        let before: usize = kids[..s[u] as usize].iter().map(|&c| sizes[c]).sum();
        pos[u] = lo[u] + before;
        let mut cursor = lo[u];
        for (i, &c) in kids.iter().enumerate() {
            if i == s[u] as usize {
                cursor = pos[u] + 1;
            }
            lo[c] = cursor;
            cursor += sizes[c];
        }
    }
    let parents = t.parents();
    for u in 1..m {
        let p = parents[u].expect("non-root vertex");
        edges.push((pos[p], pos[u]));
    }
    if m == 1 {
        return Err(ConfigError::Invalid("a polygon needs at least two vertices".into()));
    }
    ChordDiagram::new(m, edges, DiagramKind::Nct)
}

/// Chords of `P_{2n}` joining matched parentheses of the tree's contour word.
pub fn pair_partition_from_tree(t: &PlaneTree) -> Result<ChordDiagram, ConfigError> {
    let word = t.dyck_word();
    if word.is_empty() {
        return Err(ConfigError::Invalid("the tree has no edge".into()));
    }
    let mut open = Vec::new();
    let mut chords = Vec::with_capacity(word.len() / 2);
    for (i, &up) in word.iter().enumerate() {
        if up {
            open.push(i);
        } else {
            chords.push((open.pop().expect("balanced word"), i));
        }
    }
    ChordDiagram::new(word.len(), chords, DiagramKind::PairPartition)
}

/// Inverse of [`pair_partition_from_tree`].
pub fn tree_from_pair_partition(p: &ChordDiagram) -> Result<PlaneTree, ConfigError> {
    if p.kind != DiagramKind::PairPartition {
        return Err(ConfigError::Invalid(format!("diagram kind is {:?}", p.kind)));
    }
    let mut word = vec![false; p.m];
    for &(a, _) in &p.chords {
        word[a] = true;
    }
    PlaneTree::from_dyck_word(&word).map_err(|e| ConfigError::Invalid(e.to_string()))
}

/// A non-crossing partition of `{0, .., n-1}`; blocks are sorted and listed
/// by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NonCrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NonCrossingPartition {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Convex hull boundaries of the blocks, as chords of `P_n`.
    pub fn hulls(&self) -> ChordDiagram {
        let mut chords = BTreeSet::new();
        for block in &self.blocks {
            for w in block.windows(2) {
                chords.insert((w[0], w[1]));
            }
            if block.len() > 2 {
                chords.insert((block[0], block[block.len() - 1]));
            }
        }
        ChordDiagram::new(self.n.max(2), chords.into_iter().collect(), DiagramKind::PartitionHulls)
            .expect("hulls of a non-crossing partition do not cross")
    }
}

/// Identifies positions `2i` and `2i + 1` of a pair partition of `P_{2n}`
/// into the vertex `i` of `P_n`.
pub fn contract_to_partition(p: &ChordDiagram) -> Result<NonCrossingPartition, ConfigError> {
    if p.kind != DiagramKind::PairPartition {
        return Err(ConfigError::Invalid(format!("diagram kind is {:?}", p.kind)));
    }
    let n = p.m / 2;
    let mut uf = UnionFind::new(p.m);
    for i in 0..n {
        uf.union(2 * i, 2 * i + 1);
    }
    for &(a, b) in &p.chords {
        uf.union(a, b);
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        by_root.entry(uf.find(2 * i)).or_default().push(i);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
    blocks.sort();
    Ok(NonCrossingPartition { n, blocks })
}

/// The random configuration models.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Model {
    /// Dissections of `P_{n+1}`.
    Dissection,
    /// Triangulations of `P_{n+1}`.
    Triangulation,
    /// Dissections of `P_{n+1}` with face degrees in a set.
    DissectionA(DegreeSet),
    /// Non-crossing spanning trees of `P_n`.
    Nct,
    /// Pair partitions of `P_{2n}`.
    PairPartition,
    /// Non-crossing partitions of `P_n`.
    Partition,
    /// Non-crossing graphs on the vertices of `P_n`.
    NcGraph,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Dissection => "dissection",
            Self::Triangulation => "triangulation",
            Self::DissectionA(_) => "dissection-A",
            Self::Nct => "nct",
            Self::PairPartition => "pair-partition",
            Self::Partition => "partition",
            Self::NcGraph => "nc-graph",
        }
    }

    /// Number of polygon vertices for the size parameter `n`.
    pub fn polygon(&self, n: usize) -> usize {
        match self {
            Self::Dissection | Self::Triangulation | Self::DissectionA(_) => n + 1,
            Self::PairPartition => 2 * n,
            Self::Nct | Self::Partition | Self::NcGraph => n,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses model names; `dissection-A` takes its degree set separately.
impl FromStr for Model {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "dissection" => Self::Dissection,
            "triangulation" => Self::Triangulation,
            "dissection-A" | "dissection-a" => Self::DissectionA(DegreeSet::all()),
            "nct" => Self::Nct,
            "pair-partition" => Self::PairPartition,
            "partition" => Self::Partition,
            "nc-graph" => Self::NcGraph,
            other => return Err(ConfigError::Invalid(format!("unknown model {other:?}"))),
        })
    }
}

/// One sampled configuration with the tree that encodes it.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub diagram: ChordDiagram,
    pub tree: PlaneTree,
    pub partition: Option<NonCrossingPartition>,
}

#[derive(Debug, Clone)]
enum Engine {
    NoUnary(NoUnaryLeafTrees),
    Leaves(LeafConditioned),
    Size(SizeConditioned),
    Edges,
}

/// Uniform sampler for one model at one size, prepared once and reused.
#[derive(Debug, Clone)]
pub struct ModelSampler {
    model: Model,
    n: usize,
    engine: Engine,
    budget: SampleBudget,
}

impl ModelSampler {
    pub fn new(model: Model, n: usize) -> Result<Self, ConfigError> {
        let infeasible = |why: String| Err(ConfigError::Sample(SampleError::Infeasible(why)));
        let leaves = |set: &DegreeSet, leaves: usize| -> Result<Engine, ConfigError> {
            if leaves < 2 || !feasible_leaf_counts(set, leaves)[leaves] {
                return Err(ConfigError::Sample(SampleError::Infeasible(format!(
                    "no dissection of P_{} has all face degrees in {{{set}}}",
                    leaves + 1
                ))));
            }
            if *set == DegreeSet::all() {
                return Ok(Engine::NoUnary(NoUnaryLeafTrees::new(leaves, InternalDegrees::AtLeastTwo)?));
            }
            if *set == DegreeSet::triangles() {
                return Ok(Engine::NoUnary(NoUnaryLeafTrees::new(leaves, InternalDegrees::Binary)?));
            }
            Ok(Engine::Leaves(LeafConditioned::new(nu_a(set).dist, leaves)?))
        };
        let engine = match &model {
            Model::Dissection => leaves(&DegreeSet::all(), n)?,
            Model::Triangulation => leaves(&DegreeSet::triangles(), n)?,
            Model::DissectionA(set) => leaves(set, n)?,
            Model::Nct => {
                if n < 2 {
                    return infeasible(format!("non-crossing trees need at least 2 vertices, got {n}"));
                }
                Engine::Size(SizeConditioned::new(nct_root(), nct_nu(), n)?)
            }
            Model::PairPartition | Model::Partition => {
                if n < 1 {
                    return infeasible("the size must be at least 1".into());
                }
                Engine::Edges
            }
            Model::NcGraph => {
                if n < 3 {
                    return infeasible(format!("non-crossing graphs need a polygon, got P_{n}"));
                }
                leaves(&DegreeSet::all(), n - 1)?
            }
        };
        Ok(Self { model, n, engine, budget: SampleBudget::default() })
    }

    pub fn with_budget(mut self, budget: SampleBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Configuration, ConfigError> {
        match (&self.model, &self.engine) {
            (Model::Nct, Engine::Size(s)) => {
                let tree = s.sample(rng, self.budget)?;
                let splits: Vec<u32> = tree
                    .degrees()
                    .iter()
                    .enumerate()
                    .map(|(u, &k)| if u == 0 { 0 } else { rng.random_range(0..=k) })
                    .collect();
                let diagram = nct_embed(&tree, &splits)?;
                Ok(Configuration { diagram, tree, partition: None })
            }
            (Model::PairPartition, Engine::Edges) => {
                let tree = sample_uniform_tree_edges(self.n, rng);
                let diagram = pair_partition_from_tree(&tree)?;
                Ok(Configuration { diagram, tree, partition: None })
            }
            (Model::Partition, Engine::Edges) => {
                let tree = sample_uniform_tree_edges(self.n, rng);
                let pairs = pair_partition_from_tree(&tree)?;
                let partition = contract_to_partition(&pairs)?;
                Ok(Configuration { diagram: partition.hulls(), tree, partition: Some(partition) })
            }
            (Model::NcGraph, Engine::NoUnary(s)) => {
                let tree = s.sample(rng);
                let dissection = dissection_from_tree(&tree)?;
                let m = self.n;
                let mut chords = dissection.chords().to_vec();
                for i in 0..m {
                    if rng.random_bool(0.5) {
                        chords.push((i, (i + 1) % m));
                    }
                }
                let diagram = ChordDiagram::new(m, chords, DiagramKind::NcGraph)?;
                Ok(Configuration { diagram, tree, partition: None })
            }
            (_, Engine::NoUnary(s)) => {
                let tree = s.sample(rng);
                let diagram = dissection_from_tree(&tree)?;
                Ok(Configuration { diagram, tree, partition: None })
            }
            (_, Engine::Leaves(s)) => {
                let tree = s.sample(rng, self.budget)?;
                let diagram = dissection_from_tree(&tree)?;
                Ok(Configuration { diagram, tree, partition: None })
            }
            _ => unreachable!("engine is chosen from the model"),
        }
    }
}

/// Uniform dissection of `P_{n+1}`.
pub fn sample_dissection<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ChordDiagram, ConfigError> {
    Ok(ModelSampler::new(Model::Dissection, n)?.sample(rng)?.diagram)
}

/// Uniform dissection of `P_{n+1}` with all face degrees in `set`.
pub fn sample_dissection_a<R: Rng + ?Sized>(
    set: &DegreeSet,
    n: usize,
    rng: &mut R,
) -> Result<ChordDiagram, ConfigError> {
    Ok(ModelSampler::new(Model::DissectionA(set.clone()), n)?.sample(rng)?.diagram)
}

/// Uniform triangulation of `P_{n+1}`.
pub fn sample_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ChordDiagram, ConfigError> {
    Ok(ModelSampler::new(Model::Triangulation, n)?.sample(rng)?.diagram)
}

/// Uniform non-crossing spanning tree of `P_n`.
pub fn sample_nct<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ChordDiagram, ConfigError> {
    Ok(ModelSampler::new(Model::Nct, n)?.sample(rng)?.diagram)
}

/// Uniform pair partition of `P_{2n}`.
pub fn sample_pair_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ChordDiagram, ConfigError> {
    Ok(ModelSampler::new(Model::PairPartition, n)?.sample(rng)?.diagram)
}

/// Uniform non-crossing partition of `P_n`.
pub fn sample_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<NonCrossingPartition, ConfigError> {
    Ok(ModelSampler::new(Model::Partition, n)?.sample(rng)?.partition.expect("partition model"))
}

/// Uniform non-crossing graph on the vertices of `P_n`.
pub fn sample_nc_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ChordDiagram, ConfigError> {
    Ok(ModelSampler::new(Model::NcGraph, n)?.sample(rng)?.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::SimRng;
    use crate::trees::enumerate;

    fn dissection(m: usize, chords: &[(usize, usize)]) -> ChordDiagram {
        ChordDiagram::new(m, chords.to_vec(), DiagramKind::Dissection).unwrap()
    }

    #[test]
    fn dual_tree_examples() {
        assert_eq!(dual_tree(&dissection(4, &[])).unwrap().degrees(), &[3, 0, 0, 0]);
        assert_eq!(dual_tree(&dissection(4, &[(1, 3)])).unwrap().degrees(), &[2, 0, 2, 0, 0]);
        assert_eq!(dual_tree(&dissection(4, &[(0, 2)])).unwrap().degrees(), &[2, 2, 0, 0, 0]);
        assert_eq!(dual_tree(&dissection(3, &[])).unwrap().degrees(), &[2, 0, 0]);
    }

    #[test]
    fn inverse_examples() {
        let t = PlaneTree::from_degrees(vec![3, 0, 0, 0]).unwrap();
        assert_eq!(dissection_from_tree(&t).unwrap(), dissection(4, &[]));
        let t = PlaneTree::from_degrees(vec![2, 0, 2, 0, 0]).unwrap();
        assert_eq!(dissection_from_tree(&t).unwrap(), dissection(4, &[(1, 3)]));
        let unary = PlaneTree::from_degrees(vec![1, 2, 0, 0]).unwrap();
        assert_eq!(dissection_from_tree(&unary), Err(ConfigError::UnaryVertex(0)));
    }

    #[test]
    fn kind_invariants_are_enforced() {
        assert!(ChordDiagram::new(4, vec![(0, 1)], DiagramKind::Dissection).is_err());
        assert!(ChordDiagram::new(4, vec![(0, 2), (1, 3)], DiagramKind::NcGraph).is_err());
        assert!(ChordDiagram::new(4, vec![(0, 1), (1, 2)], DiagramKind::Nct).is_err());
        assert!(ChordDiagram::new(4, vec![(0, 1), (1, 2), (0, 2)], DiagramKind::Nct).is_err());
        assert!(ChordDiagram::new(4, vec![(0, 1), (2, 3)], DiagramKind::PairPartition).is_ok());
        assert!(ChordDiagram::new(4, vec![(0, 1)], DiagramKind::PairPartition).is_err());
        assert!(ChordDiagram::new(4, vec![(0, 5)], DiagramKind::NcGraph).is_err());
    }

    #[test]
    fn bijection_round_trips_exhaustively() {
        for leaves in 2..=7 {
            let trees = enumerate::trees_with_leaves(leaves, |_| true);
            let mut seen = BTreeSet::new();
            for t in &trees {
                let d = dissection_from_tree(t).unwrap();
                assert_eq!(d.polygon(), leaves + 1);
                assert_eq!(&dual_tree(&d).unwrap(), t);
                assert!(seen.insert(d.chords().to_vec()));
            }
        }
    }

    #[test]
    fn face_degree_identities() {
        assert_eq!(face_degrees(&dissection(4, &[])).unwrap(), vec![4]);
        assert_eq!(face_degrees(&dissection(4, &[(1, 3)])).unwrap(), vec![3, 3]);
        for leaves in 2..=7 {
            for t in enumerate::trees_with_leaves(leaves, |_| true) {
                let d = dissection_from_tree(&t).unwrap();
                let degs = face_degrees(&d).unwrap();
                assert_eq!(degs.iter().map(|&f| f as usize - 2).sum::<usize>(), d.polygon() - 2);
                // the face on the root side has degree k_root + 1
                assert_eq!(degs[0], t.root_degree() + 1);
                // diagonals at vertex 0 and the left-most path
                assert_eq!(d.diagonal_degrees()[0], t.leftmost_path_length() - 1);
            }
        }
    }

    #[test]
    fn nct_examples() {
        let star = ChordDiagram::new(3, vec![(0, 1), (0, 2)], DiagramKind::Nct).unwrap();
        let (t, s) = nct_shape(&star).unwrap();
        assert_eq!(t.degrees(), &[2, 0, 0]);
        assert_eq!(s, vec![0, 0, 0]);
        assert_eq!(nct_embed(&t, &s).unwrap(), star);
        let path = ChordDiagram::new(3, vec![(0, 1), (1, 2)], DiagramKind::Nct).unwrap();
        let (t, s) = nct_shape(&path).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 0]);
        assert_eq!(s[1], 0);
        let t = PlaneTree::from_degrees(vec![1, 1, 0]).unwrap();
        assert!(matches!(nct_embed(&t, &[0, 2, 0]), Err(ConfigError::InvalidSplit { vertex: 1, .. })));
    }

    fn all_splits(t: &PlaneTree) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32]];
        for u in 1..t.size() {
            let mut next = Vec::new();
            for prefix in &out {
                for s in 0..=t.degree(u) {
                    let mut v = prefix.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn nct_generation_counts_and_round_trip() {
        for (m, expected) in [(3, 3usize), (4, 12), (5, 55), (6, 273)] {
            let mut diagrams = BTreeSet::new();
            for t in enumerate::trees_with_size(m) {
                for s in all_splits(&t) {
                    let c = nct_embed(&t, &s).unwrap();
                    assert_eq!(nct_shape(&c).unwrap(), (t.clone(), s.clone()));
                    diagrams.insert(c.chords().to_vec());
                }
            }
            assert_eq!(diagrams.len(), expected, "m={m}");
        }
    }

    #[test]
    fn pair_partitions() {
        let one = PlaneTree::from_degrees(vec![1, 0]).unwrap();
        assert_eq!(pair_partition_from_tree(&one).unwrap().chords(), &[(0, 1)]);
        for n in 1..=6 {
            for t in enumerate::trees_with_size(n + 1) {
                let p = pair_partition_from_tree(&t).unwrap();
                assert_eq!(p.polygon(), 2 * n);
                assert_eq!(tree_from_pair_partition(&p).unwrap(), t);
            }
        }
    }

    #[test]
    fn contraction_example() {
        let pairs = [(1, 16), (2, 3), (4, 7), (5, 6), (8, 15), (9, 10), (11, 14), (12, 13)];
        let chords = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        let p = ChordDiagram::new(16, chords, DiagramKind::PairPartition).unwrap();
        let part = contract_to_partition(&p).unwrap();
        let expected: Vec<Vec<usize>> = vec![vec![0, 1, 3, 7], vec![2], vec![4], vec![5, 6]];
        assert_eq!(part.blocks(), expected.as_slice());
        let hulls = part.hulls();
        assert_eq!(hulls.chords(), &[(0, 1), (0, 7), (1, 3), (3, 7), (5, 6)]);
        let single = ChordDiagram::new(2, vec![(0, 1)], DiagramKind::PairPartition).unwrap();
        assert_eq!(contract_to_partition(&single).unwrap().blocks(), &[vec![0]]);
    }

    #[test]
    fn model_samplers_produce_valid_outputs() {
        let mut rng = SimRng::new(21, 0);
        let models = [
            (Model::Dissection, 30),
            (Model::Triangulation, 30),
            (Model::DissectionA("4,5".parse().unwrap()), 30),
            (Model::Nct, 30),
            (Model::PairPartition, 15),
            (Model::Partition, 30),
            (Model::NcGraph, 30),
        ];
        for (model, n) in models {
            let sampler = ModelSampler::new(model.clone(), n).unwrap();
            for _ in 0..200 {
                let c = sampler.sample(&mut rng).unwrap();
                assert_eq!(c.diagram.polygon(), model.polygon(n));
                match &model {
                    Model::Triangulation => assert!(face_degrees(&c.diagram).unwrap().iter().all(|&f| f == 3)),
                    Model::DissectionA(set) => {
                        assert!(face_degrees(&c.diagram).unwrap().iter().all(|&f| set.contains(f)))
                    }
                    Model::Nct => assert_eq!(nct_shape(&c.diagram).unwrap().0, c.tree),
                    _ => {}
                }
            }
        }
        assert_eq!(sample_dissection(2, &mut rng).unwrap(), dissection(3, &[]));
        assert!(matches!(
            sample_dissection_a(&DegreeSet::finite([4]).unwrap(), 4, &mut rng),
            Err(ConfigError::Sample(SampleError::Infeasible(_)))
        ));
    }

    #[test]
    fn model_names_parse() {
        for name in ["dissection", "triangulation", "nct", "pair-partition", "partition", "nc-graph"] {
            assert_eq!(name.parse::<Model>().unwrap().name(), name);
        }
        assert!("square".parse::<Model>().is_err());
    }
}

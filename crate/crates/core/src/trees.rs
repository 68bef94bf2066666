//! Plane trees stored as depth-first out-degree sequences, and the deterministic
//! functionals used throughout the crate (contour and leaf processes, graph
//! distances, left-most path, truncation).
//!
//! Vertices are referred to by their index in lexicographic (depth-first)
//! order; the root is vertex `0` and the first child of `u`, when it exists,
//! is `u + 1`.

use crate::path::DiscretePath;
use thiserror::Error;

/// Largest total progeny a tree may have.
pub const MAX_TREE_SIZE: usize = (1 << 31) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("malformed degree sequence: {0}")]
    MalformedDegreeSequence(String),
    #[error("vertex index {index} out of range for a tree with {size} vertices")]
    IndexOutOfRange { index: usize, size: usize },
}

/// A finite rooted ordered tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    degrees: Vec<u32>,
}

impl PlaneTree {
    /// Validates a depth-first out-degree sequence.
    pub fn from_degrees(degrees: Vec<u32>) -> Result<Self, TreeError> {
        if degrees.is_empty() {
            return Err(TreeError::MalformedDegreeSequence("empty sequence".into()));
        }
        if degrees.len() > MAX_TREE_SIZE {
            return Err(TreeError::MalformedDegreeSequence(format!(
                "{} vertices exceeds the cap of {MAX_TREE_SIZE}",
                degrees.len()
            )));
        }
        let mut walk: i64 = 0;
        for (j, &k) in degrees.iter().enumerate() {
            walk += k as i64 - 1;
            let last = j + 1 == degrees.len();
            if !last && walk < 0 {
                return Err(TreeError::MalformedDegreeSequence(format!(
                    "prefix of length {} closes the tree early",
                    j + 1
                )));
            }
            if last && walk != -1 {
                return Err(TreeError::MalformedDegreeSequence(format!(
                    "degree sum {} does not equal {} - 1",
                    walk + degrees.len() as i64,
                    degrees.len()
                )));
            }
        }
        Ok(Self { degrees })
    }

    /// Caller guarantees the Łukasiewicz conditions.
    pub(crate) fn from_degrees_unchecked(degrees: Vec<u32>) -> Self {
        debug_assert!(Self::from_degrees(degrees.clone()).is_ok());
        Self { degrees }
    }

    /// The tree made of a root alone.
    pub fn singleton() -> Self {
        Self { degrees: vec![0] }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn into_degrees(self) -> Vec<u32> {
        self.degrees
    }

    /// Total progeny ζ.
    pub fn size(&self) -> usize {
        self.degrees.len()
    }

    /// Number of leaves λ.
    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().filter(|&&k| k == 0).count()
    }

    pub fn degree(&self, u: usize) -> u32 {
        self.degrees[u]
    }

    pub fn root_degree(&self) -> u32 {
        self.degrees[0]
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// True if no vertex has exactly one child.
    pub fn has_no_unary_vertex(&self) -> bool {
        self.degrees.iter().all(|&k| k != 1)
    }

    /// Number of vertices in the subtree rooted at each vertex.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let n = self.size();
        let mut sizes = vec![1usize; n];
        // A vertex's subtree closes once its pending-children counter hits zero.
        let mut stack: Vec<(usize, u32)> = Vec::new();
        for u in 0..n {
            let k = self.degrees[u];
            if k > 0 {
                stack.push((u, k));
                continue;
            }
            let mut done = u;
            while let Some(top) = stack.last_mut() {
                top.1 -= 1;
                let parent = top.0;
                sizes[parent] += sizes[done];
                if top.1 > 0 {
                    break;
                }
                done = parent;
                stack.pop();
            }
        }
        sizes
    }

    /// Parent of each vertex; the root maps to `None`.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parents = vec![None; self.size()];
        let mut stack: Vec<(usize, u32)> = Vec::new();
        for (u, slot) in parents.iter_mut().enumerate() {
            if let Some(top) = stack.last_mut() {
                *slot = Some(top.0);
                top.1 -= 1;
                if top.1 == 0 {
                    stack.pop();
                }
            }
            if self.degrees[u] > 0 {
                stack.push((u, self.degrees[u]));
            }
        }
        parents
    }

    /// Generation |u| of each vertex.
    pub fn depths(&self) -> Vec<usize> {
        let parents = self.parents();
        let mut depths = vec![0usize; self.size()];
        // Parents precede their children in lexicographic order.
        for u in 1..self.size() {
            depths[u] = depths[parents[u].expect("non-root vertex has a parent")] + 1;
        }
        depths
    }

    pub fn height(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    /// Children of `u` in order, given precomputed subtree sizes.
    pub fn children<'a>(&'a self, u: usize, sizes: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
        let k = self.degrees[u] as usize;
        let mut next = u + 1;
        (0..k).map(move |_| {
            let c = next;
            next += sizes[c];
            c
        })
    }

    /// Vertex occupied by the contour particle at integer times `0..=2ζ-2`.
    pub fn contour_vertices(&self) -> Vec<usize> {
        let n = self.size();
        let sizes = self.subtree_sizes();
        let mut out = Vec::with_capacity(2 * n - 1);
        // (vertex, children left to visit, index of the next child)
        let mut stack: Vec<(usize, u32, usize)> = vec![(0, self.degrees[0], 1)];
        out.push(0);
        while let Some(top) = stack.last_mut() {
            if top.1 > 0 {
                let child = top.2;
                top.1 -= 1;
                top.2 = child + sizes[child];
                stack.push((child, self.degrees[child], child + 1));
                out.push(child);
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Contour function on integer times `0..=2ζ`, zero-padded after `2ζ-2`.
    pub fn contour(&self) -> DiscretePath {
        let depths = self.depths();
        let mut values: Vec<f64> = self.contour_vertices().iter().map(|&u| depths[u] as f64).collect();
        values.extend([0.0, 0.0]);
        DiscretePath::from_integer_times(values)
    }

    /// Number of leaves visited by the contour up to each integer time, set to
    /// λ on `[2ζ-2, 2ζ]`. Each leaf is counted at its unique visit time.
    pub fn leaf_process(&self) -> DiscretePath {
        let mut count = 0.0;
        let mut values: Vec<f64> = self
            .contour_vertices()
            .iter()
            .map(|&u| {
                if self.degrees[u] == 0 {
                    count += 1.0;
                }
                count
            })
            .collect();
        let lambda = self.leaf_count() as f64;
        values.extend([lambda, lambda]);
        DiscretePath::from_integer_times(values)
    }

    /// Number of distinct vertices visited by the contour up to each integer
    /// time, set to ζ at times `2ζ-1` and `2ζ`.
    pub fn visited_process(&self) -> DiscretePath {
        let mut seen = 0usize;
        let mut values: Vec<f64> = self
            .contour_vertices()
            .iter()
            .map(|&u| {
                // Preorder indices are discovered in increasing order.
                if u + 1 > seen {
                    seen = u + 1;
                }
                seen as f64
            })
            .collect();
        let zeta = self.size() as f64;
        values.extend([zeta, zeta]);
        DiscretePath::from_integer_times(values)
    }

    /// Graph distance recovered from the contour function: for visit times
    /// `s` of `u` and `t` of `v`, `C(s) + C(t) - 2 min C` over `[s, t]`.
    pub fn graph_distance(&self, u: usize, v: usize) -> Result<usize, TreeError> {
        let n = self.size();
        for index in [u, v] {
            if index >= n {
                return Err(TreeError::IndexOutOfRange { index, size: n });
            }
        }
        let index = ContourIndex::new(self);
        Ok(index.distance(u, v))
    }

    /// Length ℓ of the path that keeps following first children from the root.
    pub fn leftmost_path_length(&self) -> usize {
        self.degrees.iter().take_while(|&&k| k > 0).count()
    }

    /// Children of left-most path vertices that are not on the path:
    /// `sum_{i < ℓ} k_{1_i} - ℓ`.
    pub fn theta(&self) -> u64 {
        let l = self.leftmost_path_length();
        let total: u64 = self.degrees[..l].iter().map(|&k| k as u64).sum();
        total - l as u64
    }

    /// The tree `[τ]_k` made of the vertices of generation at most `k`.
    pub fn truncate(&self, k: usize) -> PlaneTree {
        let depths = self.depths();
        let degrees = self
            .degrees
            .iter()
            .zip(&depths)
            .filter(|(_, &d)| d <= k)
            .map(|(&deg, &d)| if d == k { 0 } else { deg })
            .collect();
        PlaneTree::from_degrees_unchecked(degrees)
    }

    /// `L_k(τ)`: number of vertices at generation exactly `k`.
    pub fn generation_size(&self, k: usize) -> usize {
        self.depths().into_iter().filter(|&d| d == k).count()
    }

    /// For every vertex, the 1-based indices of the first and last leaf of its
    /// subtree, leaves being numbered in lexicographic order.
    pub fn leaf_spans(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let sizes = self.subtree_sizes();
        // leaves_before[u] = number of leaves with preorder index < u
        let mut leaves_before = vec![0usize; n + 1];
        for u in 0..n {
            leaves_before[u + 1] = leaves_before[u] + usize::from(self.degrees[u] == 0);
        }
        (0..n)
            .map(|u| {
                let first = leaves_before[u] + 1;
                let last = leaves_before[u + sizes[u]];
                (first, last)
            })
            .collect()
    }

    /// Balanced-parenthesis word of the tree: `true` for a step away from the
    /// root, `false` for a step back. Length `2(ζ - 1)`.
    pub fn dyck_word(&self) -> Vec<bool> {
        let depths = self.depths();
        let vertices = self.contour_vertices();
        vertices.windows(2).map(|w| depths[w[1]] > depths[w[0]]).collect()
    }

    /// Inverse of [`PlaneTree::dyck_word`].
    pub fn from_dyck_word(word: &[bool]) -> Result<Self, TreeError> {
        let mut degrees = vec![0u32];
        let mut stack = vec![0usize];
        for &up in word {
            if up {
                let parent = *stack.last().expect("stack holds the root");
                degrees[parent] += 1;
                degrees.push(0);
                stack.push(degrees.len() - 1);
            } else {
                if stack.len() <= 1 {
                    return Err(TreeError::MalformedDegreeSequence("Dyck word goes below zero".into()));
                }
                stack.pop();
            }
        }
        if stack.len() != 1 {
            return Err(TreeError::MalformedDegreeSequence("Dyck word does not return to zero".into()));
        }
        Ok(Self { degrees })
    }
}

/// Precomputed contour data for repeated distance queries.
#[derive(Debug, Clone)]
pub struct ContourIndex {
    heights: Vec<usize>,
    first_visit: Vec<usize>,
}

impl ContourIndex {
    pub fn new(tree: &PlaneTree) -> Self {
        let depths = tree.depths();
        let vertices = tree.contour_vertices();
        let mut first_visit = vec![usize::MAX; tree.size()];
        for (t, &u) in vertices.iter().enumerate() {
            if first_visit[u] == usize::MAX {
                first_visit[u] = t;
            }
        }
        let heights = vertices.iter().map(|&u| depths[u]).collect();
        Self { heights, first_visit }
    }

    pub fn first_visit(&self, u: usize) -> usize {
        self.first_visit[u]
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Distance between the vertices visited at contour times `s` and `t`.
    pub fn distance_at_times(&self, s: usize, t: usize) -> usize {
        let (a, b) = if s <= t { (s, t) } else { (t, s) };
        let low = self.heights[a..=b].iter().copied().min().expect("non-empty range");
        self.heights[s] + self.heights[t] - 2 * low
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.distance_at_times(self.first_visit[u], self.first_visit[v])
    }
}

/// Exhaustive enumeration of small trees, used as test and counting oracles.
pub mod enumerate {
    use super::PlaneTree;

    /// Calls `f` on every plane tree with `size` vertices whose degrees all
    /// satisfy `allowed`.
    pub fn for_each_tree<A, F>(size: usize, allowed: A, mut f: F)
    where
        A: Fn(u32) -> bool,
        F: FnMut(&PlaneTree),
    {
        fn go<A: Fn(u32) -> bool, F: FnMut(&PlaneTree)>(
            word: &mut Vec<u32>,
            size: usize,
            walk: i64,
            allowed: &A,
            f: &mut F,
        ) {
            let i = word.len();
            if i == size {
                if walk == -1 {
                    f(&PlaneTree { degrees: word.clone() });
                }
                return;
            }
            let remaining_after = (size - i - 1) as i64;
            for k in 0..=(size as u32) {
                let next = walk + k as i64 - 1;
                if next - remaining_after > -1 {
                    break;
                }
                let valid = if i + 1 == size { next == -1 } else { next >= 0 };
                if valid && allowed(k) {
                    word.push(k);
                    go(word, size, next, allowed, f);
                    word.pop();
                }
            }
        }
        if size == 0 {
            return;
        }
        let mut word = Vec::with_capacity(size);
        go(&mut word, size, 0, &allowed, &mut f);
    }

    /// All plane trees with `size` vertices.
    pub fn trees_with_size(size: usize) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        for_each_tree(size, |_| true, |t| out.push(t.clone()));
        out
    }

    /// All trees with `leaves` leaves, no unary vertex and internal degrees
    /// satisfying `allowed`.
    pub fn trees_with_leaves<A: Fn(u32) -> bool>(leaves: usize, allowed: A) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        let max_size = if leaves == 1 { 1 } else { 2 * leaves - 1 };
        for size in leaves..=max_size {
            for_each_tree(
                size,
                |k| k == 0 || (k >= 2 && allowed(k)),
                |t| {
                    if t.leaf_count() == leaves {
                        out.push(t.clone());
                    }
                },
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn tree(d: &[u32]) -> PlaneTree {
        PlaneTree::from_degrees(d.to_vec()).unwrap()
    }

    fn bfs_distance(t: &PlaneTree, u: usize, v: usize) -> usize {
        let parents = t.parents();
        let n = t.size();
        let mut adj = vec![Vec::new(); n];
        for (c, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                adj[p].push(c);
                adj[c].push(p);
            }
        }
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut q = VecDeque::from([u]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        dist[v]
    }

    #[test]
    fn build_accepts_and_rejects() {
        let t = tree(&[0]);
        assert_eq!((t.size(), t.leaf_count()), (1, 1));
        let t = tree(&[2, 0, 0]);
        assert_eq!((t.size(), t.leaf_count()), (3, 2));
        assert!(matches!(PlaneTree::from_degrees(vec![2, 0, 1]), Err(TreeError::MalformedDegreeSequence(_))));
        assert!(PlaneTree::from_degrees(vec![0, 0]).is_err());
        assert!(PlaneTree::from_degrees(vec![]).is_err());
    }

    #[test]
    fn contour_examples() {
        assert_eq!(tree(&[0]).contour().values(), &[0.0, 0.0, 0.0]);
        assert_eq!(tree(&[2, 0, 0]).contour().values(), &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(tree(&[1, 1, 0]).contour().values(), &[0.0, 1.0, 2.0, 1.0, 0.0, 0.0, 0.0]);
        // root -> (a -> two leaves), b
        assert_eq!(tree(&[2, 2, 0, 0, 0]).contour().values(), &[0.0, 1.0, 2.0, 1.0, 2.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn leaf_and_visited_processes() {
        assert_eq!(tree(&[0]).leaf_process().values(), &[1.0, 1.0, 1.0]);
        assert_eq!(tree(&[2, 0, 0]).leaf_process().values(), &[0.0, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0]);
        assert_eq!(tree(&[0]).visited_process().values(), &[1.0, 1.0, 1.0]);
        assert_eq!(tree(&[2, 0, 0]).visited_process().values(), &[1.0, 2.0, 2.0, 3.0, 3.0, 3.0, 3.0]);
    }

    #[test]
    fn distances_small_cases() {
        let t = tree(&[2, 0, 0]);
        assert_eq!(t.graph_distance(0, 0).unwrap(), 0);
        assert_eq!(t.graph_distance(1, 2).unwrap(), 2);
        assert_eq!(t.graph_distance(0, 3), Err(TreeError::IndexOutOfRange { index: 3, size: 3 }));
    }

    #[test]
    fn contour_distance_matches_bfs_exhaustively() {
        for size in 1..=8 {
            for t in enumerate::trees_with_size(size) {
                let idx = ContourIndex::new(&t);
                for u in 0..size {
                    for v in 0..size {
                        assert_eq!(idx.distance(u, v), bfs_distance(&t, u, v), "{:?} {u} {v}", t);
                    }
                }
            }
        }
    }

    #[test]
    fn leftmost_path_and_theta() {
        assert_eq!(tree(&[0]).leftmost_path_length(), 0);
        assert_eq!(tree(&[0]).theta(), 0);
        let t = tree(&[2, 2, 0, 0, 0]);
        assert_eq!(t.leftmost_path_length(), 2);
        assert_eq!(t.theta(), 2);
    }

    #[test]
    fn truncation() {
        let t = tree(&[2, 2, 0, 0, 0]);
        assert_eq!(t.truncate(0), PlaneTree::singleton());
        assert_eq!(t.truncate(1), tree(&[2, 0, 0]));
        assert_eq!(t.generation_size(1), 2);
        assert_eq!(t.generation_size(2), 2);
        assert_eq!(t.truncate(5), t);
    }

    #[test]
    fn truncation_counts_against_recount() {
        for t in enumerate::trees_with_size(7) {
            let h = t.height();
            let mut prev = 0;
            for k in 0..=h + 1 {
                let tk = t.truncate(k);
                assert!(tk.size() >= prev);
                prev = tk.size();
                // vertices at depth k in [t]_k are exactly its deepest leaves
                let deepest = tk.depths().iter().filter(|&&d| d == k).count();
                assert_eq!(deepest, t.generation_size(k));
            }
            assert_eq!(prev, t.size());
        }
    }

    #[test]
    fn spans() {
        let t = tree(&[2, 0, 2, 0, 0]);
        let spans = t.leaf_spans();
        assert_eq!(spans[0], (1, 3));
        assert_eq!(spans[1], (1, 1));
        assert_eq!(spans[2], (2, 3));
        assert_eq!(spans[4], (3, 3));
    }

    #[test]
    fn structural_helpers_agree() {
        for t in enumerate::trees_with_size(6) {
            let sizes = t.subtree_sizes();
            assert_eq!(sizes[0], t.size());
            let parents = t.parents();
            for u in 0..t.size() {
                let kids: Vec<_> = t.children(u, &sizes).collect();
                assert_eq!(kids.len(), t.degree(u) as usize);
                for c in kids {
                    assert_eq!(parents[c], Some(u));
                }
            }
            assert_eq!(PlaneTree::from_dyck_word(&t.dyck_word()).unwrap(), t);
            let c = t.contour();
            assert_eq!(c.values().len(), 2 * t.size() + 1);
            assert_eq!(t.leaf_process().values().last().copied(), Some(t.leaf_count() as f64));
        }
    }

    #[test]
    fn enumeration_counts() {
        // Catalan numbers and little Schröder numbers
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(enumerate::trees_with_size(n + 1).len(), c);
        }
        let schroeder = [1, 3, 11, 45, 197];
        for (i, &s) in schroeder.iter().enumerate() {
            assert_eq!(enumerate::trees_with_leaves(i + 2, |_| true).len(), s);
        }
    }
}

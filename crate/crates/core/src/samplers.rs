//! Random generation of Galton–Watson trees.
//!
//! Two families of conditioned samplers are provided. The rejection samplers
//! regenerate unconditioned trees until the target is met, with early abort.
//! The cycle-lemma samplers draw i.i.d. degree sequences and rotate accepted
//! ones onto valid depth-first encodings; they produce the same conditional
//! laws at a much lower cost for large targets and are the default for the
//! configuration models.

use crate::offspring::{size_bias, OffspringDistribution, OffspringError};
use crate::trees::{PlaneTree, MAX_TREE_SIZE};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::function::factorial::ln_binomial;
use std::collections::{BTreeMap, VecDeque};
use thiserror::Error;

/// Deterministic random stream identified by `(seed, stream)`.
#[derive(Debug, Clone)]
pub struct SimRng {
    inner: ChaCha8Rng,
    seed: u64,
    stream: u64,
}

impl SimRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner, seed, stream }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }
}

impl RngCore for SimRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SampleError {
    #[error("tree exceeded the vertex cap of {cap}")]
    Overflow { cap: usize },
    #[error("infeasible target: {0}")]
    Infeasible(String),
    #[error("no acceptance after {attempts} attempts")]
    BudgetExhausted { attempts: u64 },
    #[error(transparent)]
    Offspring(#[from] OffspringError),
}

/// Limits on the work done by a sampler.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleBudget {
    pub max_vertices: usize,
    pub max_attempts: u64,
}

impl SampleBudget {
    pub fn new(max_vertices: usize, max_attempts: u64) -> Self {
        assert!(max_vertices >= 1 && max_attempts >= 1, "budgets must be positive");
        Self { max_vertices: max_vertices.min(MAX_TREE_SIZE), max_attempts }
    }
}

impl Default for SampleBudget {
    fn default() -> Self {
        Self::new(1 << 26, 50_000_000)
    }
}

/// Re-serializes a breadth-first degree list in depth-first order.
fn bfs_to_preorder(bfs: &[u32]) -> Vec<u32> {
    bfs_to_preorder_with_positions(bfs).0
}

/// Also returns the depth-first index of every breadth-first vertex.
fn bfs_to_preorder_with_positions(bfs: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let n = bfs.len();
    let mut first_child = Vec::with_capacity(n);
    let mut next = 1usize;
    for &k in bfs {
        first_child.push(next);
        next += k as usize;
    }
    let mut out = Vec::with_capacity(n);
    let mut position = vec![0usize; n];
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        position[v] = out.len();
        out.push(bfs[v]);
        let k = bfs[v] as usize;
        for c in (0..k).rev() {
            stack.push(first_child[v] + c);
        }
    }
    (out, position)
}

/// An unconditioned Galton–Watson tree, generated breadth-first.
pub fn sample_gw<R: Rng + ?Sized>(
    d: &OffspringDistribution,
    rng: &mut R,
    budget: SampleBudget,
) -> Result<PlaneTree, SampleError> {
    let mut bfs = Vec::new();
    let mut pending: usize = 1;
    while pending > 0 {
        if bfs.len() >= budget.max_vertices {
            return Err(SampleError::Overflow { cap: budget.max_vertices });
        }
        let k = d.sample(rng);
        bfs.push(k);
        pending = pending - 1 + k as usize;
    }
    Ok(PlaneTree::from_degrees_unchecked(bfs_to_preorder(&bfs)))
}

/// Smallest number of values from `finite ∪ [tail_start, ∞)` (all positive)
/// summing to each `s = 0..=max`; `usize::MAX` when impossible.
fn min_parts(finite: &[usize], tail_start: Option<usize>, max: usize) -> Vec<usize> {
    let mut best = vec![usize::MAX; max + 1];
    best[0] = 0;
    for s in 1..=max {
        if tail_start.is_some_and(|t| s >= t) {
            best[s] = 1;
            continue;
        }
        for &v in finite {
            if v <= s && best[s - v] != usize::MAX {
                best[s] = best[s].min(best[s - v] + 1);
            }
        }
    }
    best
}

/// Splits the support of `d` restricted to `k >= min_k` into a finite list
/// and the start of an everywhere-positive tail.
fn support_parts(d: &OffspringDistribution, min_k: usize, limit: usize) -> (Vec<usize>, Option<usize>) {
    let mut finite = Vec::new();
    let tail_start = d.tail().map(|t| t.start.max(min_k));
    let scan_to = tail_start.unwrap_or(d.head().len()).min(limit + 1);
    for k in min_k..scan_to {
        if d.pmf(k) > 0.0 {
            finite.push(k);
        }
    }
    // The tail polynomial may vanish at isolated integers; fall back to scanning.
    if let Some(t) = tail_start {
        if (t..t + 64).any(|k| d.pmf(k) <= 0.0) {
            for k in t..=limit {
                if d.pmf(k) > 0.0 {
                    finite.push(k);
                }
            }
            return (finite, None);
        }
    }
    (finite, tail_start)
}

/// Whether `P_d(λ = n) > 0`.
pub fn leaf_target_feasible(d: &OffspringDistribution, n: usize) -> bool {
    if n == 0 || d.pmf(0) <= 0.0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // Σ over internal vertices of (k_u - 1) equals n - 1.
    let (finite, tail) = support_parts(d, 2, n);
    let shifted: Vec<usize> = finite.iter().map(|k| k - 1).collect();
    min_parts(&shifted, tail.map(|t| t - 1), n - 1)[n - 1] != usize::MAX
}

/// Whether a tree with `n` vertices has positive probability when the root
/// has law `root` and other vertices law `body`.
pub fn size_target_feasible(root: &OffspringDistribution, body: &OffspringDistribution, n: usize) -> bool {
    if n == 0 {
        return false;
    }
    if n == 1 {
        return root.pmf(0) > 0.0;
    }
    if body.pmf(0) <= 0.0 {
        return false;
    }
    // A forest of r trees on N vertices exists iff N values from the body
    // support sum to N - r; zeros pad any shorter solution.
    let big_n = n - 1;
    let (finite, tail) = support_parts(body, 1, big_n);
    let parts = min_parts(&finite, tail, big_n);
    (1..=big_n).any(|r| root.pmf(r) > 0.0 && parts[big_n - r] <= big_n)
}

/// The baseline leaf-conditioned sampler: regenerate breadth-first until the
/// tree has exactly `n` leaves. An attempt stops as soon as the leaves found
/// plus the vertices still waiting for their degree exceed `n`, since each of
/// those will carry at least one leaf.
pub fn sample_gw_leaves<R: Rng + ?Sized>(
    d: &OffspringDistribution,
    n: usize,
    rng: &mut R,
    budget: SampleBudget,
) -> Result<PlaneTree, SampleError> {
    if !leaf_target_feasible(d, n) {
        return Err(SampleError::Infeasible(format!("P(λ = {n}) = 0 under {}", d.label())));
    }
    let mut bfs = Vec::new();
    for _ in 0..budget.max_attempts {
        bfs.clear();
        let mut pending: usize = 1;
        let mut leaves = 0usize;
        let mut ok = true;
        while pending > 0 {
            if leaves + pending > n || bfs.len() >= budget.max_vertices {
                ok = false;
                break;
            }
            let k = d.sample(rng);
            bfs.push(k);
            if k == 0 {
                leaves += 1;
            }
            pending = pending - 1 + k as usize;
        }
        if ok && leaves == n {
            return Ok(PlaneTree::from_degrees_unchecked(bfs_to_preorder(&bfs)));
        }
    }
    Err(SampleError::BudgetExhausted { attempts: budget.max_attempts })
}

/// The parameter `c` maximising `P_{μ^(c)}(λ = n)`. Every `μ^(c)` gives the
/// same law conditionally on `λ = n`, so this only affects acceptance.
pub fn tuned_c(n: usize) -> f64 {
    assert!(n >= 2);
    // d/dc [ n log((1-2c)/(1-c)) + (n-1) log c ]
    let derivative = |c: f64| n as f64 * (1.0 / (1.0 - c) - 2.0 / (1.0 - 2.0 * c)) + (n - 1) as f64 / c;
    let (mut lo, mut hi) = (1e-12, 0.5 - 1e-12);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if derivative(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Rotation index of the unique cyclic shift of `x` that is a depth-first
/// degree sequence, assuming `Σ (x_i - 1) = -1`.
fn lukasiewicz_rotation(x: &[u32]) -> usize {
    let mut walk: i64 = 0;
    let mut best = i64::MAX;
    let mut at = 0;
    for (i, &k) in x.iter().enumerate() {
        walk += k as i64 - 1;
        if walk < best {
            best = walk;
            at = i;
        }
    }
    (at + 1) % x.len()
}

fn rotated(x: &[u32], start: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(x.len());
    out.extend_from_slice(&x[start..]);
    out.extend_from_slice(&x[..start]);
    out
}

/// Exact sampler for `P_d(· | λ = n)` based on the cycle lemma.
///
/// Draw i.i.d. values up to the `n`-th zero and keep the sequence when its
/// walk ends at `-1`. Each tree with `n` leaves is the rotation of exactly `n`
/// such sequences (one per leaf used as the last entry), all with the same
/// probability, so the rotated output has the conditional law.
#[derive(Debug, Clone)]
pub struct LeafConditioned {
    dist: OffspringDistribution,
    n: usize,
}

impl LeafConditioned {
    pub fn new(dist: OffspringDistribution, n: usize) -> Result<Self, SampleError> {
        if !leaf_target_feasible(&dist, n) {
            return Err(SampleError::Infeasible(format!("P(λ = {n}) = 0 under {}", dist.label())));
        }
        Ok(Self { dist, n })
    }

    pub fn leaves(&self) -> usize {
        self.n
    }

    pub fn dist(&self) -> &OffspringDistribution {
        &self.dist
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, budget: SampleBudget) -> Result<PlaneTree, SampleError> {
        let n = self.n;
        let mut x: Vec<u32> = Vec::with_capacity(4 * n);
        'attempt: for _ in 0..budget.max_attempts {
            x.clear();
            let mut zeros = 0usize;
            let mut walk: i64 = 0;
            while zeros < n {
                if x.len() >= budget.max_vertices {
                    continue 'attempt;
                }
                let k = self.dist.sample(rng);
                x.push(k);
                walk += k as i64 - 1;
                if k == 0 {
                    zeros += 1;
                }
                // Every remaining zero lowers the walk by one, nothing else lowers it.
                if walk - ((n - zeros) as i64) > -1 {
                    continue 'attempt;
                }
            }
            if walk == -1 {
                let start = lukasiewicz_rotation(&x);
                return Ok(PlaneTree::from_degrees_unchecked(rotated(&x, start)));
            }
        }
        Err(SampleError::BudgetExhausted { attempts: budget.max_attempts })
    }
}

/// Internal degrees allowed by [`NoUnaryLeafTrees`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InternalDegrees {
    /// Any out-degree at least 2.
    AtLeastTwo,
    /// Out-degree exactly 2.
    Binary,
}

/// Exact uniform sampler for plane trees with `n` leaves and no vertex of
/// out-degree one, in linear time.
///
/// With `j` internal vertices there are `n + j` vertices and the internal
/// degrees `k_i >= 2` sum to `n + j - 1`. The number of such degree words is
/// `C(n+j, j) · C(n-2, j-1)` and each tree is the rotation of exactly `n + j`
/// of them, so `j` is drawn with weight `C(n+j, j) C(n-2, j-1) / (n+j)`, the
/// degrees as a uniform composition, the positions of the internal vertices
/// uniformly, and the word is rotated as in [`LeafConditioned`]. Every tree
/// with `n` leaves has the same probability under `μ` given `λ = n`, so this
/// is the same law.
#[derive(Debug, Clone)]
pub struct NoUnaryLeafTrees {
    n: usize,
    degrees: InternalDegrees,
    /// Cumulative weights of `j = 1..n`.
    cdf: Vec<f64>,
}

impl NoUnaryLeafTrees {
    pub fn new(n: usize, degrees: InternalDegrees) -> Result<Self, SampleError> {
        if n < 2 {
            return Err(SampleError::Infeasible(format!("a tree without unary vertices and {n} leaves")));
        }
        let cdf = match degrees {
            InternalDegrees::Binary => vec![1.0],
            InternalDegrees::AtLeastTwo => {
                let ln_weight = |j: usize| {
                    ln_binomial((n + j) as u64, j as u64) + ln_binomial((n - 2) as u64, (j - 1) as u64)
                        - ((n + j) as f64).ln()
                };
                let logs: Vec<f64> = (1..n).map(ln_weight).collect();
                let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let mut acc = 0.0;
                let mut cdf: Vec<f64> = logs
                    .iter()
                    .map(|&l| {
                        acc += (l - top).exp();
                        acc
                    })
                    .collect();
                let total = acc;
                cdf.iter_mut().for_each(|c| *c /= total);
                cdf
            }
        };
        Ok(Self { n, degrees, cdf })
    }

    pub fn leaves(&self) -> usize {
        self.n
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PlaneTree {
        let n = self.n;
        let j = match self.degrees {
            InternalDegrees::Binary => n - 1,
            InternalDegrees::AtLeastTwo => {
                let u: f64 = rng.random();
                1 + self.cdf.partition_point(|&c| c < u).min(n - 2)
            }
        };
        // Composition of n - 1 - j extra children over j parts by stars and bars.
        let mut parts = vec![2u32; j];
        let slots = n - 2;
        let mut bars: Vec<usize> =
            if j > 1 { rand::seq::index::sample(rng, slots, j - 1).into_vec() } else { Vec::new() };
        bars.sort_unstable();
        let mut prev: isize = -1;
        for (part, &b) in parts.iter_mut().zip(&bars) {
            *part += (b as isize - prev - 1) as u32;
            prev = b as isize;
        }
        parts[j - 1] += (slots as isize - prev - 1) as u32;
        let mut word = vec![0u32; n + j];
        for (slot, k) in word.iter_mut().zip(parts) {
            *slot = k;
        }
        word.shuffle(rng);
        let start = lukasiewicz_rotation(&word);
        PlaneTree::from_degrees_unchecked(rotated(&word, start))
    }
}

/// Baseline size-conditioned sampler: the root has law `root`, every other
/// vertex law `body`; regenerate until the tree has exactly `n` vertices.
pub fn sample_gw_size<R: Rng + ?Sized>(
    root: &OffspringDistribution,
    body: &OffspringDistribution,
    n: usize,
    rng: &mut R,
    budget: SampleBudget,
) -> Result<PlaneTree, SampleError> {
    if !size_target_feasible(root, body, n) {
        return Err(SampleError::Infeasible(format!("P(ζ = {n}) = 0 under {} / {}", root.label(), body.label())));
    }
    let mut bfs = Vec::new();
    'attempt: for _ in 0..budget.max_attempts {
        bfs.clear();
        let k = root.sample(rng);
        bfs.push(k);
        let mut pending = k as usize;
        while pending > 0 {
            if bfs.len() + pending > n {
                continue 'attempt;
            }
            let k = body.sample(rng);
            bfs.push(k);
            pending = pending - 1 + k as usize;
        }
        if bfs.len() == n {
            return Ok(PlaneTree::from_degrees_unchecked(bfs_to_preorder(&bfs)));
        }
    }
    Err(SampleError::BudgetExhausted { attempts: budget.max_attempts })
}

/// Exact size-conditioned sampler based on the cycle lemma for forests.
///
/// The root degree `r` is drawn from the law `r·root(r)` (normalized), then
/// `n - 1` body values; the draw is kept when their walk ends at `-r`. Among
/// the `r` rotations that are forests of `r` trees, one is chosen uniformly.
/// The factor `r` in the root law compensates for the `r`-to-one rotation
/// count, so the output has the conditional law.
#[derive(Debug, Clone)]
pub struct SizeConditioned {
    root: OffspringDistribution,
    biased_root: OffspringDistribution,
    body: OffspringDistribution,
    n: usize,
}

impl SizeConditioned {
    pub fn new(root: OffspringDistribution, body: OffspringDistribution, n: usize) -> Result<Self, SampleError> {
        if !size_target_feasible(&root, &body, n) {
            return Err(SampleError::Infeasible(format!("P(ζ = {n}) = 0 under {} / {}", root.label(), body.label())));
        }
        let biased_root = reweight_by_degree(&root)?;
        Ok(Self { root, biased_root, body, n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, budget: SampleBudget) -> Result<PlaneTree, SampleError> {
        let n = self.n;
        if n == 1 {
            return Ok(PlaneTree::singleton());
        }
        let big_n = n - 1;
        let mut x: Vec<u32> = vec![0; big_n];
        'attempt: for _ in 0..budget.max_attempts {
            let r = self.biased_root.sample(rng) as i64;
            if r as usize > big_n {
                continue;
            }
            let mut walk: i64 = 0;
            for (drawn, slot) in x.iter_mut().enumerate() {
                let k = self.body.sample(rng);
                *slot = k;
                walk += k as i64 - 1;
                let remaining = (big_n - drawn - 1) as i64;
                if walk - remaining > -r {
                    continue 'attempt;
                }
            }
            if walk != -r {
                continue;
            }
            let starts = forest_rotations(&x, r);
            debug_assert_eq!(starts.len() as i64, r);
            let start = starts[rng.random_range(0..starts.len())];
            let mut degrees = Vec::with_capacity(n);
            degrees.push(r as u32);
            degrees.extend_from_slice(&x[start..]);
            degrees.extend_from_slice(&x[..start]);
            return Ok(PlaneTree::from_degrees_unchecked(degrees));
        }
        Err(SampleError::BudgetExhausted { attempts: budget.max_attempts })
    }

    pub fn root(&self) -> &OffspringDistribution {
        &self.root
    }
}

/// The law proportional to `k·p_k`, without requiring criticality.
fn reweight_by_degree(d: &OffspringDistribution) -> Result<OffspringDistribution, SampleError> {
    let mean = d.mean();
    if mean <= 0.0 {
        return Err(SampleError::Infeasible(format!("{} has no positive degree", d.label())));
    }
    let head = d.head().iter().enumerate().map(|(k, &p)| k as f64 * p / mean).collect();
    let tail = d.tail().map(|t| {
        let mut poly = vec![0.0];
        poly.extend(t.poly.iter().map(|a| a / mean));
        crate::offspring::GeometricTail { ratio: t.ratio, start: t.start, poly }
    });
    Ok(OffspringDistribution::new(format!("degree_weighted({})", d.label()), head, tail)?)
}

/// Start indices `j` such that `x[j..] ++ x[..j]` is the concatenation of `r`
/// depth-first encodings, given `Σ (x_i - 1) = -r`.
fn forest_rotations(x: &[u32], r: i64) -> Vec<usize> {
    let len = x.len();
    let mut prefix = Vec::with_capacity(len + 1);
    prefix.push(0i64);
    for &k in x {
        prefix.push(prefix.last().unwrap() + k as i64 - 1);
    }
    // suffix_min[j] = min over j < k < len of prefix[k]
    let mut suffix_min = vec![i64::MAX; len + 1];
    for j in (0..len).rev() {
        suffix_min[j] = suffix_min[j + 1].min(if j + 1 < len { prefix[j + 1] } else { i64::MAX });
    }
    let mut out = Vec::new();
    let mut prefix_min = i64::MAX;
    for j in 0..len {
        let new_min = j == 0 || prefix[j] < prefix_min;
        if new_min && prefix[j] - r < suffix_min[j] {
            out.push(j);
        }
        prefix_min = prefix_min.min(prefix[j]);
    }
    out
}

/// Uniform plane tree with `n` edges: a uniform arrangement of `n` up-steps
/// and `n + 1` down-steps has exactly one rotation that stays non-negative
/// until its last step.
pub fn sample_uniform_tree_edges<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PlaneTree {
    let mut steps = vec![false; 2 * n + 1];
    steps[..n].iter_mut().for_each(|s| *s = true);
    steps.shuffle(rng);
    let mut level: i64 = 0;
    let mut best = i64::MAX;
    let mut at = 0;
    for (i, &up) in steps.iter().enumerate() {
        level += if up { 1 } else { -1 };
        if level < best {
            best = level;
            at = i;
        }
    }
    let start = (at + 1) % steps.len();
    let word: Vec<bool> = steps[start..].iter().chain(&steps[..start]).take(2 * n).copied().collect();
    PlaneTree::from_dyck_word(&word).expect("rotation yields a Dyck word")
}

/// The first `k` generations of Kesten's tree: a spine whose vertices have
/// size-biased degrees (root included), the next spine vertex chosen
/// uniformly among the children, and independent `d`-trees elsewhere.
pub fn sample_kesten<R: Rng + ?Sized>(
    d: &OffspringDistribution,
    k: usize,
    rng: &mut R,
) -> Result<PlaneTree, SampleError> {
    sample_kesten_with_spine(d, k, rng).map(|(t, _)| t)
}

/// As [`sample_kesten`], also returning the depth-first indices of the spine
/// vertices at generations `0..=k`.
pub fn sample_kesten_with_spine<R: Rng + ?Sized>(
    d: &OffspringDistribution,
    k: usize,
    rng: &mut R,
) -> Result<(PlaneTree, Vec<usize>), SampleError> {
    let biased = size_bias(d)?;
    let mut bfs: Vec<u32> = Vec::new();
    let mut spine_bfs = Vec::with_capacity(k + 1);
    // (depth, on spine)
    let mut queue: VecDeque<(usize, bool)> = VecDeque::from([(0, true)]);
    while let Some((depth, spine)) = queue.pop_front() {
        if spine {
            spine_bfs.push(bfs.len());
        }
        if depth == k {
            bfs.push(0);
            continue;
        }
        let deg = if spine { biased.sample(rng) } else { d.sample(rng) };
        bfs.push(deg);
        let next_spine = if spine { rng.random_range(0..deg) } else { u32::MAX };
        for c in 0..deg {
            queue.push_back((depth + 1, c == next_spine));
        }
        if bfs.len() + queue.len() > MAX_TREE_SIZE {
            return Err(SampleError::Overflow { cap: MAX_TREE_SIZE });
        }
    }
    let (degrees, position) = bfs_to_preorder_with_positions(&bfs);
    let spine = spine_bfs.into_iter().map(|v| position[v]).collect();
    Ok((PlaneTree::from_degrees_unchecked(degrees), spine))
}

/// Runs `replicas` independent evaluations; replica `j` receives the stream
/// `(seed, j)`, so results do not depend on scheduling.
pub fn monte_carlo<T, F>(seed: u64, replicas: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut SimRng, usize) -> T + Sync + Send,
{
    (0..replicas)
        .into_par_iter()
        .map(|j| {
            let mut rng = SimRng::new(seed, j as u64);
            f(&mut rng, j)
        })
        .collect()
}

/// Fallible version of [`monte_carlo`]; the first error in replica order wins.
pub fn try_monte_carlo<T, E, F>(seed: u64, replicas: usize, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(&mut SimRng, usize) -> Result<T, E> + Sync + Send,
{
    monte_carlo(seed, replicas, f).into_iter().collect()
}

/// Mean, variance and (for integer-valued samples) histogram.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    pub variance: f64,
    pub histogram: Option<BTreeMap<i64, usize>>,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        let count = values.len();
        let mean = crate::numeric::compensated_sum(values.iter().copied()) / count.max(1) as f64;
        let variance = if count > 1 {
            crate::numeric::compensated_sum(values.iter().map(|v| (v - mean) * (v - mean))) / (count - 1) as f64
        } else {
            0.0
        };
        let integral = values.iter().all(|v| v.fract() == 0.0 && v.abs() < 9e15);
        let histogram = integral.then(|| {
            let mut h = BTreeMap::new();
            for &v in values {
                *h.entry(v as i64).or_insert(0) += 1;
            }
            h
        });
        Self { count, mean, variance, histogram }
    }
}

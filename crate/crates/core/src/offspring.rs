//! Offspring distributions on ℕ and the exact generating-function series
//! derived from them (leaf counts, forest leaf counts, total progeny).
//!
//! A distribution is stored as a finite head `p_0 .. p_{s-1}` followed by an
//! optional symbolic tail `p_k = r^k · q(k)` for `k >= s`, where `q` is a
//! polynomial. Every family used in the crate has this shape, which keeps
//! moments and generating functions available in closed form.

use crate::numeric::{compensated_sum, polylog_neg, CompensatedSum};
use rand::Rng;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Tolerance on the mean used to decide criticality.
pub const CRITICAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OffspringError {
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("offspring law is not critical (mean {mean})")]
    NotCritical { mean: f64 },
    #[error("invalid degree set: {0}")]
    InvalidDegreeSet(String),
}

/// Allowed face degrees of a constrained dissection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DegreeSet {
    /// A finite set of integers, each at least 3.
    Finite(BTreeSet<u32>),
    /// Every integer greater than or equal to the bound (itself at least 3).
    AtLeast(u32),
}

impl DegreeSet {
    pub fn finite<I: IntoIterator<Item = u32>>(values: I) -> Result<Self, OffspringError> {
        let set: BTreeSet<u32> = values.into_iter().collect();
        match set.first() {
            None => Err(OffspringError::InvalidDegreeSet("empty set".into())),
            Some(&a) if a < 3 => Err(OffspringError::InvalidDegreeSet(format!("face degree {a} is below 3"))),
            Some(_) => Ok(Self::Finite(set)),
        }
    }

    pub fn at_least(bound: u32) -> Result<Self, OffspringError> {
        if bound < 3 {
            return Err(OffspringError::InvalidDegreeSet(format!("face degree {bound} is below 3")));
        }
        Ok(Self::AtLeast(bound))
    }

    /// Every face degree: unconstrained dissections.
    pub fn all() -> Self {
        Self::AtLeast(3)
    }

    /// Triangulations.
    pub fn triangles() -> Self {
        Self::Finite(BTreeSet::from([3]))
    }

    pub fn contains(&self, a: u32) -> bool {
        match self {
            Self::Finite(set) => set.contains(&a),
            Self::AtLeast(bound) => a >= *bound,
        }
    }

    pub fn min(&self) -> u32 {
        match self {
            Self::Finite(set) => *set.first().expect("non-empty by construction"),
            Self::AtLeast(bound) => *bound,
        }
    }

    /// Greatest common divisor of `{a - 2 : a ∈ A}`.
    pub fn period(&self) -> u64 {
        match self {
            Self::Finite(set) => set.iter().fold(0, |g, &a| gcd(g, (a - 2) as u64)),
            Self::AtLeast(bound) => gcd((*bound - 2) as u64, (*bound - 1) as u64),
        }
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AtLeast(3) => write!(f, "all"),
            Self::AtLeast(b) => write!(f, "{b}+"),
            Self::Finite(set) => {
                let parts: Vec<String> = set.iter().map(u32::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

/// Accepts `all`, `k+` (every degree from `k` on) or a comma-separated list.
impl FromStr for DegreeSet {
    type Err = OffspringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(Self::all());
        }
        let parse = |t: &str| {
            t.trim().parse::<u32>().map_err(|_| OffspringError::InvalidDegreeSet(format!("cannot parse {t:?}")))
        };
        if let Some(bound) = s.strip_suffix('+') {
            return Self::at_least(parse(bound)?);
        }
        Self::finite(s.split(',').map(parse).collect::<Result<Vec<_>, _>>()?)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `p_k = ratio^k · Σ_j poly[j] k^j` for `k >= start`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricTail {
    pub ratio: f64,
    pub start: usize,
    pub poly: Vec<f64>,
}

impl GeometricTail {
    fn eval(&self, k: usize) -> f64 {
        let kf = k as f64;
        let q = self.poly.iter().rev().fold(0.0, |acc, &a| acc * kf + a);
        q * self.ratio.powi(k as i32)
    }

    /// `Σ_{k >= start} k^m p_k`.
    fn moment(&self, m: usize) -> f64 {
        let r = self.ratio;
        compensated_sum(self.poly.iter().enumerate().map(|(j, &a)| {
            let below = compensated_sum((0..self.start).map(|k| (k as f64).powi((j + m) as i32) * r.powi(k as i32)));
            a * (polylog_neg(j + m, r) - below)
        }))
    }
}

/// A probability law on the non-negative integers.
#[derive(Debug, Clone)]
pub struct OffspringDistribution {
    label: String,
    head: Vec<f64>,
    tail: Option<GeometricTail>,
    cdf: Vec<f64>,
}

const CDF_TABLE_CAP: usize = 4096;

impl OffspringDistribution {
    /// Builds a law and checks that it is a probability measure to within `1e-12`.
    pub fn new(label: impl Into<String>, head: Vec<f64>, tail: Option<GeometricTail>) -> Result<Self, OffspringError> {
        if let Some(t) = &tail {
            if !(0.0..1.0).contains(&t.ratio) {
                return Err(OffspringError::Domain(format!("tail ratio {} not in [0, 1)", t.ratio)));
            }
            if t.start < head.len() {
                return Err(OffspringError::Domain("tail overlaps the head".into()));
            }
        }
        let mut head = head;
        if let Some(t) = &tail {
            head.resize(t.start, 0.0);
        }
        let mut dist = Self { label: label.into(), head, tail, cdf: Vec::new() };
        if let Some(k) = (0..dist.table_len()).find(|&k| !(dist.pmf(k) >= 0.0)) {
            return Err(OffspringError::Domain(format!("negative probability at {k}")));
        }
        let total = dist.total_mass();
        if (total - 1.0).abs() > 1e-12 {
            return Err(OffspringError::Domain(format!("total mass {total} differs from 1")));
        }
        dist.cdf = dist.build_cdf();
        Ok(dist)
    }

    /// A law with finite support given by its probability vector.
    pub fn from_pmf(label: impl Into<String>, pmf: Vec<f64>) -> Result<Self, OffspringError> {
        Self::new(label, pmf, None)
    }

    fn table_len(&self) -> usize {
        match &self.tail {
            None => self.head.len(),
            Some(t) => {
                // Far enough that the remaining mass is negligible in double precision.
                let mut k = t.start;
                while k < t.start + CDF_TABLE_CAP && (t.eval(k) > 1e-18 || k < t.start + 2 * t.poly.len() + 8) {
                    k += 1;
                }
                k
            }
        }
    }

    fn build_cdf(&self) -> Vec<f64> {
        let mut acc = CompensatedSum::new();
        (0..self.table_len())
            .map(|k| {
                acc.add(self.pmf(k));
                acc.value()
            })
            .collect()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn head(&self) -> &[f64] {
        &self.head
    }

    pub fn tail(&self) -> Option<&GeometricTail> {
        self.tail.as_ref()
    }

    pub fn pmf(&self, k: usize) -> f64 {
        if k < self.head.len() {
            return self.head[k];
        }
        match &self.tail {
            Some(t) => t.eval(k),
            None => 0.0,
        }
    }

    /// Largest degree with positive probability, or `None` for infinite support.
    pub fn support_max(&self) -> Option<usize> {
        match &self.tail {
            Some(_) => None,
            None => self.head.iter().rposition(|&p| p > 0.0),
        }
    }

    fn raw_moment(&self, m: usize) -> f64 {
        let head = compensated_sum(self.head.iter().enumerate().map(|(k, &p)| (k as f64).powi(m as i32) * p));
        head + self.tail.as_ref().map_or(0.0, |t| t.moment(m))
    }

    pub fn total_mass(&self) -> f64 {
        self.raw_moment(0)
    }

    pub fn mean(&self) -> f64 {
        self.raw_moment(1)
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.raw_moment(2) - m * m
    }

    pub fn is_critical(&self) -> bool {
        (self.mean() - 1.0).abs() <= CRITICAL_TOLERANCE
    }

    /// `P(X >= k)`.
    pub fn tail_mass(&self, k: usize) -> f64 {
        let below = compensated_sum((0..k.min(self.table_len())).map(|j| self.pmf(j)));
        if k <= self.table_len() {
            return (1.0 - below).max(0.0);
        }
        let mut acc = CompensatedSum::new();
        let mut j = k;
        loop {
            let p = self.pmf(j);
            acc.add(p);
            if p < 1e-300 || j > k + 100_000 {
                break;
            }
            j += 1;
        }
        acc.value()
    }

    /// Draws one value by inversion of the cumulative distribution function.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        let u: f64 = rng.random();
        let k = self.cdf.partition_point(|&c| c <= u);
        if k < self.cdf.len() {
            return k as u32;
        }
        // Only reachable for infinite support once u exceeds the tabulated mass.
        let mut acc = *self.cdf.last().unwrap_or(&0.0);
        let mut k = self.cdf.len();
        loop {
            let p = self.pmf(k);
            acc += p;
            if acc > u || p == 0.0 {
                return k as u32;
            }
            k += 1;
        }
    }
}

/// The law `μ^(c)`: `p_0 = (1-2c)/(1-c)`, `p_1 = 0`, `p_k = c^(k-1)` for `k >= 2`.
pub fn mu_c(c: f64) -> Result<OffspringDistribution, OffspringError> {
    if !(c > 0.0 && c < 0.5) {
        return Err(OffspringError::Domain(format!("c = {c} must lie in (0, 1/2)")));
    }
    OffspringDistribution::new(
        format!("mu_c({c})"),
        vec![(1.0 - 2.0 * c) / (1.0 - c), 0.0],
        Some(GeometricTail { ratio: c, start: 2, poly: vec![1.0 / c] }),
    )
}

/// The parameter making `μ^(c)` critical.
pub fn critical_c() -> f64 {
    1.0 - std::f64::consts::FRAC_1_SQRT_2
}

/// The critical member of the `μ^(c)` family.
pub fn mu() -> OffspringDistribution {
    let mut d = mu_c(critical_c()).expect("critical parameter is in range");
    d.label = "mu".into();
    d
}

/// The law attached to a degree set, its parameter and its variance.
#[derive(Debug, Clone)]
pub struct ConstrainedLaw {
    pub c: f64,
    pub dist: OffspringDistribution,
    pub sigma2: f64,
}

/// Solves `Σ_{i ∈ A-1} i c^(i-1) = 1` by bisection and returns the law
/// `ν(0) = 1 - Σ c^(i-1)`, `ν(i) = c^(i-1)` for `i ∈ A - 1`.
pub fn nu_a(set: &DegreeSet) -> ConstrainedLaw {
    let objective = |c: f64| -> f64 {
        match set {
            DegreeSet::Finite(values) => compensated_sum(values.iter().map(|&a| (a - 1) as f64 * c.powi(a as i32 - 2))),
            DegreeSet::AtLeast(bound) => {
                let first = (*bound - 1) as usize;
                let below = compensated_sum((1..first).map(|i| i as f64 * c.powi(i as i32)));
                (polylog_neg(1, c) - below) / c
            }
        }
    };
    let (mut lo, mut hi) = (0.0_f64, 1.0 - 1e-9);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if objective(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    let c = 0.5 * (lo + hi);
    let label = format!("nu_A({set})");
    let dist = match set {
        DegreeSet::Finite(values) => {
            let top = *values.last().expect("non-empty") as usize - 1;
            let mut head = vec![0.0; top + 1];
            for &a in values {
                head[a as usize - 1] = c.powi(a as i32 - 2);
            }
            head[0] = 1.0 - compensated_sum(head[1..].iter().copied());
            OffspringDistribution::new(label, head, None)
        }
        DegreeSet::AtLeast(bound) => {
            let start = (*bound - 1) as usize;
            let mut head = vec![0.0; start];
            head[0] = 1.0 - c.powi(start as i32 - 1) / (1.0 - c);
            OffspringDistribution::new(label, head, Some(GeometricTail { ratio: c, start, poly: vec![1.0 / c] }))
        }
    }
    .expect("constrained law is a probability measure");
    let sigma2 = dist.variance();
    assert!(sigma2 > 0.0, "variance of a non-degenerate law is positive");
    ConstrainedLaw { c, dist, sigma2 }
}

/// Offspring law of non-root vertices in the shape of a uniform non-crossing
/// tree: `ν(k) = 4(k+1) 3^(-k-2)`.
pub fn nct_nu() -> OffspringDistribution {
    OffspringDistribution::new(
        "nct_nu",
        Vec::new(),
        Some(GeometricTail { ratio: 1.0 / 3.0, start: 0, poly: vec![4.0 / 9.0, 4.0 / 9.0] }),
    )
    .expect("valid law")
}

/// Root law of the same shape: `ν_∅(k) = 2·3^(-k)` for `k >= 1`.
pub fn nct_root() -> OffspringDistribution {
    OffspringDistribution::new(
        "nct_root",
        vec![0.0],
        Some(GeometricTail { ratio: 1.0 / 3.0, start: 1, poly: vec![2.0] }),
    )
    .expect("valid law")
}

/// Geometric law `p_k = 2^(-(k+1))`.
pub fn geometric_half() -> OffspringDistribution {
    OffspringDistribution::new(
        "geometric_half",
        Vec::new(),
        Some(GeometricTail { ratio: 0.5, start: 0, poly: vec![0.5] }),
    )
    .expect("valid law")
}

/// Size-biased law `k·p_k` of a critical law.
pub fn size_bias(d: &OffspringDistribution) -> Result<OffspringDistribution, OffspringError> {
    let mean = d.mean();
    if (mean - 1.0).abs() > CRITICAL_TOLERANCE {
        return Err(OffspringError::NotCritical { mean });
    }
    let head = d.head.iter().enumerate().map(|(k, &p)| k as f64 * p).collect();
    let tail = d.tail.as_ref().map(|t| {
        let mut poly = vec![0.0];
        poly.extend_from_slice(&t.poly);
        GeometricTail { ratio: t.ratio, start: t.start, poly }
    });
    let mut biased = OffspringDistribution::new(format!("size_bias({})", d.label), head, tail).or_else(|_| {
        // The input is critical only to within the tolerance; renormalize.
        let head: Vec<f64> = d.head.iter().enumerate().map(|(k, &p)| k as f64 * p / mean).collect();
        let tail = d.tail.as_ref().map(|t| {
            let mut poly = vec![0.0];
            poly.extend(t.poly.iter().map(|a| a / mean));
            GeometricTail { ratio: t.ratio, start: t.start, poly }
        });
        OffspringDistribution::new(format!("size_bias({})", d.label), head, tail)
    })?;
    biased.label = format!("size_bias({})", d.label);
    Ok(biased)
}

/// Online computation of `[z^n] Φ(Y(z))` where `Φ(y) = Σ_{k>=2} p_k y^k` and
/// `Y` has no constant term. The coefficient at `n` only depends on
/// `Y_1 .. Y_{n-1}`, so the series can be built one term at a time.
///
/// The tail part `T(y) = Σ_{k>=k0} r^k q(k) y^k` is rational, equal to
/// `P(y) / (1 - r y)^(e+1)` with `e = deg q` and `P` a polynomial of degree at
/// most `k0 + e`. Writing `G = T(Y)` and `W = (1 - rY)^(e+1) - 1` gives the
/// recursion `G_n = [z^n] P(Y) - Σ_{i=1}^{n-2} W_i G_{n-i}`.
pub(crate) struct Composer {
    head_terms: Vec<(usize, f64)>,
    numerator: Vec<(usize, f64)>,
    w_coeffs: Vec<(usize, f64)>,
    /// powers[j][n] = [z^n] Y^j, for j = 1..=depth (index 0 unused).
    powers: Vec<Vec<f64>>,
    g: Vec<f64>,
    w: Vec<f64>,
    w_ready: usize,
}

impl Composer {
    pub(crate) fn new(d: &OffspringDistribution, capacity: usize) -> Self {
        let mut head_terms = Vec::new();
        let mut numerator = Vec::new();
        let mut w_coeffs = Vec::new();
        let mut depth = 1;
        match &d.tail {
            None => {
                for (k, &p) in d.head.iter().enumerate().skip(2) {
                    if p != 0.0 {
                        head_terms.push((k, p));
                    }
                }
            }
            Some(t) => {
                let k0 = t.start.max(2);
                for k in 2..k0 {
                    let p = d.pmf(k);
                    if p != 0.0 {
                        head_terms.push((k, p));
                    }
                }
                let e = t.poly.len() - 1;
                let coeff = |k: usize| if k >= k0 { t.eval(k) } else { 0.0 };
                for m in k0..=k0 + e {
                    let mut acc = CompensatedSum::new();
                    for i in 0..=(e + 1).min(m) {
                        acc.add(binomial(e + 1, i) * (-t.ratio).powi(i as i32) * coeff(m - i));
                    }
                    if acc.value() != 0.0 {
                        numerator.push((m, acc.value()));
                    }
                }
                for j in 1..=e + 1 {
                    w_coeffs.push((j, binomial(e + 1, j) * (-t.ratio).powi(j as i32)));
                }
                depth = depth.max(k0 + e).max(e + 1);
            }
        }
        if let Some(&(k, _)) = head_terms.last() {
            depth = depth.max(k);
        }
        let powers = (0..=depth).map(|_| vec![0.0; capacity + 1]).collect();
        Self {
            head_terms,
            numerator,
            w_coeffs,
            powers,
            g: vec![0.0; capacity + 1],
            w: vec![0.0; capacity + 1],
            w_ready: 0,
        }
    }

    /// `[z^n] Φ(Y)`, assuming `Y_1 .. Y_{n-1}` were pushed.
    pub(crate) fn coefficient(&mut self, n: usize) -> f64 {
        let depth = self.powers.len() - 1;
        for j in 2..=depth {
            let (lower, upper) = self.powers.split_at_mut(j);
            let prev = &lower[j - 1];
            let y = &lower[1];
            let mut acc = CompensatedSum::new();
            // Y^(j-1) has valuation j-1.
            for i in 1..=n.saturating_sub(j - 1) {
                acc.add(y[i] * prev[n - i]);
            }
            upper[0][n] = acc.value();
        }
        let mut total = CompensatedSum::new();
        for &(k, p) in &self.head_terms {
            total.add(p * self.powers[k][n]);
        }
        if !self.numerator.is_empty() {
            let mut g = CompensatedSum::new();
            for &(d, q) in &self.numerator {
                g.add(q * self.powers[d][n]);
            }
            // W_i needs every power of Y at index i, so it is filled in lazily.
            while self.w_ready + 2 < n {
                self.w_ready += 1;
                let i = self.w_ready;
                let mut w = CompensatedSum::new();
                for &(j, a) in &self.w_coeffs {
                    w.add(a * self.powers[j][i]);
                }
                self.w[i] = w.value();
            }
            for i in 1..n.saturating_sub(1) {
                g.add(-self.w[i] * self.g[n - i]);
            }
            self.g[n] = g.value();
            total.add(self.g[n]);
        }
        total.value()
    }

    pub(crate) fn push(&mut self, n: usize, y: f64) {
        self.powers[1][n] = y;
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `P_d(λ(τ) = n)` for `n = 0..=max_n` (entry 0 is zero).
pub fn leaf_count_series(d: &OffspringDistribution, max_n: usize) -> Vec<f64> {
    let mut f = vec![0.0; max_n + 1];
    if max_n == 0 {
        return f;
    }
    let p0 = d.pmf(0);
    let p1 = d.pmf(1);
    let mut composer = Composer::new(d, max_n);
    for n in 1..=max_n {
        let phi = composer.coefficient(n);
        let lead = if n == 1 { p0 } else { 0.0 };
        f[n] = ((lead + phi) / (1.0 - p1)).max(0.0);
        composer.push(n, f[n]);
    }
    f
}

/// Discrete convolution truncated to the length of the inputs.
pub fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let len = a.len().min(b.len());
    (0..len).map(|n| compensated_sum((0..=n).map(|i| a[i] * b[n - i]))).collect()
}

/// Leaf-count law of a forest of `trees` independent trees, `n = 0..=max_n`.
pub fn forest_leaf_count(d: &OffspringDistribution, trees: usize, max_n: usize) -> Vec<f64> {
    assert!(trees >= 1, "a forest has at least one tree");
    let single = leaf_count_series(d, max_n);
    let mut out = single.clone();
    for _ in 1..trees {
        out = convolve(&out, &single);
    }
    out
}

/// `P(ζ(τ) = n)` for `n = 0..=max_n`, where the root has law `root` and
/// every other vertex has law `body`.
pub fn size_count_series(root: &OffspringDistribution, body: &OffspringDistribution, max_n: usize) -> Vec<f64> {
    let mut b = vec![0.0; max_n + 1];
    if max_n == 0 {
        return b;
    }
    let p0 = body.pmf(0);
    let p1 = body.pmf(1);
    // B(z) = z Ψ(B(z)): b_n = [z^(n-1)] Ψ(B).
    let mut composer = Composer::new(body, max_n);
    for n in 1..=max_n {
        let m = n - 1;
        let phi = if m >= 1 { composer.coefficient(m) } else { 0.0 };
        let lead = if m == 0 { p0 } else { 0.0 };
        let linear = if m >= 1 { p1 * b[m] } else { 0.0 };
        b[n] = (lead + linear + phi).max(0.0);
        composer.push(n, b[n]);
    }
    let mut root_composer = Composer::new(root, max_n);
    let r0 = root.pmf(0);
    let r1 = root.pmf(1);
    let mut out = vec![0.0; max_n + 1];
    for n in 1..=max_n {
        let m = n - 1;
        let phi = if m >= 1 { root_composer.coefficient(m) } else { 0.0 };
        let lead = if m == 0 { r0 } else { 0.0 };
        let linear = if m >= 1 { r1 * b[m] } else { 0.0 };
        out[n] = (lead + linear + phi).max(0.0);
        root_composer.push(n, b[n]);
    }
    out
}

/// For `n = 0..=max_n`, whether some dissection with `n` leaves in its dual
/// tree (a polygon with `n + 1` sides) has all face degrees in `set`.
/// Index `n` is feasible iff `n - 1` is a sum of elements of `{a - 2 : a ∈ A}`.
pub fn feasible_leaf_counts(set: &DegreeSet, max_n: usize) -> Vec<bool> {
    let mut representable = vec![false; max_n + 1];
    if max_n == 0 {
        return representable;
    }
    representable[0] = true;
    let gens: Vec<usize> = match set {
        DegreeSet::Finite(values) => values.iter().map(|&a| (a - 2) as usize).collect(),
        DegreeSet::AtLeast(bound) => ((*bound - 2) as usize..=max_n.max(1)).collect(),
    };
    for v in 1..=max_n {
        representable[v] = gens.iter().any(|&g| g <= v && representable[v - g]);
    }
    let mut out = vec![false; max_n + 1];
    for n in 1..=max_n {
        out[n] = representable[n - 1];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::enumerate;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn mu_family_values() {
        let m = mu();
        assert!(close(m.pmf(0), 2.0 - SQRT2, 1e-15));
        assert_eq!(m.pmf(1), 0.0);
        assert!(close(m.pmf(2), 0.2928932188134524, 1e-15));
        assert!(close(m.pmf(3), 0.0857864376269049, 1e-15));
        assert!(close(m.mean(), 1.0, 1e-12));
        assert!(close(m.variance(), 4.0 * SQRT2 - 4.0, 1e-10));
        let q = mu_c(0.25).unwrap();
        assert!(close(q.pmf(0), 2.0 / 3.0, 1e-15));
        assert!(close(q.pmf(2), 0.25, 1e-15));
        assert!(close(q.pmf(3), 1.0 / 16.0, 1e-15));
        assert!(mu_c(0.5).is_err());
        assert!(mu_c(0.0).is_err());
    }

    #[test]
    fn variance_matches_closed_form() {
        let c = critical_c();
        // Σ_{k>=2} k² c^(k-1) is the second moment; subtract the squared mean.
        let closed = (1.0 + c) / (1.0 - c).powi(3) - 1.0 - 1.0;
        assert!(close(mu().variance(), closed, 1e-12));
    }

    #[test]
    fn constrained_laws() {
        let t = nu_a(&DegreeSet::triangles());
        assert!(close(t.c, 0.5, 1e-12));
        assert!(close(t.dist.pmf(0), 0.5, 1e-12) && close(t.dist.pmf(2), 0.5, 1e-12));
        assert!(close(t.sigma2, 1.0, 1e-12));

        let all = nu_a(&DegreeSet::all());
        assert!(close(all.c, critical_c(), 1e-12));
        for k in 0..30 {
            assert!(close(all.dist.pmf(k), mu().pmf(k), 1e-12));
        }

        let four = nu_a(&DegreeSet::finite([4]).unwrap());
        assert!(close(four.c, 3f64.powf(-0.5), 1e-12));
        // ν(3) = c² = 1/3
        assert!(close(four.dist.pmf(3), 1.0 / 3.0, 1e-12));
        assert!(close(four.dist.pmf(0), 2.0 / 3.0, 1e-12));

        for set in ["3", "4", "3,4", "3,5,9", "all", "5+"] {
            let law = nu_a(&set.parse().unwrap());
            assert!(law.dist.is_critical(), "{set}");
            assert!(close(law.dist.total_mass(), 1.0, 1e-12));
        }
    }

    #[test]
    fn degree_set_parsing_and_period() {
        assert_eq!("all".parse::<DegreeSet>().unwrap(), DegreeSet::AtLeast(3));
        assert_eq!("4".parse::<DegreeSet>().unwrap().period(), 2);
        assert_eq!("3,4".parse::<DegreeSet>().unwrap().period(), 1);
        assert_eq!("4,6".parse::<DegreeSet>().unwrap().period(), 2);
        assert!("2".parse::<DegreeSet>().is_err());
        assert!("".parse::<DegreeSet>().is_err());
        assert_eq!(DegreeSet::finite([3, 5]).unwrap().to_string(), "3,5");
    }

    #[test]
    fn nct_laws() {
        let nu = nct_nu();
        assert!(close(nu.pmf(0), 4.0 / 9.0, 1e-15));
        assert!(close(nu.pmf(1), 8.0 / 27.0, 1e-15));
        assert!(close(nu.pmf(2), 4.0 / 27.0, 1e-15));
        assert!(close(nu.mean(), 1.0, 1e-12));
        assert!(close(nu.variance(), 1.5, 1e-12));
        let root = nct_root();
        assert_eq!(root.pmf(0), 0.0);
        assert!(close(root.pmf(1), 2.0 / 3.0, 1e-15));
        let g = geometric_half();
        assert_eq!(g.pmf(0), 0.5);
        assert!(close(g.mean(), 1.0, 1e-12) && close(g.variance(), 2.0, 1e-12));
    }

    #[test]
    fn size_biasing() {
        let b = size_bias(&mu()).unwrap();
        assert_eq!(b.pmf(0), 0.0);
        assert_eq!(b.pmf(1), 0.0);
        assert!(close(b.pmf(2), 2.0 - SQRT2, 1e-12));
        assert!(close(b.total_mass(), 1.0, 1e-12));
        assert!(matches!(size_bias(&mu_c(0.25).unwrap()), Err(OffspringError::NotCritical { .. })));
    }

    #[test]
    fn leaf_series_small_values() {
        let m = mu();
        let p = leaf_count_series(&m, 6);
        let (m0, m2) = (m.pmf(0), m.pmf(2));
        assert!(close(p[1], m0, 1e-15));
        assert!(close(p[2], m2 * m0 * m0, 1e-15));
        assert!(close(p[2], 0.1005050633883346, 1e-12));
        assert!(close(p[3], 3.0 * m2 * m2 * m0.powi(3), 1e-15));
    }

    /// Weighted exhaustive enumeration of small trees.
    fn brute_leaf_law(d: &OffspringDistribution, n: usize) -> f64 {
        let max_size = if n == 1 { 1 } else { 2 * n - 1 + if d.pmf(1) > 0.0 { 6 } else { 0 } };
        let mut total = 0.0;
        for size in n..=max_size {
            enumerate::for_each_tree(
                size,
                |_| true,
                |t| {
                    if t.leaf_count() == n {
                        total += t.degrees().iter().map(|&k| d.pmf(k as usize)).product::<f64>();
                    }
                },
            );
        }
        total
    }

    #[test]
    fn leaf_series_matches_enumeration() {
        let laws = [mu(), nu_a(&"3,4".parse().unwrap()).dist, nu_a(&"5+".parse().unwrap()).dist];
        for d in &laws {
            let p = leaf_count_series(d, 7);
            for n in 1..=7 {
                let b = brute_leaf_law(d, n);
                assert!(close(p[n], b, 1e-13), "{} n={n}: {} vs {}", d.label(), p[n], b);
            }
        }
    }

    #[test]
    fn leaf_series_with_unary_vertices() {
        // With p_1 > 0 the enumeration is truncated, so compare on tiny n only.
        let d = nct_nu();
        let p = leaf_count_series(&d, 3);
        let g1 = d.pmf(0) / (1.0 - d.pmf(1));
        assert!(close(p[1], g1, 1e-14));
        let mut sum2 = 0.0;
        // [z^2]: Σ_k p_k · #{ways} with geometric number of unary vertices on each edge
        sum2 += d.pmf(2) * g1 * g1 / (1.0 - d.pmf(1));
        assert!(close(p[2], sum2, 1e-14));
    }

    #[test]
    fn leaf_series_solves_the_quadratic() {
        let m = mu();
        let c = critical_c();
        let p = leaf_count_series(&m, 2000);
        let z = 0.9_f64;
        let f = compensated_sum(p.iter().enumerate().map(|(n, &q)| q * z.powi(n as i32)));
        let m0 = m.pmf(0);
        let residual = 2.0 * c * f * f - (1.0 + m0 * c * z) * f + m0 * z;
        assert!(residual.abs() < 1e-9, "{residual}");
    }

    #[test]
    fn leaf_series_local_asymptotics() {
        let p = leaf_count_series(&mu(), 10_000);
        let k = 2.0 * (std::f64::consts::PI * SQRT2).sqrt();
        for (n, tol) in [(1000usize, 0.05), (10_000, 0.02)] {
            let ratio = p[n] * (n as f64).powf(1.5) * k;
            assert!((ratio - 1.0).abs() < tol, "n={n} ratio {ratio}");
        }
        assert!(p.iter().sum::<f64>() <= 1.0 + 1e-12);
    }

    #[test]
    fn forest_series() {
        let d = mu();
        let p = leaf_count_series(&d, 40);
        assert_eq!(forest_leaf_count(&d, 1, 40), p);
        let f2 = forest_leaf_count(&d, 2, 40);
        assert!(close(f2[2], p[1] * p[1], 1e-15));
        // direct three-tree forest enumeration for n <= 8
        let f3 = forest_leaf_count(&d, 3, 8);
        for n in 3..=8 {
            let mut direct = 0.0;
            for a in 1..n {
                for b in 1..n - a {
                    let c = n - a - b;
                    if c >= 1 {
                        direct += brute_leaf_law(&d, a) * brute_leaf_law(&d, b) * brute_leaf_law(&d, c);
                    }
                }
            }
            assert!(close(f3[n], direct, 1e-13), "n={n}");
        }
    }

    #[test]
    fn size_series_matches_enumeration() {
        let cases = [(nct_root(), nct_nu()), (geometric_half(), geometric_half()), (mu(), mu())];
        for (root, body) in &cases {
            let s = size_count_series(root, body, 10);
            assert!(close(s[1], root.pmf(0), 1e-15));
            assert!(close(s[2], root.pmf(1) * body.pmf(0), 1e-15));
            for n in 1..=10 {
                let mut total = 0.0;
                for t in enumerate::trees_with_size(n) {
                    let d = t.degrees();
                    total += root.pmf(d[0] as usize) * d[1..].iter().map(|&k| body.pmf(k as usize)).product::<f64>();
                }
                assert!(close(s[n], total, 1e-14), "{} n={n}: {} vs {total}", body.label(), s[n]);
            }
        }
    }

    #[test]
    fn feasibility() {
        let three = feasible_leaf_counts(&DegreeSet::triangles(), 10);
        assert!(three[2..].iter().all(|&b| b));
        let four = feasible_leaf_counts(&DegreeSet::finite([4]).unwrap(), 12);
        for n in 2..=12 {
            assert_eq!(four[n], n % 2 == 1, "n={n}");
        }
        let all = feasible_leaf_counts(&DegreeSet::all(), 10);
        assert!(all[2..].iter().all(|&b| b));
        assert!(!all[0]);
        let five_up = feasible_leaf_counts(&DegreeSet::at_least(5).unwrap(), 10);
        assert_eq!(&five_up[1..], &[true, false, false, true, true, true, true, true, true, true]);
    }

    #[test]
    fn sampling_frequencies() {
        let d = nct_nu();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = 200_000;
        let mut counts = [0usize; 6];
        for _ in 0..n {
            let k = d.sample(&mut rng) as usize;
            if k < 6 {
                counts[k] += 1;
            }
        }
        for (k, &c) in counts.iter().enumerate() {
            let f = c as f64 / n as f64;
            assert!((f - d.pmf(k)).abs() < 0.005, "k={k}");
        }
        let point = OffspringDistribution::from_pmf("point", vec![1.0]).unwrap();
        assert_eq!(point.sample(&mut rng), 0);
    }

    #[test]
    fn tail_mass_is_consistent() {
        let m = mu();
        assert!(close(m.tail_mass(0), 1.0, 1e-12));
        assert!(close(m.tail_mass(2), 1.0 - m.pmf(0), 1e-12));
        let g = geometric_half();
        assert!(close(g.tail_mass(10), 0.5f64.powi(10), 1e-12));
    }
}

//! Exact counts of dissections, triangulations and non-crossing trees, by
//! exhaustive enumeration, by integer recurrences and through the tree
//! encodings.

use super::AnalyticsError;
use crate::configurations::{face_degrees, nct_embed, ChordDiagram, DiagramKind};
use crate::geometry::crossing;
use crate::offspring::{critical_c, leaf_count_series, mu, nu_a, DegreeSet};
use crate::trees::enumerate;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Largest polygon accepted by the exhaustive enumerators.
pub const MAX_BRUTE_FORCE_POLYGON: usize = 9;

fn check_polygon(m: usize, max: usize) -> Result<(), AnalyticsError> {
    if m < 3 {
        return Err(AnalyticsError::Domain(format!("P_{m} is not a polygon")));
    }
    if m > max {
        return Err(AnalyticsError::TooLarge(format!("P_{m} exceeds the limit P_{max}")));
    }
    Ok(())
}

/// Every dissection of `P_m`, found by extending non-crossing sets of
/// diagonals one diagonal at a time in a fixed order.
pub fn brute_force_dissections(m: usize) -> Result<Vec<ChordDiagram>, AnalyticsError> {
    check_polygon(m, MAX_BRUTE_FORCE_POLYGON)?;
    let diagonals: Vec<(usize, usize)> =
        (0..m).flat_map(|a| (a + 2..m).map(move |b| (a, b))).filter(|&(a, b)| !(a == 0 && b == m - 1)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        start: usize,
        m: usize,
        diagonals: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<ChordDiagram>,
    ) -> Result<(), AnalyticsError> {
        out.push(ChordDiagram::new(m, chosen.clone(), DiagramKind::Dissection)?);
        for i in start..diagonals.len() {
            let d = diagonals[i];
            if chosen.iter().all(|&c| !crossing(c, d)) {
                chosen.push(d);
                go(i + 1, m, diagonals, chosen, out)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    go(0, m, &diagonals, &mut chosen, &mut out)?;
    Ok(out)
}

/// The dissections of `P_m` whose face degrees all lie in `set`.
pub fn brute_force_dissections_a(m: usize, set: &DegreeSet) -> Result<Vec<ChordDiagram>, AnalyticsError> {
    let mut out = Vec::new();
    for d in brute_force_dissections(m)? {
        if face_degrees(&d)?.iter().all(|&k| set.contains(k)) {
            out.push(d);
        }
    }
    Ok(out)
}

/// Every non-crossing spanning tree of `P_m`, by extending forests of
/// non-crossing edges in a fixed order.
pub fn brute_force_ncts(m: usize) -> Result<Vec<ChordDiagram>, AnalyticsError> {
    check_polygon(m, 8)?;
    let edges: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    fn root(component: &[usize], mut x: usize) -> usize {
        while component[x] != x {
            x = component[x];
        }
        x
    }
    fn go(
        start: usize,
        m: usize,
        edges: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        component: &mut Vec<usize>,
        out: &mut Vec<ChordDiagram>,
    ) -> Result<(), AnalyticsError> {
        if chosen.len() == m - 1 {
            out.push(ChordDiagram::new(m, chosen.clone(), DiagramKind::Nct)?);
            return Ok(());
        }
        for i in start..edges.len() {
            if edges.len() - i < m - 1 - chosen.len() {
                break;
            }
            let e = edges[i];
            let (ra, rb) = (root(component, e.0), root(component, e.1));
            if ra == rb || chosen.iter().any(|&c| crossing(c, e)) {
                continue;
            }
            chosen.push(e);
            component[ra.max(rb)] = ra.min(rb);
            go(i + 1, m, edges, chosen, component, out)?;
            component[ra.max(rb)] = ra.max(rb);
            chosen.pop();
        }
        Ok(())
    }
    let mut component: Vec<usize> = (0..m).collect();
    go(0, m, &edges, &mut Vec::new(), &mut component, &mut out)?;
    Ok(out)
}

/// All images of `nct_embed` over every shape with `m` vertices and every
/// admissible split vector, in enumeration order (duplicates are kept so that
/// injectivity can be checked by the caller).
pub fn nct_generate(m: usize) -> Result<Vec<ChordDiagram>, AnalyticsError> {
    check_polygon(m, 8)?;
    let mut out = Vec::new();
    for t in enumerate::trees_with_size(m) {
        let degrees = t.degrees();
        let mut splits = vec![0u32; m];
        loop {
            out.push(nct_embed(&t, &splits)?);
            // Odometer over s_u in 0..=k_u for the non-root vertices.
            let mut u = 1;
            while u < m {
                if splits[u] < degrees[u] {
                    splits[u] += 1;
                    break;
                }
                splits[u] = 0;
                u += 1;
            }
            if u == m {
                break;
            }
        }
    }
    Ok(out)
}

/// Number of dissections of `P_m`, indexed by `m = 0..=max_m` (zero below 3),
/// from the three-term recurrence of the little Schröder numbers
/// `(k+1) s_{k+1} = 3(2k-1) s_k - (k-2) s_{k-1}` with `#P_m = s_{m-1}`.
pub fn dissection_count_series(max_m: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); max_m + 1];
    let mut s = vec![BigUint::zero(), BigUint::one(), BigUint::one()];
    for k in 2..max_m.saturating_sub(1) {
        let plus = BigUint::from(3 * (2 * k - 1)) * &s[k];
        let minus = BigUint::from(k - 2) * &s[k - 1];
        s.push((plus - minus) / BigUint::from(k + 1));
    }
    for (m, slot) in out.iter_mut().enumerate().skip(3) {
        *slot = s[m - 1].clone();
    }
    out
}

/// Number of dissections of `P_m` for `m = 0..=max_m` (zero below 3) from
/// the tree identity `#P_m = P_μ(λ = m-1) / (c^(m-3) μ_0^(m-1))`, evaluated
/// in floating point.
pub fn gw_identity_counts(max_m: usize) -> Vec<f64> {
    let law = mu();
    let leaves = leaf_count_series(&law, max_m.max(2));
    let c = critical_c();
    let mu0 = law.pmf(0);
    (0..=max_m)
        .map(|m| {
            if m < 3 {
                return 0.0;
            }
            let n = m - 1;
            (leaves[n].ln() - (n as f64 - 1.0) * c.ln() - n as f64 * mu0.ln()).exp()
        })
        .collect()
}

/// Number of dissections of `P_{n+1}` with all face degrees in `set`, for
/// `n = 0..=max_n` leaves of the dual tree (entry 0 is zero).
///
/// Uses `F = z + Σ_{a ∈ A} F^(a-1)` on exact integers; an unbounded set is
/// handled through `G = F^(k0) + F·G`, `G = Σ_{k >= k0} F^k`.
pub fn constrained_count_series(set: &DegreeSet, max_n: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::zero(); max_n + 1];
    if max_n == 0 {
        return f;
    }
    let (finite, k0): (Vec<usize>, Option<usize>) = match set {
        DegreeSet::Finite(values) => (values.iter().map(|&a| a as usize - 1).collect(), None),
        DegreeSet::AtLeast(bound) => (Vec::new(), Some((*bound as usize - 1).max(2))),
    };
    let top = finite.iter().copied().chain(k0).max().unwrap_or(1);
    // pow[k][n] = [z^n] F^k for k = 1..=top.
    let mut pow = vec![vec![BigUint::zero(); max_n + 1]; top + 1];
    let mut g = vec![BigUint::zero(); max_n + 1];
    for n in 1..=max_n {
        for k in 2..=top {
            let mut acc = BigUint::zero();
            for i in 1..n {
                if !f[i].is_zero() && !pow[k - 1][n - i].is_zero() {
                    acc += &f[i] * &pow[k - 1][n - i];
                }
            }
            pow[k][n] = acc;
        }
        let mut value = if n == 1 { BigUint::one() } else { BigUint::zero() };
        for &k in &finite {
            value += &pow[k][n];
        }
        if let Some(k0) = k0 {
            let mut acc = pow[k0][n].clone();
            for i in 1..n {
                if !f[i].is_zero() && !g[n - i].is_zero() {
                    acc += &f[i] * &g[n - i];
                }
            }
            g[n] = acc;
            value += &g[n];
        }
        f[n] = value.clone();
        pow[1][n] = value;
    }
    f
}

/// Asymptotic form `#{dissections of P_n with faces in A} ≈ constant ·
/// n^(-3/2) · growth^n`, valid along the residue class of `n` where the count
/// is non-zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticCount {
    pub growth: f64,
    pub constant: f64,
    pub period: u64,
}

impl AsymptoticCount {
    /// Natural log of the estimate at polygon size `n`.
    pub fn ln_estimate(&self, n: usize) -> f64 {
        let n = n as f64;
        self.constant.ln() - 1.5 * n.ln() + n * self.growth.ln()
    }
}

/// Growth rate `1/(c ν(0))` and constant `d √(ν(0)^3 c^4 / (2π σ^2))`, where
/// `c` is the parameter of the constrained law (equal to `ν(2)` when 3 is in
/// the set) and `d` the lattice period of the admissible leaf counts.
pub fn asymptotic_count_a(set: &DegreeSet) -> AsymptoticCount {
    let law = nu_a(set);
    let nu0 = law.dist.pmf(0);
    let c = law.c;
    let period = set.period();
    let constant = period as f64 * (nu0.powi(3) * c.powi(4) / (2.0 * std::f64::consts::PI * law.sigma2)).sqrt();
    AsymptoticCount { growth: 1.0 / (c * nu0), constant, period }
}

/// `(1/4) √((99√2 - 140)/π)`.
pub fn flajolet_noy_constant() -> f64 {
    0.25 * ((99.0 * std::f64::consts::SQRT_2 - 140.0) / std::f64::consts::PI).sqrt()
}

/// Distinct diagrams in a list.
pub fn distinct(diagrams: &[ChordDiagram]) -> usize {
    diagrams.iter().map(|d| d.chords().to_vec()).collect::<BTreeSet<_>>().len()
}

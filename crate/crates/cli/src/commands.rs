//! The subcommands.

use crate::output::{diagram_svg, DiagramRecord};
use crate::{
    CliError, ConcentrationArgs, CountArgs, CountMode, ModelArgs, SampleArgs, SampleFormat, StatsArgs, TableFormat,
    TestArgs,
};
use noncross::analytics::report::format_number;
use noncross::analytics::{
    asymptotic_count_a, concentration_experiment, constrained_count_series, dissection_count_series,
    flajolet_noy_constant, kolmogorov_survival, ks_vs_cdf, longest_chord_cdf, total_variation, ConcentrationKind,
    LimitLaw,
};
use noncross::battery::{run_battery, Group, ALPHA, TV_BUDGET, TV_TAIL_CUT};
use noncross::configurations::ConfigError;
use noncross::samplers::try_monte_carlo;
use noncross::{AnalyticsError, DegreeSet, Model, ModelSampler, StatReport, Statistic};
use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

/// Largest size accepted by `count --mode exact`.
pub const EXACT_CAP: usize = 5000;

/// Tolerance of the quadrature behind the longest-chord distribution function.
const CDF_TOL: f64 = 1e-10;

fn from_config(e: ConfigError) -> CliError {
    match e {
        ConfigError::Sample(s) => CliError::Infeasible(s.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn from_analytics(e: AnalyticsError) -> CliError {
    match e {
        AnalyticsError::Config(c) => from_config(c),
        other => CliError::Usage(other.to_string()),
    }
}

fn resolve_model(args: &ModelArgs) -> Result<Model, CliError> {
    let model: Model = args.model.parse().map_err(from_config)?;
    match (model, &args.degrees) {
        (Model::DissectionA(_), Some(spec)) => {
            let set: DegreeSet = spec.parse().map_err(|e| CliError::Usage(format!("--degrees: {e}")))?;
            Ok(Model::DissectionA(set))
        }
        (Model::DissectionA(_), None) => Err(CliError::Usage("dissection-A requires --degrees".into())),
        (_, Some(_)) => Err(CliError::Usage("--degrees only applies to dissection-A".into())),
        (model, None) => Ok(model),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(io)?;
            out.flush().map_err(io)
        }
    }
}

pub fn sample(a: &SampleArgs) -> Result<(), CliError> {
    let model = resolve_model(&a.model)?;
    if a.count == 0 {
        return Err(CliError::Usage("--count must be positive".into()));
    }
    if a.format == SampleFormat::Svg && a.count != 1 {
        return Err(CliError::Usage("SVG output holds a single sample; use --count 1".into()));
    }
    let sampler = ModelSampler::new(model.clone(), a.n).map_err(from_config)?;
    let configs = try_monte_carlo(a.seed, a.count, |rng, _| sampler.sample(rng)).map_err(from_config)?;
    let text = match a.format {
        SampleFormat::Svg => diagram_svg(&configs[0].diagram),
        SampleFormat::Json => {
            let mut text = String::new();
            for (j, c) in configs.iter().enumerate() {
                let record = DiagramRecord::new(&model, &c.diagram, c.partition.as_ref(), a.seed, j as u64);
                text.push_str(&serde_json::to_string(&record).expect("records serialize"));
                text.push('\n');
            }
            text
        }
    };
    emit(a.output.as_deref(), &text)
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn catalan(n: usize) -> BigUint {
    binomial(2 * n as u64, n as u64) / BigUint::from(n + 1)
}

/// Exact number of configurations of the model at size `n`.
pub fn exact_count(model: &Model, n: usize) -> Result<BigUint, CliError> {
    if n > EXACT_CAP {
        return Err(CliError::Usage(format!("exact counts are capped at n = {EXACT_CAP}")));
    }
    let polygon = model.polygon(n);
    let needs_polygon =
        matches!(model, Model::Dissection | Model::Triangulation | Model::DissectionA(_) | Model::NcGraph);
    if (needs_polygon && polygon < 3) || n == 0 {
        return Err(CliError::Infeasible(format!("{model} is not defined at n = {n}")));
    }
    Ok(match model {
        Model::Dissection => dissection_count_series(polygon).swap_remove(polygon),
        Model::Triangulation => constrained_count_series(&DegreeSet::triangles(), n).swap_remove(n),
        Model::DissectionA(set) => constrained_count_series(set, n).swap_remove(n),
        Model::Nct => binomial(3 * n as u64 - 3, n as u64 - 1) / BigUint::from(2 * n - 1),
        Model::PairPartition | Model::Partition => catalan(n),
        Model::NcGraph => dissection_count_series(n).swap_remove(n) << n,
    })
}

/// `count ≈ constant · k^(-3/2) · growth^k`, where `k` is the polygon size
/// for every model except pair partitions, which use the number of pairs.
#[derive(Debug, Clone, Copy)]
pub struct Asymptotics {
    pub growth: f64,
    pub constant: f64,
    pub period: u64,
}

pub fn asymptotics(model: &Model) -> Asymptotics {
    let from = |c: noncross::analytics::AsymptoticCount| Asymptotics {
        growth: c.growth,
        constant: c.constant,
        period: c.period,
    };
    match model {
        Model::Dissection => from(asymptotic_count_a(&DegreeSet::all())),
        Model::Triangulation => from(asymptotic_count_a(&DegreeSet::triangles())),
        Model::DissectionA(set) => from(asymptotic_count_a(set)),
        Model::Nct => Asymptotics { growth: 27.0 / 4.0, constant: 3f64.sqrt() / (27.0 * PI.sqrt()), period: 1 },
        Model::PairPartition | Model::Partition => Asymptotics { growth: 4.0, constant: 1.0 / PI.sqrt(), period: 1 },
        Model::NcGraph => {
            Asymptotics { growth: 2.0 * (3.0 + 2.0 * 2f64.sqrt()), constant: flajolet_noy_constant(), period: 1 }
        }
    }
}

fn asymptotic_index(model: &Model, n: usize) -> usize {
    match model {
        Model::PairPartition => n,
        other => other.polygon(n),
    }
}

pub fn count(a: &CountArgs) -> Result<(), CliError> {
    let model = resolve_model(&a.model)?;
    let text = match a.mode {
        CountMode::Exact => {
            let n = a.n.ok_or_else(|| CliError::Usage("exact mode requires --n".into()))?;
            format!("{}\n", exact_count(&model, n)?)
        }
        CountMode::Asymptotic => {
            let asy = asymptotics(&model);
            let mut text = format!(
                "growth {}\nconstant {}\nperiod {}\n",
                format_number(asy.growth),
                format_number(asy.constant),
                asy.period
            );
            if let Some(n) = a.n {
                let k = asymptotic_index(&model, n) as f64;
                let ln = asy.constant.ln() - 1.5 * k.ln() + k * asy.growth.ln();
                writeln!(text, "ln_estimate {}", format_number(ln)).unwrap();
                writeln!(text, "estimate {:.10e}", ln.exp()).unwrap();
            }
            text
        }
    };
    emit(None, &text)
}

/// Largest KS distance accepted at level `alpha` for `n` observations.
fn ks_critical(alpha: f64, n: usize) -> f64 {
    let (mut lo, mut hi) = (0.2, 10.0);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if kolmogorov_survival(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = (n as f64).sqrt();
    0.5 * (lo + hi) / (root + 0.12 + 0.11 / root)
}

pub fn stats(a: &StatsArgs) -> Result<(), CliError> {
    let model = resolve_model(&a.model)?;
    let mut stat: Statistic = a.stat.parse().map_err(from_analytics)?;
    if let Statistic::Intersections { .. } = stat {
        stat = Statistic::Intersections { alpha: a.alpha, beta: a.beta };
    }
    let limit: Option<LimitLaw> = a.limit.as_deref().map(str::parse).transpose().map_err(from_analytics)?;
    if let Some(law) = limit {
        if law.pmf().is_some() != stat.is_discrete() {
            return Err(CliError::Usage(format!("limit {law} does not apply to the statistic {stat}")));
        }
    }
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let sampler = ModelSampler::new(model.clone(), a.n).map_err(from_config)?;
    let values = try_monte_carlo(a.seed, a.samples, |rng, _| {
        let c = sampler.sample(rng)?;
        stat.evaluate(&c, a.n)
    })
    .map_err(from_analytics)?;
    let mut report = StatReport::new(model.name(), stat.name(), a.n, a.seed, &values);
    if let Some(law) = limit {
        match law.pmf() {
            Some(pmf) => {
                let mut hist = BTreeMap::new();
                for &v in &values {
                    *hist.entry(v as i64).or_insert(0usize) += 1;
                }
                let tv = total_variation(&hist, pmf, law.support_start(), TV_TAIL_CUT).map_err(from_analytics)?;
                report.push_test(&format!("tv-{law}"), tv, TV_BUDGET, tv < TV_BUDGET);
            }
            None => {
                let ks = ks_vs_cdf(&values, |x| longest_chord_cdf(x, CDF_TOL).unwrap_or(f64::NAN), ALPHA)
                    .map_err(from_analytics)?;
                report.push_test(&format!("ks-{law}"), ks.statistic, ks_critical(ALPHA, values.len()), ks.pass);
            }
        }
    }
    if let Statistic::Intersections { .. } = stat {
        report = report.with_values(values);
    }
    let text = match a.format {
        TableFormat::Json => report.to_json() + "\n",
        TableFormat::Csv => report.histogram_csv(),
    };
    emit(a.output.as_deref(), &text)
}

fn optional(v: Option<f64>) -> String {
    v.map(format_number).unwrap_or_default()
}

pub fn concentration(a: &ConcentrationArgs) -> Result<(), CliError> {
    let kind: ConcentrationKind = a.kind.parse().map_err(from_analytics)?;
    let report = concentration_experiment(kind, &a.grid, a.c, a.samples, a.seed).map_err(from_analytics)?;
    let text = match a.format {
        TableFormat::Json => serde_json::to_string(&report).expect("reports serialize") + "\n",
        TableFormat::Csv => {
            let mut text =
                String::from("n,samples,lower,upper,probability,mean,conjecture_center,conjecture_fraction\n");
            for r in &report.rows {
                writeln!(
                    text,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    r.samples,
                    format_number(r.lower),
                    optional(r.upper),
                    format_number(r.probability),
                    format_number(r.mean),
                    optional(r.conjecture_center),
                    optional(r.conjecture_fraction)
                )
                .unwrap();
            }
            text
        }
    };
    emit(a.output.as_deref(), &text)
}

pub fn test(a: &TestArgs) -> Result<(), CliError> {
    let groups: Vec<Group> =
        a.only.iter().map(|g| g.parse()).collect::<Result<_, String>>().map_err(CliError::Usage)?;
    let results = run_battery(&groups, |r| {
        println!("{r}");
        let _ = std::io::stdout().flush();
    });
    let failed = results.iter().filter(|r| !r.pass).count();
    println!("acceptance: {} passed, {} failed", results.len() - failed, failed);
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::AcceptanceFailed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_counts_match_known_sequences() {
        assert_eq!(exact_count(&Model::Dissection, 7).unwrap(), BigUint::from(903u32));
        assert_eq!(exact_count(&Model::Triangulation, 7).unwrap(), BigUint::from(132u32));
        assert_eq!(exact_count(&Model::Nct, 5).unwrap(), BigUint::from(55u32));
        assert_eq!(exact_count(&Model::Nct, 3).unwrap(), BigUint::from(3u32));
        assert_eq!(exact_count(&Model::PairPartition, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(exact_count(&Model::Partition, 4).unwrap(), BigUint::from(14u32));
        // Square: three dissections times sixteen subsets of sides.
        assert_eq!(exact_count(&Model::NcGraph, 4).unwrap(), BigUint::from(48u32));
        let four: DegreeSet = "4".parse().unwrap();
        assert_eq!(exact_count(&Model::DissectionA(four.clone()), 5).unwrap(), BigUint::from(3u32));
        assert_eq!(exact_count(&Model::DissectionA(four), 4).unwrap(), BigUint::from(0u32));
        assert!(matches!(exact_count(&Model::Dissection, 1), Err(CliError::Infeasible(_))));
        assert!(matches!(exact_count(&Model::Dissection, EXACT_CAP + 1), Err(CliError::Usage(_))));
    }

    #[test]
    fn asymptotic_estimates_track_exact_counts() {
        for (model, n) in [
            (Model::Dissection, 1999),
            (Model::Triangulation, 1999),
            (Model::Nct, 2000),
            (Model::PairPartition, 2000),
            (Model::Partition, 2000),
            (Model::NcGraph, 2000),
        ] {
            let asy = asymptotics(&model);
            let k = asymptotic_index(&model, n) as f64;
            let ln_estimate = asy.constant.ln() - 1.5 * k.ln() + k * asy.growth.ln();
            let exact = exact_count(&model, n).unwrap();
            let bits = exact.bits();
            let shift = bits.saturating_sub(60);
            let top: u64 = (&exact >> shift).try_into().unwrap();
            let ln_exact = (top as f64).ln() + shift as f64 * std::f64::consts::LN_2;
            assert!((ln_exact - ln_estimate).abs() < 0.01, "{model}: {ln_exact} vs {ln_estimate}");
        }
    }

    #[test]
    fn ks_critical_value() {
        // About 1.949 / sqrt(n) for large n at the 0.1% level.
        let d = ks_critical(0.001, 10_000);
        assert!((d * 100.0 - 1.949).abs() < 0.01, "{d}");
    }
}

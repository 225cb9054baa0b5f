//! Reproducible convergence studies.
//!
//! Every `(n, trial)` pair gets its own random stream from
//! [`fpp_core::seed::derive_seed`]; trials run on a rayon pool and are
//! collected back in trial order, so output never depends on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use fpp_core::constants::{pair_weight_const, theory_constants, ThresholdConstants};
use fpp_core::exploration::{coupled_hopcount_sample, explore};
use fpp_core::fpp::{self, DEFAULT_ALL_PAIRS_CAP};
use fpp_core::graph::{sample_instance, SimpleMode};
use fpp_core::seed::{derive_seed, rng_from_seed, TrialRng};
use fpp_core::weights::assign_weights;
use fpp_core::WeightedGraph;

use crate::{io, Error, Result};

/// What a run measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Hop flooding and weighted eccentricity from vertex 0.
    Flood,
    /// All-pairs hop and weighted diameter.
    Diameter,
    /// Hopcount and weighted distance between vertex 0 and a uniform vertex.
    Pair,
    /// Exploration-process traces.
    Explore,
    /// Constants only.
    Constants,
    /// Exploration `H_k` against the Bernoulli-sum sampler.
    CoupleCheck,
}

impl Mode {
    /// Name used on the command line and in output files.
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Flood => "flood",
            Mode::Diameter => "diameter",
            Mode::Pair => "pair",
            Mode::Explore => "explore",
            Mode::Constants => "constants",
            Mode::CoupleCheck => "couple-check",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "flood" => Mode::Flood,
            "diameter" => Mode::Diameter,
            "pair" => Mode::Pair,
            "explore" => Mode::Explore,
            "constants" => Mode::Constants,
            "couple-check" => Mode::CoupleCheck,
            other => return Err(Error::Config(format!("unknown mode {other:?}"))),
        })
    }
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// Long-format CSV with a version comment line.
    #[default]
    Csv,
    /// JSON array of row objects.
    Json,
}

/// Full description of a run.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// What to measure.
    pub mode: Mode,
    /// Degree.
    pub d: u32,
    /// Graph sizes, run in the given order.
    pub n_grid: Vec<usize>,
    /// Trials per size.
    pub trials: usize,
    /// Master seed for [`derive_seed`].
    pub master_seed: u64,
    /// Simple graphs by rejection, or raw multigraphs.
    pub simple_mode: SimpleMode,
    /// Output encoding.
    pub output: OutputFormat,
    /// Largest `n` accepted in diameter mode.
    pub all_pairs_cap: usize,
    /// Bound on pairings drawn per instance.
    pub max_attempts: u32,
    /// Exploration steps in explore mode (capped at `n - 1`).
    pub k_max: usize,
    /// Steps compared in couple-check mode.
    pub k_list: Vec<usize>,
    /// Record wall-clock time per trial. Off by default so that repeated
    /// runs are byte-identical.
    pub timing: bool,
    /// Write every sampled weighted graph here.
    pub dump_dir: Option<PathBuf>,
    /// Write every exploration trace here.
    pub trace_dir: Option<PathBuf>,
}

impl ExperimentConfig {
    /// A config with the defaults for `mode`.
    pub fn new(mode: Mode, d: u32) -> Self {
        let (n_grid, trials) = match mode {
            Mode::Flood => (vec![1 << 12, 1 << 14, 1 << 16], 30),
            Mode::Diameter => (vec![1 << 10, 1 << 11, 1 << 12], 10),
            Mode::Pair => (vec![100_000], 200),
            Mode::Explore => (vec![10_000], 1000),
            Mode::CoupleCheck => (vec![10_000], 10_000),
            Mode::Constants => (Vec::new(), 1),
        };
        ExperimentConfig {
            mode,
            d,
            n_grid,
            trials,
            master_seed: 1,
            simple_mode: SimpleMode::Reject,
            output: OutputFormat::Csv,
            all_pairs_cap: DEFAULT_ALL_PAIRS_CAP,
            max_attempts: 100_000,
            k_max: 1000,
            k_list: vec![10, 30, 50],
            timing: false,
            dump_dir: None,
            trace_dir: None,
        }
    }

    /// Checks every field, including the all-pairs cap in diameter mode.
    pub fn validate(&self) -> Result<()> {
        if self.d < 3 {
            return Err(Error::Config(format!(
                "d must be at least 3, got {}",
                self.d
            )));
        }
        if self.mode == Mode::Constants {
            return Ok(());
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.n_grid.is_empty() {
            return Err(Error::Config("n grid is empty".into()));
        }
        for &n in &self.n_grid {
            if n < 4 {
                return Err(Error::Config(format!("n must be at least 4, got {n}")));
            }
            if (n * self.d as usize) % 2 == 1 {
                return Err(Error::Config(format!(
                    "n*d must be even, got n={n}, d={}",
                    self.d
                )));
            }
            if self.mode == Mode::Diameter && n > self.all_pairs_cap {
                return Err(fpp_core::Error::AllPairsCap {
                    n,
                    cap: self.all_pairs_cap,
                }
                .into());
            }
            if self.mode == Mode::CoupleCheck {
                if let Some(&k) = self.k_list.iter().find(|&&k| k == 0 || k > n - 1) {
                    return Err(Error::Config(format!("k={k} outside 1..n-1 for n={n}")));
                }
            }
        }
        if self.mode == Mode::CoupleCheck && self.k_list.is_empty() {
            return Err(Error::Config("couple-check needs at least one k".into()));
        }
        if self.max_attempts == 0 {
            return Err(Error::Config("max attempts must be positive".into()));
        }
        Ok(())
    }
}

/// One measured quantity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stat {
    /// Column value for `stat_name`.
    pub name: String,
    /// Raw value.
    pub value: f64,
    /// `value / ln n` for size-extensive statistics, `value` otherwise.
    pub normalized: f64,
    /// Limit of `normalized` as `n -> inf`, where one is known.
    pub theory: Option<f64>,
}

impl Stat {
    fn per_log(name: impl Into<String>, value: f64, ln_n: f64, theory: Option<f64>) -> Self {
        Stat {
            name: name.into(),
            value,
            normalized: value / ln_n,
            theory,
        }
    }

    fn raw(name: impl Into<String>, value: f64, theory: Option<f64>) -> Self {
        Stat {
            name: name.into(),
            value,
            normalized: value,
            theory,
        }
    }
}

/// Everything recorded for one trial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    /// Run mode.
    pub mode: Mode,
    /// Degree.
    pub d: u32,
    /// Vertex count.
    pub n: usize,
    /// Trial index within this `n`.
    pub trial: usize,
    /// Derived seed of this trial.
    pub seed: u64,
    /// Measured statistics, in a fixed per-mode order.
    pub stats: Vec<Stat>,
    /// Pairings drawn before acceptance.
    pub attempts: u32,
    /// Draws thrown away for being disconnected.
    pub disconnected: u32,
    /// True if the instance was left as a multigraph.
    pub multigraph: bool,
    /// Wall time in milliseconds (0 unless timing is enabled).
    pub wall_ms: f64,
}

/// Per-`(d, n, stat)` aggregate over trials of normalized values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    /// Run mode.
    pub mode: Mode,
    /// Degree.
    pub d: u32,
    /// Vertex count.
    pub n: usize,
    /// Statistic name.
    pub stat_name: String,
    /// Number of trials.
    pub count: usize,
    /// Sample mean of the normalized values.
    pub mean: f64,
    /// Sample standard deviation; `None` for a single record.
    pub std: Option<f64>,
    /// Standard error of the mean; `None` for a single record.
    pub stderr: Option<f64>,
    /// Smallest normalized value.
    pub min: f64,
    /// Largest normalized value.
    pub max: f64,
    /// Theoretical limit.
    pub theory: Option<f64>,
    /// `mean - theory`.
    pub gap: Option<f64>,
}

/// Total-variation distance between exploration and coupled `H_k` samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CouplingRow {
    /// Degree.
    pub d: u32,
    /// Vertex count.
    pub n: usize,
    /// Step index.
    pub k: usize,
    /// Paired samples.
    pub runs: usize,
    /// Empirical TV distance.
    pub tv: f64,
}

/// Result of [`run`].
#[derive(Debug, Clone)]
pub struct RunOutput {
    /// Per-trial records in `(n, trial)` order.
    pub records: Vec<TrialRecord>,
    /// Aggregates; empty in constants mode.
    pub summary: Vec<SummaryRow>,
    /// Coupling distances (couple-check mode only).
    pub coupling: Vec<CouplingRow>,
    /// Constants for the configured degree.
    pub constants: ThresholdConstants,
    /// Human-readable notes, e.g. multigraph fallback.
    pub warnings: Vec<String>,
}

/// Runs the configured experiment.
pub fn run(config: &ExperimentConfig) -> Result<RunOutput> {
    config.validate()?;
    let constants = theory_constants(config.d)?;
    let mut warnings = Vec::new();
    if config.mode == Mode::Constants {
        return Ok(RunOutput {
            records: Vec::new(),
            summary: Vec::new(),
            coupling: Vec::new(),
            constants,
            warnings,
        });
    }
    if config.simple_mode == SimpleMode::Multigraph
        && matches!(config.mode, Mode::Flood | Mode::Diameter | Mode::Pair)
    {
        warnings.push(
            "multigraph mode: instances may contain self-loops and parallel edges".to_string(),
        );
    }
    for dir in [&config.dump_dir, &config.trace_dir].into_iter().flatten() {
        std::fs::create_dir_all(dir)?;
    }

    let mut records = Vec::with_capacity(config.n_grid.len() * config.trials);
    for &n in &config.n_grid {
        let batch: Vec<TrialRecord> = (0..config.trials)
            .into_par_iter()
            .map(|trial| run_trial(config, &constants, n, trial))
            .collect::<Result<_>>()?;
        records.extend(batch);
    }
    let mut seeds: Vec<u64> = records.iter().map(|r| r.seed).collect();
    seeds.sort_unstable();
    if seeds.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Config(
            "derived seeds collide within this run".into(),
        ));
    }
    let disconnected: u32 = records.iter().map(|r| r.disconnected).sum();
    if disconnected > 0 {
        warnings.push(format!("{disconnected} disconnected draws were resampled"));
    }
    let summary = summarize(&records)?;
    let coupling = if config.mode == Mode::CoupleCheck {
        coupling_tv(&records, &config.k_list)
    } else {
        Vec::new()
    };
    Ok(RunOutput {
        records,
        summary,
        coupling,
        constants,
        warnings,
    })
}

fn run_trial(
    config: &ExperimentConfig,
    constants: &ThresholdConstants,
    n: usize,
    trial: usize,
) -> Result<TrialRecord> {
    let started = Instant::now();
    let seed = derive_seed(config.master_seed, n as u64, trial as u64);
    let mut rng = rng_from_seed(seed);
    let d = config.d as usize;
    let ln_n = (n as f64).ln();

    let mut attempts = 0;
    let mut disconnected = 0;
    let stats = match config.mode {
        Mode::Flood | Mode::Diameter | Mode::Pair => {
            let sampled = sample_instance(n, d, config.simple_mode, &mut rng, config.max_attempts)?;
            attempts = sampled.attempts;
            disconnected = sampled.disconnected;
            let wg = assign_weights(sampled.graph, &mut rng);
            if let Some(dir) = &config.dump_dir {
                let simple = wg.graph().is_simple();
                let path = dir.join(format!("graph_d{}_n{n}_t{trial}.txt", config.d));
                io::write_graph_dump(&path, &wg, simple, seed)?;
            }
            match config.mode {
                Mode::Flood => flood_trial(&wg, constants, ln_n)?,
                Mode::Diameter => diameter_trial(&wg, constants, ln_n, config.all_pairs_cap)?,
                _ => pair_trial(&wg, constants, ln_n, &mut rng)?,
            }
        }
        Mode::Explore => {
            let k_max = config.k_max.min(n - 1);
            let trace = explore(n, d, &mut rng, k_max)?;
            if let Some(dir) = &config.trace_dir {
                let path = dir.join(format!("trace_d{}_n{n}_t{trial}.csv", config.d));
                io::write_trace_csv(&path, &trace)?;
            }
            let k = trace.steps();
            vec![
                Stat::raw("steps", k as f64, None),
                Stat::per_log("t_k", trace.times[k], ln_n, None),
                Stat::raw("s_k", trace.boundary[k] as f64, None),
                Stat::raw("x_k", trace.excess[k] as f64, None),
                Stat::per_log("h_k", trace.hops[k] as f64, ln_n, None),
            ]
        }
        Mode::CoupleCheck => {
            let k_top = config.k_list.iter().copied().max().unwrap_or(0);
            let trace = explore(n, d, &mut rng, k_top)?;
            let mut stats = Vec::with_capacity(2 * config.k_list.len());
            for &k in &config.k_list {
                // a trace that died before step k has no H_k; record NaN
                let explored = trace.hops.get(k).map_or(f64::NAN, |&h| h as f64);
                let coupled = if trace.boundary.len() > k {
                    coupled_hopcount_sample(d, k, &trace.boundary, &mut rng)
                        .map_or(f64::NAN, |h| h as f64)
                } else {
                    f64::NAN
                };
                stats.push(Stat::raw(format!("h_explore_k{k}"), explored, None));
                stats.push(Stat::raw(format!("h_coupled_k{k}"), coupled, None));
            }
            stats
        }
        Mode::Constants => unreachable!("constants mode runs no trials"),
    };

    let wall_ms = if config.timing {
        started.elapsed().as_secs_f64() * 1e3
    } else {
        0.0
    };
    Ok(TrialRecord {
        mode: config.mode,
        d: config.d,
        n,
        trial,
        seed,
        stats,
        attempts,
        disconnected,
        multigraph: config.simple_mode == SimpleMode::Multigraph,
        wall_ms,
    })
}

fn flood_trial(wg: &WeightedGraph, c: &ThresholdConstants, ln_n: f64) -> Result<Vec<Stat>> {
    let tree = fpp::sssp(wg, 0)?;
    let maxima = fpp::tree_maxima(&tree)?;
    // ratio along the path to the smallest-id vertex attaining the max hopcount
    let far = tree
        .hops
        .iter()
        .position(|&h| h == maxima.max_hops)
        .unwrap_or(0);
    let ratio = if far == 0 {
        f64::NAN
    } else {
        maxima.max_hops as f64 / tree.dist[far]
    };
    Ok(vec![
        Stat::per_log("max_hops", maxima.max_hops as f64, ln_n, Some(c.alpha_star)),
        Stat::per_log(
            "weighted_ecc",
            maxima.weighted_ecc,
            ln_n,
            Some(c.flood_weight_const),
        ),
        Stat::raw("flood_ratio", ratio, None),
    ])
}

fn diameter_trial(
    wg: &WeightedGraph,
    c: &ThresholdConstants,
    ln_n: f64,
    cap: usize,
) -> Result<Vec<Stat>> {
    let flood = fpp::flood_stats(wg, 0)?;
    let diam = fpp::hop_diameter(wg, cap)?;
    Ok(vec![
        Stat::per_log(
            "hop_diameter",
            diam.hop_diameter as f64,
            ln_n,
            Some(c.alpha_hat),
        ),
        Stat::per_log(
            "weighted_diameter",
            diam.weighted_diameter,
            ln_n,
            Some(c.diam_weight_const),
        ),
        Stat::per_log("max_hops", flood.max_hops as f64, ln_n, Some(c.alpha_star)),
        Stat::per_log(
            "weighted_ecc",
            flood.weighted_ecc,
            ln_n,
            Some(c.flood_weight_const),
        ),
    ])
}

fn pair_trial(
    wg: &WeightedGraph,
    c: &ThresholdConstants,
    ln_n: f64,
    rng: &mut TrialRng,
) -> Result<Vec<Stat>> {
    let n = wg.n();
    let v = rng.random_range(1..n);
    let p = fpp::pair_stats(wg, 0, v)?;
    let hops = p.hops as f64;
    let centre = c.gamma * ln_n;
    let d = c.d as f64;
    Ok(vec![
        Stat::per_log("pair_hops", hops, ln_n, Some(c.gamma)),
        Stat::per_log("pair_dist", p.dist, ln_n, Some(pair_weight_const(c.d)?)),
        Stat::raw("pair_hops_std", (hops - centre) / centre.sqrt(), Some(0.0)),
        Stat::raw("pair_dist_centered", p.dist - ln_n / (d - 2.0), None),
        Stat::raw("pair_ratio", hops / p.dist, Some(d - 1.0)),
    ])
}

type GroupKey = (u32, usize, String);

/// Aggregates normalized statistics per `(d, n, stat_name)`, in order of
/// first appearance. Non-finite values are skipped.
pub fn summarize(records: &[TrialRecord]) -> Result<Vec<SummaryRow>> {
    let first = records
        .first()
        .ok_or_else(|| Error::Config("cannot summarize an empty record set".into()))?;
    if records.iter().any(|r| r.mode != first.mode) {
        return Err(Error::Config(
            "cannot summarize records from different modes".into(),
        ));
    }
    let mut order: Vec<GroupKey> = Vec::new();
    let mut groups: BTreeMap<GroupKey, (Vec<f64>, Option<f64>)> = BTreeMap::new();
    for r in records {
        for s in &r.stats {
            let key = (r.d, r.n, s.name.clone());
            let entry = groups.entry(key.clone()).or_insert_with(|| {
                order.push(key);
                (Vec::new(), s.theory)
            });
            if s.normalized.is_finite() {
                entry.0.push(s.normalized);
            }
        }
    }
    let rows = order
        .into_iter()
        .filter_map(|key| {
            let (values, theory) = groups.remove(&key)?;
            if values.is_empty() {
                return None;
            }
            let (d, n, stat_name) = key;
            let count = values.len();
            let mean = values.iter().sum::<f64>() / count as f64;
            let std = (count > 1).then(|| {
                let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
                (ss / (count - 1) as f64).sqrt()
            });
            Some(SummaryRow {
                mode: first.mode,
                d,
                n,
                stat_name,
                count,
                mean,
                std,
                stderr: std.map(|s| s / (count as f64).sqrt()),
                min: values.iter().copied().fold(f64::INFINITY, f64::min),
                max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                theory,
                gap: theory.map(|t| mean - t),
            })
        })
        .collect();
    Ok(rows)
}

/// Empirical total-variation distance between explored and coupled `H_k`
/// samples, per `(d, n, k)`. Trials where either side is missing are
/// dropped.
pub fn coupling_tv(records: &[TrialRecord], k_list: &[usize]) -> Vec<CouplingRow> {
    let mut keys: Vec<(u32, usize)> = records.iter().map(|r| (r.d, r.n)).collect();
    keys.dedup();
    let mut out = Vec::new();
    for (d, n) in keys {
        for &k in k_list {
            let explore_name = format!("h_explore_k{k}");
            let coupled_name = format!("h_coupled_k{k}");
            let mut a = Vec::new();
            let mut b = Vec::new();
            for r in records.iter().filter(|r| r.d == d && r.n == n) {
                let get = |name: &str| r.stats.iter().find(|s| s.name == name).map(|s| s.value);
                if let (Some(x), Some(y)) = (get(&explore_name), get(&coupled_name)) {
                    if x.is_finite() && y.is_finite() {
                        a.push(x as usize);
                        b.push(y as usize);
                    }
                }
            }
            if a.is_empty() {
                continue;
            }
            out.push(CouplingRow {
                d,
                n,
                k,
                runs: a.len(),
                tv: total_variation(&a, &b),
            });
        }
    }
    out
}

/// TV distance between the empirical laws of two integer samples.
pub fn total_variation(a: &[usize], b: &[usize]) -> f64 {
    let top = a.iter().chain(b).copied().max().unwrap_or(0);
    let mut pa = vec![0.0; top + 1];
    let mut pb = vec![0.0; top + 1];
    for &x in a {
        pa[x] += 1.0 / a.len() as f64;
    }
    for &x in b {
        pb[x] += 1.0 / b.len() as f64;
    }
    0.5 * pa.iter().zip(&pb).map(|(x, y)| (x - y).abs()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(value: f64) -> TrialRecord {
        TrialRecord {
            mode: Mode::Flood,
            d: 3,
            n: 100,
            trial: 0,
            seed: 0,
            stats: vec![Stat::raw("x", value, Some(1.0))],
            attempts: 1,
            disconnected: 0,
            multigraph: false,
            wall_ms: 0.0,
        }
    }

    #[test]
    fn summary_of_one_record() {
        let s = summarize(&[record(2.5)]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].mean, 2.5);
        assert_eq!(s[0].std, None);
        assert_eq!(s[0].stderr, None);
        assert_eq!(s[0].gap, Some(1.5));
    }

    #[test]
    fn summary_of_equal_records() {
        let s = summarize(&[record(2.0), record(2.0)]).unwrap();
        assert_eq!(s[0].std, Some(0.0));
        assert_eq!((s[0].min, s[0].max), (2.0, 2.0));
    }

    #[test]
    fn summary_matches_hand_computation() {
        // values 1..=30 / 7: mean 31/14, sample variance (30*31/12) / 49
        let recs: Vec<_> = (1..=30).map(|i| record(i as f64 / 7.0)).collect();
        let s = &summarize(&recs).unwrap()[0];
        assert!((s.mean - 31.0 / 14.0).abs() <= 1e-12);
        let var: f64 = 30.0 * 31.0 / 12.0 / 49.0;
        assert!((s.std.unwrap() - var.sqrt()).abs() <= 1e-12);
        assert!((s.stderr.unwrap() - (var / 30.0).sqrt()).abs() <= 1e-12);
        assert!(s.min <= s.mean && s.mean <= s.max);
    }

    #[test]
    fn summary_errors() {
        assert!(summarize(&[]).is_err());
        let mut other = record(1.0);
        other.mode = Mode::Pair;
        assert!(summarize(&[record(1.0), other]).is_err());
    }

    #[test]
    fn tv_distance() {
        assert_eq!(total_variation(&[1, 2, 3], &[1, 2, 3]), 0.0);
        assert_eq!(total_variation(&[0, 0], &[1, 1]), 1.0);
        assert!((total_variation(&[0, 1], &[1, 1]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn config_validation() {
        let mut c = ExperimentConfig::new(Mode::Flood, 3);
        assert!(c.validate().is_ok());
        c.trials = 0;
        assert!(c.validate().is_err());
        let mut c = ExperimentConfig::new(Mode::Flood, 3);
        c.n_grid = vec![101];
        assert!(c.validate().is_err());
        c.n_grid = vec![2];
        assert!(c.validate().is_err());
        let mut c = ExperimentConfig::new(Mode::Diameter, 3);
        c.n_grid = vec![30_000];
        assert!(matches!(
            c.validate(),
            Err(Error::Core(fpp_core::Error::AllPairsCap { .. }))
        ));
        c.all_pairs_cap = 40_000;
        assert!(c.validate().is_ok());
        assert!(ExperimentConfig::new(Mode::Flood, 2).validate().is_err());
    }

    #[test]
    fn rejection_exhaustion_surfaces() {
        let mut c = ExperimentConfig::new(Mode::Flood, 20);
        c.n_grid = vec![100];
        c.trials = 1;
        c.max_attempts = 5;
        assert!(matches!(
            run(&c),
            Err(Error::Core(fpp_core::Error::RejectionExhausted { .. }))
        ));
        c.simple_mode = SimpleMode::Multigraph;
        let out = run(&c).unwrap();
        assert!(!out.warnings.is_empty());
        assert!(out.records[0].multigraph);
    }

    #[test]
    fn mode_round_trip() {
        for m in [
            Mode::Flood,
            Mode::Diameter,
            Mode::Pair,
            Mode::Explore,
            Mode::Constants,
            Mode::CoupleCheck,
        ] {
            assert_eq!(m.as_str().parse::<Mode>().unwrap(), m);
        }
        assert!("nope".parse::<Mode>().is_err());
    }
}

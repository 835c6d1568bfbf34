//! Monte-Carlo experiments over random two-qubit states: per-sample
//! discord and weak discord, D_w − D histograms, α sweeps, and single-state
//! reports. Results depend only on the configuration, never on the number
//! of worker threads.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::correlations::{classical_work, discord, quantum_work};
use crate::error::{Error, Result};
use crate::format::{sig17, sig17_vec, Sig17};
use crate::qcore::{DensityFile, DensityMatrix};
use crate::states::{
    bell_diagonal, random_dqc1, random_mixed, random_pure, werner, BellDiagonalParams, RandomStateSpec,
};
use crate::weak::{alternative_weak_discord, disturbance_probability, weak_discord_with};

/// Column order of the per-sample CSV.
pub const RECORD_HEADER: &str = "index,rank,alpha,seed,discord,weak_discord,diff,prob_valid";
pub const SWEEP_HEADER: &str = "alpha,mean_diff,std_diff,n_valid,n_excluded";

const RANK_THRESHOLD: f64 = 1e-10;
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The state family a run samples from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFamily {
    RandomMixed,
    BellDiagonal,
    Werner,
    RandomPure,
    Dqc1 { register_qubits: u32 },
}

impl StateFamily {
    pub fn name(&self) -> &'static str {
        match self {
            StateFamily::RandomMixed => "random-mixed",
            StateFamily::BellDiagonal => "bell-diagonal",
            StateFamily::Werner => "werner",
            StateFamily::RandomPure => "random-pure",
            StateFamily::Dqc1 { .. } => "dqc1",
        }
    }
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "random-mixed" => StateFamily::RandomMixed,
            "bell-diagonal" => StateFamily::BellDiagonal,
            "werner" => StateFamily::Werner,
            "random-pure" => StateFamily::RandomPure,
            "dqc1" => StateFamily::Dqc1 { register_qubits: 2 },
            other => return Err(Error::InvalidConfig(format!("unknown state family `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n_states: usize,
    /// Ranks drawn uniformly for the random-mixed family; subset of {2, 3, 4}.
    pub ranks: Vec<usize>,
    pub alphas: Vec<f64>,
    pub master_seed: u64,
    pub bins: usize,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    pub family: StateFamily,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n_states: 20_000,
            ranks: vec![2, 3, 4],
            alphas: vec![0.25, 0.75],
            master_seed: 42,
            bins: 100,
            workers: 0,
            family: StateFamily::RandomMixed,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n_states == 0 {
            return bad("n_states must be at least 1".into());
        }
        if self.bins < 2 {
            return bad(format!("bins must be at least 2, got {}", self.bins));
        }
        if self.alphas.is_empty() {
            return bad("at least one alpha is required".into());
        }
        if let Some(a) = self.alphas.iter().find(|a| !(**a > 0.0 && **a <= 1.0)) {
            return bad(format!("alpha {a} is outside (0, 1]"));
        }
        if self.ranks.is_empty() {
            return bad("at least one rank is required".into());
        }
        if let Some(r) = self.ranks.iter().find(|r| !(2..=4).contains(*r)) {
            return bad(format!("rank {r} is outside {{2, 3, 4}}"));
        }
        if let StateFamily::Dqc1 { register_qubits } = self.family {
            if !(1..=6).contains(&register_qubits) {
                return bad(format!("register qubits {register_qubits} outside 1..=6"));
            }
        }
        Ok(())
    }
}

/// Seed of sample `index`: the `index`-th output of a SplitMix64 stream
/// started at `master_seed`.
pub fn derive_seed(master_seed: u64, index: u64) -> u64 {
    let mut z = master_seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One sampled state of a run.
#[derive(Debug, Clone)]
pub struct Sample {
    pub index: usize,
    pub rank: usize,
    pub seed: u64,
    pub rho: DensityMatrix,
}

pub fn draw_sample(cfg: &ExperimentConfig, index: usize) -> Result<Sample> {
    let seed = derive_seed(cfg.master_seed, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Stream 1 is reserved for choices that are not part of the state itself.
    rng.set_stream(1);
    let rho = match cfg.family {
        StateFamily::RandomMixed => {
            let rank = cfg.ranks[rng.random_range(0..cfg.ranks.len())];
            random_mixed(RandomStateSpec::new(rank, seed)?)?
        }
        StateFamily::BellDiagonal => bell_diagonal(BellDiagonalParams::sample(&mut rng))?,
        StateFamily::Werner => werner(rng.random_range(-1.0 / 3.0..=1.0 / 3.0))?,
        StateFamily::RandomPure => random_pure(2, 2, seed)?,
        StateFamily::Dqc1 { register_qubits } => random_dqc1(register_qubits, seed)?,
    };
    Ok(Sample { index, rank: rho.rank(RANK_THRESHOLD), seed, rho })
}

/// One (sample, α) evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub index: usize,
    pub rank: usize,
    pub alpha: f64,
    pub seed: u64,
    pub discord: f64,
    /// NaN when the weak probabilities are invalid.
    pub weak_discord: f64,
    pub diff: f64,
    pub prob_valid: bool,
}

/// Discord once, then weak discord for every α on the same optimal basis.
fn evaluate_sample(cfg: &ExperimentConfig, index: usize) -> Result<Vec<ExperimentRecord>> {
    let sample = draw_sample(cfg, index)?;
    let d = discord(&sample.rho)?;
    cfg.alphas
        .iter()
        .map(|&alpha| {
            let w = weak_discord_with(&sample.rho, &d, alpha)?;
            let weak = w.weak_discord.unwrap_or(f64::NAN);
            Ok(ExperimentRecord {
                index,
                rank: sample.rank,
                alpha,
                seed: sample.seed,
                discord: d.discord,
                weak_discord: weak,
                diff: weak - d.discord,
                prob_valid: w.prob_valid,
            })
        })
        .collect()
}

/// Evaluates every sample; records are ordered by sample index, then by
/// the order of `cfg.alphas`.
pub fn run_records(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))?;
    let per_sample: Vec<Vec<ExperimentRecord>> =
        pool.install(|| (0..cfg.n_states).into_par_iter().map(|i| evaluate_sample(cfg, i)).collect::<Result<_>>())?;
    Ok(per_sample.into_iter().flatten().collect())
}

/// Mean and sample standard deviation of D_w − D at one α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaStats {
    pub alpha: f64,
    pub mean_diff: f64,
    pub std_diff: f64,
    pub n_valid: usize,
    /// Records with invalid weak probabilities, left out of the statistics.
    pub n_excluded: usize,
}

fn valid_diffs(records: &[ExperimentRecord], alpha: f64) -> (Vec<f64>, usize) {
    let at_alpha = records.iter().filter(|r| r.alpha == alpha);
    let (valid, invalid): (Vec<&ExperimentRecord>, Vec<&ExperimentRecord>) = at_alpha.partition(|r| r.prob_valid);
    (valid.iter().map(|r| r.diff).collect(), invalid.len())
}

pub fn alpha_stats(records: &[ExperimentRecord], alpha: f64) -> AlphaStats {
    let (diffs, n_excluded) = valid_diffs(records, alpha);
    let n = diffs.len();
    let mean = if n == 0 { f64::NAN } else { diffs.iter().sum::<f64>() / n as f64 };
    let std = if n < 2 {
        0.0
    } else {
        (diffs.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
    };
    AlphaStats { alpha, mean_diff: mean, std_diff: std, n_valid: n, n_excluded }
}

/// Equal-width histogram of D_w − D at one α; `edges` has `counts.len() + 1`
/// entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub alpha: f64,
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

/// Bins span [min, max] of the data. A zero-width range is widened by 1e-9
/// on each side.
pub fn histogram(values: &[f64], bins: usize, alpha: f64) -> Histogram {
    let (mut lo, mut hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if values.is_empty() {
        (lo, hi) = (0.0, 0.0);
    }
    if hi <= lo {
        lo -= 1e-9;
        hi += 1e-9;
    }
    let width = (hi - lo) / bins as f64;
    let edges: Vec<f64> = (0..=bins).map(|k| if k == bins { hi } else { lo + k as f64 * width }).collect();
    let mut counts = vec![0u64; bins];
    for &v in values {
        let k = (((v - lo) / width).floor() as usize).min(bins - 1);
        counts[k] += 1;
    }
    Histogram { alpha, edges, counts }
}

/// Output of [`run_histogram`].
#[derive(Debug, Clone)]
pub struct HistogramRun {
    pub config: ExperimentConfig,
    pub records: Vec<ExperimentRecord>,
    pub histograms: Vec<Histogram>,
    pub stats: Vec<AlphaStats>,
}

pub fn run_histogram(cfg: &ExperimentConfig) -> Result<HistogramRun> {
    let records = run_records(cfg)?;
    let mut histograms = Vec::with_capacity(cfg.alphas.len());
    let mut stats = Vec::with_capacity(cfg.alphas.len());
    for &alpha in &cfg.alphas {
        let (diffs, _) = valid_diffs(&records, alpha);
        histograms.push(histogram(&diffs, cfg.bins, alpha));
        stats.push(alpha_stats(&records, alpha));
    }
    Ok(HistogramRun { config: cfg.clone(), records, histograms, stats })
}

/// Per-α mean and spread of D_w − D over one shared ensemble of states.
pub fn run_alpha_sweep(cfg: &ExperimentConfig) -> Result<Vec<AlphaStats>> {
    if cfg.alphas.len() < 2 {
        return Err(Error::InvalidConfig("a sweep needs at least two alphas".into()));
    }
    let records = run_records(cfg)?;
    Ok(cfg.alphas.iter().map(|&a| alpha_stats(&records, a)).collect())
}

pub fn records_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 120);
    out.push_str(RECORD_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.index,
            r.rank,
            sig17(r.alpha),
            r.seed,
            sig17(r.discord),
            sig17(r.weak_discord),
            sig17(r.diff),
            r.prob_valid
        );
    }
    out
}

pub fn sweep_csv(rows: &[AlphaStats]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            sig17(r.alpha),
            sig17(r.mean_diff),
            sig17(r.std_diff),
            r.n_valid,
            r.n_excluded
        );
    }
    out
}

#[derive(Serialize)]
struct RunMetadata<'a> {
    family: &'a str,
    n_states: usize,
    ranks: &'a [usize],
    alphas: Vec<Sig17>,
    master_seed: u64,
    seed_derivation: &'a str,
    diagonal_distribution: &'a str,
    ensemble: &'a str,
    optimizer: String,
}

fn metadata(cfg: &ExperimentConfig) -> RunMetadata<'_> {
    use crate::correlations::{GRID_PHI, GRID_THETA, REFINE_STARTS, REFINE_TOLERANCE};
    RunMetadata {
        family: cfg.family.name(),
        n_states: cfg.n_states,
        ranks: &cfg.ranks,
        alphas: sig17_vec(&cfg.alphas),
        master_seed: cfg.master_seed,
        seed_derivation: "sample seed = splitmix64 output #index of master_seed",
        diagonal_distribution: "rank weights i.i.d. uniform on (0,1], normalized to unit trace",
        ensemble: "states shared across all alpha values",
        optimizer: format!(
            "{GRID_THETA}x{GRID_PHI} hemisphere grid, Nelder-Mead from {REFINE_STARTS} best nodes, tol {REFINE_TOLERANCE:e}"
        ),
    }
}

#[derive(Serialize)]
struct StatsJson {
    alpha: Sig17,
    mean_diff: Sig17,
    std_diff: Sig17,
    n_valid: usize,
    n_excluded: usize,
}

impl From<&AlphaStats> for StatsJson {
    fn from(s: &AlphaStats) -> Self {
        Self {
            alpha: Sig17(s.alpha),
            mean_diff: Sig17(s.mean_diff),
            std_diff: Sig17(s.std_diff),
            n_valid: s.n_valid,
            n_excluded: s.n_excluded,
        }
    }
}

/// Histogram bin edges and counts per α, summary statistics, and run metadata.
pub fn histogram_json(run: &HistogramRun) -> Result<String> {
    #[derive(Serialize)]
    struct HistJson {
        alpha: Sig17,
        edges: Vec<Sig17>,
        counts: Vec<u64>,
    }
    #[derive(Serialize)]
    struct Out<'a> {
        metadata: RunMetadata<'a>,
        bins: usize,
        stats: Vec<StatsJson>,
        histograms: Vec<HistJson>,
    }
    let out = Out {
        metadata: metadata(&run.config),
        bins: run.config.bins,
        stats: run.stats.iter().map(StatsJson::from).collect(),
        histograms: run
            .histograms
            .iter()
            .map(|h| HistJson { alpha: Sig17(h.alpha), edges: sig17_vec(&h.edges), counts: h.counts.clone() })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

/// Metadata and statistics of a sweep, for the JSON file written next to the CSV.
pub fn sweep_json(cfg: &ExperimentConfig, rows: &[AlphaStats]) -> Result<String> {
    #[derive(Serialize)]
    struct Out<'a> {
        metadata: RunMetadata<'a>,
        stats: Vec<StatsJson>,
    }
    let out = Out { metadata: metadata(cfg), stats: rows.iter().map(StatsJson::from).collect() };
    Ok(serde_json::to_string_pretty(&out)?)
}

/// Per-α part of an [`AnalysisReport`].
#[derive(Debug, Clone, Serialize)]
pub struct AlphaReport {
    pub alpha: Sig17,
    pub weak_discord: Sig17,
    pub diff: Sig17,
    pub weak_probs: Vec<Sig17>,
    pub disturbance_probability: Sig17,
    pub alternative_weak_discord: Sig17,
    pub coincides: bool,
    pub prob_valid: bool,
}

/// Everything computed for a single state.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    #[serde(rename = "dimA")]
    pub dim_a: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    pub mutual_info: Sig17,
    pub max_j: Sig17,
    pub discord: Sig17,
    pub theta: Sig17,
    pub phi: Sig17,
    pub probs: Vec<Sig17>,
    pub cond_entropies: Vec<Sig17>,
    pub quantum_work: Sig17,
    pub classical_work: Sig17,
    pub alphas: Vec<AlphaReport>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn analyze_density(rho: &DensityMatrix, alphas: &[f64]) -> Result<AnalysisReport> {
    let d = discord(rho)?;
    let per_alpha = alphas
        .iter()
        .map(|&alpha| {
            let w = weak_discord_with(rho, &d, alpha)?;
            let weak = w.weak_discord.unwrap_or(f64::NAN);
            Ok(AlphaReport {
                alpha: Sig17(alpha),
                weak_discord: Sig17(weak),
                diff: Sig17(weak - d.discord),
                weak_probs: sig17_vec(&w.weak_probs),
                disturbance_probability: Sig17(disturbance_probability(rho, alpha)?),
                alternative_weak_discord: Sig17(alternative_weak_discord(rho, alpha)?),
                coincides: w.coincides,
                prob_valid: w.prob_valid,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        dim_a: rho.dim_a(),
        dim_b: rho.dim_b(),
        mutual_info: Sig17(d.mutual_info),
        max_j: Sig17(d.max_j),
        discord: Sig17(d.discord),
        theta: Sig17(d.optimal.theta),
        phi: Sig17(d.optimal.phi),
        probs: sig17_vec(&d.probs),
        cond_entropies: sig17_vec(&d.cond_entropies),
        quantum_work: Sig17(quantum_work(rho)?),
        classical_work: Sig17(classical_work(rho, d.optimal)?),
        alphas: per_alpha,
    })
}

/// Loads a density-matrix JSON file and analyzes it.
pub fn analyze_state(path: impl AsRef<Path>, alphas: &[f64]) -> Result<AnalysisReport> {
    if let Some(a) = alphas.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(Error::InvalidAlpha(*a));
    }
    let text = std::fs::read_to_string(path)?;
    let rho = DensityFile::from_json(&text)?;
    analyze_density(&rho, alphas)
}

/// Parses `0.1,0.5` or an inclusive range `start:stop:step`. Range values
/// are rounded to 12 decimals so that `0.1:0.9:0.1` yields exactly 0.3.
pub fn parse_alphas(text: &str) -> Result<Vec<f64>> {
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::InvalidConfig(format!("cannot parse `{s}` as a number")))
    };
    let parts: Vec<&str> = text.split(':').collect();
    let alphas = match parts.as_slice() {
        [single] => single.split(',').map(num).collect::<Result<Vec<_>>>()?,
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step.is_nan() || step <= 0.0 || stop < start {
                return Err(Error::InvalidConfig(format!("bad range `{text}`")));
            }
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            (0..=n).map(|k| ((start + k as f64 * step) * 1e12).round() / 1e12).collect()
        }
        _ => return Err(Error::InvalidConfig(format!("bad alpha list `{text}`"))),
    };
    if let Some(a) = alphas.iter().find(|a| !(**a >= 0.0 && **a <= 1.0)) {
        return Err(Error::InvalidAlpha(*a));
    }
    Ok(alphas)
}

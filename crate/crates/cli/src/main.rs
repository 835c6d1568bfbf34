//! `weakdiscord`: discord and weak-discord experiments from the command line.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use weakdiscord_core::experiment::{
    histogram_json, parse_alphas, records_csv, run_alpha_sweep, run_histogram, sweep_csv, sweep_json, analyze_state,
    ExperimentConfig, StateFamily,
};
use weakdiscord_core::format::sig17;
use weakdiscord_core::states::{
    bell_diagonal, random_dqc1, random_mixed, random_pure, werner, BellDiagonalParams, RandomStateSpec,
};
use weakdiscord_core::DensityFile;

#[derive(Parser)]
#[command(name = "weakdiscord", version, about = "Quantum discord and weak quantum discord")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-sample D_w − D records and per-alpha histograms.
    Histogram(HistogramArgs),
    /// Mean and spread of D_w − D over an alpha grid.
    Sweep(SweepArgs),
    /// Full report for one state read from JSON.
    Analyze(AnalyzeArgs),
    /// Write a state of a named family as JSON.
    MakeState(MakeStateArgs),
}

#[derive(Args)]
struct Ensemble {
    /// Number of sampled states.
    #[arg(long = "n")]
    n: Option<usize>,
    /// Ranks drawn uniformly for random-mixed states.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    ranks: Vec<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// State family: random-mixed, bell-diagonal, werner, random-pure, dqc1.
    #[arg(long, default_value = "random-mixed")]
    family: String,
    /// Register qubits for the dqc1 family.
    #[arg(long, default_value_t = 2)]
    qubits: u32,
}

#[derive(Args)]
struct HistogramArgs {
    #[command(flatten)]
    ensemble: Ensemble,
    /// Comma list or start:stop:step.
    #[arg(long, default_value = "0.25,0.75")]
    alphas: String,
    #[arg(long, default_value_t = 100)]
    bins: usize,
    /// Records CSV.
    #[arg(long, default_value = "hist.csv")]
    out: PathBuf,
    /// Histogram JSON; defaults to the CSV path with a .json extension.
    #[arg(long)]
    hist_json: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    ensemble: Ensemble,
    #[arg(long, default_value = "0.1:0.9:0.1")]
    alphas: String,
    /// Sweep table CSV.
    #[arg(long, default_value = "sweep.csv")]
    out: PathBuf,
    /// Metadata JSON; defaults to the CSV path with a .json extension.
    #[arg(long)]
    meta_json: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    state: PathBuf,
    #[arg(long, default_value = "0.25,0.5,0.75")]
    alphas: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MakeStateArgs {
    family: String,
    /// Correlation coefficients: c1,c2,c3 for bell-diagonal, c for werner.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    c: Vec<f64>,
    #[arg(long, default_value_t = 2)]
    rank: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Register qubits for dqc1.
    #[arg(long, default_value_t = 2)]
    qubits: u32,
    /// Subsystem dimensions for random-pure.
    #[arg(long, value_delimiter = ',', default_value = "2,2")]
    dims: Vec<usize>,
    /// Write the state here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn config(e: &Ensemble, alphas: &str, bins: usize, default_n: usize) -> Result<ExperimentConfig> {
    let mut family: StateFamily = e.family.parse()?;
    if let StateFamily::Dqc1 { .. } = family {
        family = StateFamily::Dqc1 { register_qubits: e.qubits };
    }
    let cfg = ExperimentConfig {
        n_states: e.n.unwrap_or(default_n),
        ranks: e.ranks.clone(),
        alphas: parse_alphas(alphas)?,
        master_seed: e.seed,
        bins,
        workers: e.workers,
        family,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn histogram(args: HistogramArgs) -> Result<()> {
    let cfg = config(&args.ensemble, &args.alphas, args.bins, 20_000)?;
    let run = run_histogram(&cfg)?;
    write(&args.out, &records_csv(&run.records))?;
    let json_path = args.hist_json.unwrap_or_else(|| args.out.with_extension("json"));
    write(&json_path, &histogram_json(&run)?)?;
    for s in &run.stats {
        eprintln!(
            "alpha={} mean_diff={} std_diff={} valid={} excluded={}",
            sig17(s.alpha),
            sig17(s.mean_diff),
            sig17(s.std_diff),
            s.n_valid,
            s.n_excluded
        );
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let cfg = config(&args.ensemble, &args.alphas, 2, 10_000)?;
    let rows = run_alpha_sweep(&cfg)?;
    write(&args.out, &sweep_csv(&rows))?;
    let json_path = args.meta_json.unwrap_or_else(|| args.out.with_extension("json"));
    write(&json_path, &sweep_json(&cfg, &rows)?)
}

fn analyze(args: AnalyzeArgs) -> Result<()> {
    let alphas = parse_alphas(&args.alphas)?;
    let report =
        analyze_state(&args.state, &alphas).with_context(|| format!("analyzing {}", args.state.display()))?;
    emit(args.out.as_deref(), &report.to_json()?)
}

fn make_state(args: MakeStateArgs) -> Result<()> {
    let rho = match args.family.as_str() {
        "bell-diagonal" => {
            let [c1, c2, c3] = args.c[..] else { bail!("bell-diagonal needs --c c1,c2,c3") };
            bell_diagonal(BellDiagonalParams::new(c1, c2, c3)?)?
        }
        "werner" => {
            let [c] = args.c[..] else { bail!("werner needs a single --c value") };
            werner(c)?
        }
        "random-mixed" => random_mixed(RandomStateSpec::new(args.rank, args.seed)?)?,
        "random-pure" => {
            let [da, db] = args.dims[..] else { bail!("--dims takes dimA,dimB") };
            random_pure(da, db, args.seed)?
        }
        "dqc1" => random_dqc1(args.qubits, args.seed)?,
        other => bail!("unknown state family `{other}`"),
    };
    emit(args.out.as_deref(), &DensityFile::from(&rho).to_json()?)
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Histogram(a) => histogram(a),
        Command::Sweep(a) => sweep(a),
        Command::Analyze(a) => analyze(a),
        Command::MakeState(a) => make_state(a),
    }
}
